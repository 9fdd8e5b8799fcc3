#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "field.hpp"

namespace wgb {

using Row = std::vector<coeff_t>;

/// Row echelon form built one row at a time; pivots are the leftmost nonzero column.
///
/// With tracking enabled each stored row remembers its expression in the inserted
/// rows, so a dependent row yields its relation.
class Echelon {
public:
    Echelon(const PrimeField& F, std::size_t cols, bool track = false) : F_(F), cols_(cols), track_(track)
    {
        pivot_of_.assign(cols, npos);
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t ops() const noexcept { return ops_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivcol_; }
    const Row& row(std::size_t k) const { return rows_[k]; }
    bool has_pivot(std::size_t c) const { return pivot_of_[c] != npos; }

    /// Reduces v in place; returns the combination of inserted rows that was subtracted.
    Row reduce(Row& v) const
    {
        Row comb(track_ ? inserted_ : 0, 0);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!v[c]) continue;
            std::size_t k = pivot_of_[c];
            if (k == npos) continue;
            coeff_t a = v[c];
            const Row& r = rows_[k];
            for (std::size_t j = c; j < cols_; ++j)
                if (r[j]) v[j] = F_.sub_mul(v[j], a, r[j]);
            ops_ += cols_ - c;
            if (track_) {
                const Row& t = combos_[k];
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (t[j]) comb[j] = F_.add(comb[j], F_.mul(a, t[j]));
                ops_ += t.size();
            }
        }
        return comb;
    }

    /// Inserts v; returns its pivot column, or nothing when v is dependent.
    /// For a dependent row, relation() gives v = sum relation[j] * (j-th independent row inserted).
    std::optional<std::size_t> insert(Row v)
    {
        Row comb = reduce(v);
        std::size_t c = 0;
        while (c < cols_ && !v[c]) ++c;
        if (c == cols_) {
            relation_ = std::move(comb);
            return std::nullopt;
        }
        std::size_t idx = inserted_++;
        coeff_t s = F_.inv(v[c]);
        for (std::size_t j = c; j < cols_; ++j) v[j] = F_.mul(v[j], s);
        if (track_) {
            // stored row = s * (v_idx - comb)
            Row t(idx + 1, 0);
            for (std::size_t j = 0; j < comb.size(); ++j) t[j] = F_.mul(F_.neg(comb[j]), s);
            t[idx] = s;
            for (auto& old : combos_) old.resize(idx + 1, 0);
            combos_.push_back(std::move(t));
        }
        pivot_of_[c] = rows_.size();
        pivcol_.push_back(c);
        rows_.push_back(std::move(v));
        return c;
    }

    const Row& relation() const noexcept { return relation_; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    PrimeField F_;
    std::size_t cols_;
    bool track_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_, combos_;
    std::vector<std::size_t> pivot_of_, pivcol_;
    Row relation_;
    mutable std::uint64_t ops_ = 0;
};

inline std::size_t rank_mod_p(const std::vector<Row>& rows, const PrimeField& F)
{
    if (rows.empty()) return 0;
    Echelon e(F, rows[0].size());
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

} // namespace wgb
