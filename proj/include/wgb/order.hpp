#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "weights.hpp"

namespace wgb {

enum class OrderKind { wgrevlex, lex, block };

/// Monomial order on K[X_1..X_n].
///
/// wgrevlex(W) is the pullback of grevlex through X_i -> t_i^{w_i}: two monomials
/// are compared through their images. block(k) compares the first k positions by
/// W-grevlex first and breaks ties with W-grevlex on the remaining positions.
/// An optional permutation lists variable indices from the largest position down.
class MonomialOrder {
public:
    MonomialOrder() = default;

    static MonomialOrder wgrevlex(WeightSystem w) { return MonomialOrder(OrderKind::wgrevlex, std::move(w), 0); }
    static MonomialOrder grevlex(std::size_t n) { return wgrevlex(WeightSystem::ones(n)); }
    static MonomialOrder lex(std::size_t n) { return MonomialOrder(OrderKind::lex, WeightSystem::ones(n), 0); }
    static MonomialOrder block(WeightSystem w, std::size_t k)
    {
        if (k >= w.size())
            throw error("block order must leave at least one variable, k=" + std::to_string(k));
        return MonomialOrder(OrderKind::block, std::move(w), k);
    }

    MonomialOrder with_permutation(std::vector<std::size_t> perm) const
    {
        std::vector<std::size_t> check = perm;
        std::sort(check.begin(), check.end());
        for (std::size_t i = 0; i < check.size(); ++i)
            if (check[i] != i || check.size() != size()) throw error("invalid variable permutation");
        MonomialOrder o = *this;
        o.perm_ = std::move(perm);
        return o;
    }

    OrderKind kind() const noexcept { return kind_; }
    const WeightSystem& weights() const noexcept { return w_; }
    std::size_t block_size() const noexcept { return k_; }
    std::size_t size() const noexcept { return w_.size(); }
    const std::optional<std::vector<std::size_t>>& permutation() const noexcept { return perm_; }

    /// Is the order compatible with the W-grading it carries (larger W-degree wins)?
    bool is_graded() const noexcept { return kind_ == OrderKind::wgrevlex; }

    /// -1, 0, 1 for u < v, u = v, u > v.
    int compare(const Monomial& u, const Monomial& v) const
    {
        if (u.size() != size() || v.size() != size())
            throw dimension_error("order on " + std::to_string(size()) + " variables applied to monomials of size " +
                                  std::to_string(u.size()) + "/" + std::to_string(v.size()));
        switch (kind_) {
        case OrderKind::lex:
            for (std::size_t j = 0; j < size(); ++j) {
                std::size_t i = var(j);
                if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
            }
            return 0;
        case OrderKind::wgrevlex:
            return grevlex_images(u, v, 0, size());
        case OrderKind::block:
            if (int c = grevlex_images(u, v, 0, k_)) return c;
            return grevlex_images(u, v, k_, size());
        }
        return 0;
    }

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
    bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

    std::string name() const
    {
        switch (kind_) {
        case OrderKind::lex: return "lex";
        case OrderKind::wgrevlex: return "wgrevlex";
        case OrderKind::block: return "elim:" + std::to_string(k_);
        }
        return "?";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(OrderKind kind, WeightSystem w, std::size_t k) : kind_(kind), w_(std::move(w)), k_(k) {}

    std::size_t var(std::size_t pos) const { return perm_ ? (*perm_)[pos] : pos; }

    // grevlex on the images t_i^{w_i alpha_i} of the positions [lo, hi)
    int grevlex_images(const Monomial& u, const Monomial& v, std::size_t lo, std::size_t hi) const
    {
        long du = 0, dv = 0;
        for (std::size_t j = lo; j < hi; ++j) {
            std::size_t i = var(j);
            du += static_cast<long>(w_[i]) * u[i];
            dv += static_cast<long>(w_[i]) * v[i];
        }
        if (du != dv) return du > dv ? 1 : -1;
        for (std::size_t j = hi; j-- > lo;) {
            std::size_t i = var(j);
            long a = static_cast<long>(w_[i]) * u[i];
            long b = static_cast<long>(w_[i]) * v[i];
            if (a != b) return a < b ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_ = OrderKind::wgrevlex;
    WeightSystem w_{1};
    std::size_t k_ = 0;
    std::optional<std::vector<std::size_t>> perm_;
};

} // namespace wgb
