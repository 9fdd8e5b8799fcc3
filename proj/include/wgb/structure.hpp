#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bounds.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "matrix_gb.hpp"
#include "monomial_ideal.hpp"
#include "series.hpp"
#include "system.hpp"

namespace wgb {

/// w_{i+1} | w_i for every i.
inline bool is_reverse_chain_divisible(const WeightSystem& W)
{
    for (std::size_t i = 0; i + 1 < W.size(); ++i)
        if (W[i] % W[i + 1] != 0) return false;
    return true;
}

/// window < 0 means the verdict is exact; otherwise it covers degrees 0..window.
struct Verdict {
    bool holds = false;
    long window = -1;
    std::string basis = "exact";
};

inline GroebnerBasis structure_gb(const PolySystem& sys)
{
    return buchberger(sys.with_order(MonomialOrder::wgrevlex(sys.weights())));
}

/// Hilbert series of R / <G> up to degree N, from the leading monomials.
inline HilbertSeries quotient_hilbert_series(const GroebnerBasis& g, long N)
{
    return monomial_quotient_series(g.leading_monomials(), g.ring->weights(), N);
}

inline TPoly quotient_numerator(const GroebnerBasis& g)
{
    auto num = hilbert_numerator(g.leading_monomials(), g.ring->weights());
    tpoly_trim(num);
    return num;
}

/// Compares the quotient numerator with prod(1 - T^{d_i}); equal numerators mean equal series.
inline Verdict is_regular_sequence(const PolySystem& sys)
{
    sys.require_w_homogeneous();
    if (sys.size() > sys.nvars())
        throw arity_error(std::to_string(sys.size()) + " polynomials in " + std::to_string(sys.nvars()) + " variables");
    Verdict v;
    auto expect = regular_numerator(sys.degrees());
    tpoly_trim(expect);
    v.holds = quotient_numerator(structure_gb(sys)) == expect;
    return v;
}

/// (f_1..f_m, X_{m+1}..X_n) is regular.
inline Verdict is_noether_position(const PolySystem& sys, std::size_t m)
{
    if (m > sys.size() || m > sys.nvars()) throw arity_error("prefix length " + std::to_string(m) + " out of range");
    auto ext = sys.prefix(m);
    auto D = ext.degrees();
    for (std::size_t j = m; j < sys.nvars(); ++j) {
        ext.polys.push_back(Polynomial::variable(sys.ring, j));
        D = D.appended(sys.weights()[j]);
    }
    ext.declared = D;
    return is_regular_sequence(ext);
}

/// f_1..f_m with X_{m+1} = ... = X_n = 0, in K[X_1..X_m].
inline PolySystem restrict_to_leading_variables(const PolySystem& sys, std::size_t m)
{
    std::vector<std::string> names(sys.ring->names().begin(), sys.ring->names().begin() + static_cast<long>(m));
    auto r = Ring::make(sys.weights().slice(0, m), sys.field().modulus(), names);
    std::vector<Polynomial> ps;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Term> ts;
        for (const auto& t : sys.polys[i]) {
            bool zero = false;
            for (std::size_t j = m; j < sys.nvars(); ++j)
                if (t.m[j]) zero = true;
            if (zero) continue;
            ts.push_back({Monomial(t.m.begin(), t.m.begin() + static_cast<long>(m)), t.c});
        }
        ps.emplace_back(r, std::move(ts));
    }
    return PolySystem(r, std::move(ps));
}

/// Noether position through the restricted system F(X_1..X_m, 0..0).
inline Verdict is_noether_position_restricted(const PolySystem& sys, std::size_t m)
{
    if (m > sys.size() || m > sys.nvars()) throw arity_error("prefix length " + std::to_string(m) + " out of range");
    if (m == 0) return {true, -1, "exact"};
    auto r = restrict_to_leading_variables(sys, m);
    for (const auto& p : r.polys)
        if (p.is_zero()) return {false, -1, "exact"};
    std::vector<int> d;
    for (std::size_t i = 0; i < m; ++i) d.push_back(static_cast<int>(sys.polys[i].wdegree()));
    r.declared = DegreeSystem(d);
    return is_regular_sequence(r);
}

struct SnpVerdict {
    Verdict verdict;
    std::optional<std::size_t> first_failing_prefix;
};

inline SnpVerdict is_snp(const PolySystem& sys)
{
    SnpVerdict s;
    s.verdict.holds = true;
    std::size_t m = std::min(sys.size(), sys.nvars());
    for (std::size_t i = 1; i <= m; ++i)
        if (!is_noether_position(sys, i).holds) {
            s.verdict.holds = false;
            s.first_failing_prefix = i;
            break;
        }
    return s;
}

struct RankFailure {
    std::size_t i;
    long d;
    long deficiency;
};

struct SemiregularVerdict {
    Verdict rank;
    Verdict series;
    bool series_certifying = false;
    bool inconclusive = false;
    std::optional<RankFailure> first_failure;
    std::optional<std::size_t> first_series_mismatch;
};

/// S_{D,W} with every coefficient from the first non-positive one on set to zero, degrees 0..N.
inline std::vector<bigint> truncated_window(const DegreeSystem& D, const WeightSystem& W, long N)
{
    auto s = expand_rational(D, W, N);
    std::vector<bigint> out = s.coeffs;
    bool cut = false;
    for (auto& c : out) {
        if (c <= 0) cut = true;
        if (cut) c = 0;
    }
    return out;
}

namespace detail {

inline std::vector<Monomial> standard_of_degree(const std::vector<Monomial>& lt, const WeightSystem& W, long d)
{
    std::vector<Monomial> out;
    if (d < 0) return out;
    for_each_monomial_of_degree(W, d, [&](const Monomial& m) {
        for (const auto& l : lt)
            if (l.divides(m)) return;
        out.push_back(m);
    });
    return out;
}

} // namespace detail

/// Full rank of every multiplication map by f_i from degree d - d_i to degree d of R / (f_1..f_{i-1}), d <= d_max,
/// and the series of every prefix quotient against its truncated expected series.
inline SemiregularVerdict is_semiregular(const PolySystem& sys, std::optional<long> d_max = std::nullopt)
{
    sys.require_w_homogeneous();
    const auto& W = sys.weights();
    auto D = sys.degrees();
    long N = d_max ? *d_max : default_window(W, D);
    SemiregularVerdict v;
    v.rank = {true, N, "rank"};
    v.series = {true, N, "series"};
    bool divisible = true;
    for (int d : D)
        if (d % W[0] != 0) divisible = false;
    v.series_certifying = is_reverse_chain_divisible(W) && divisible;
    if (sys.size() > sys.nvars()) {
        auto s = expand_rational(D, W, N);
        bool seen = false;
        for (const auto& c : s.coeffs)
            if (c <= 0) seen = true;
        v.inconclusive = !seen;
    }

    const auto& F = sys.field();
    std::vector<Polynomial> prefix;
    GroebnerBasis g{sys.ring, {}, true, {}};
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& f = sys.polys[i];
        long di = D[i];
        auto lt = g.leading_monomials();
        if (!v.rank.holds) break;
        for (long d = std::max(0L, di); d <= N && v.rank.holds; ++d) {
            auto src = detail::standard_of_degree(lt, W, d - di);
            auto dst = detail::standard_of_degree(lt, W, d);
            if (src.empty() || dst.empty()) continue;
            std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
            for (std::size_t k = 0; k < dst.size(); ++k) pos.emplace(dst[k], k);
            Echelon E(F, dst.size());
            for (const auto& b : src) {
                Row row(dst.size(), 0);
                for (const auto& t : reduce(f.mul_term(b), g.polys)) row[pos.at(t.m)] = t.c;
                E.insert(std::move(row));
            }
            long full = static_cast<long>(std::min(src.size(), dst.size()));
            long rk = static_cast<long>(E.rank());
            if (rk < full) {
                v.rank.holds = false;
                v.first_failure = RankFailure{i + 1, d, full - rk};
            }
        }
        prefix.push_back(f);
        g = structure_gb(PolySystem(sys.ring, prefix));
        auto hs = quotient_hilbert_series(g, N);
        auto expect = truncated_window(D.prefix(i + 1), W, N);
        if (v.series.holds && hs.coeffs != expect) {
            v.series.holds = false;
            v.first_series_mismatch = i + 1;
        }
    }
    return v;
}

/// A divisor of m2 of W-degree exactly d1, by exhaustive search.
inline std::optional<Monomial> divisor_of_wdegree(const Monomial& m2, long d1, const WeightSystem& W)
{
    if (wdeg(m2, W) < d1) throw error("the monomial has W-degree below " + std::to_string(d1));
    std::size_t n = m2.size();
    Monomial cur(n);
    std::optional<Monomial> found;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
        if (found) return;
        if (i == n) {
            if (rest == 0) found = cur;
            return;
        }
        for (exp_t e = 0; e <= m2[i] && static_cast<long>(e) * W[i] <= rest; ++e) {
            cur[i] = e;
            rec(i + 1, rest - static_cast<long>(e) * W[i]);
        }
        cur[i] = 0;
    };
    rec(0, d1);
    return found;
}

struct StructureReport {
    Verdict regular;
    std::vector<Verdict> noether_position;
    SnpVerdict snp;
    SemiregularVerdict semiregular;
    bool reverse_chain_divisible = false;
    bool strongly_w_compatible = false;
    bool degrees_dominate = false;
    bool w1_divides_degrees = false;
    bool unit_last_weight = false;
};

inline StructureReport structure_report(const PolySystem& sys, std::optional<long> d_max = std::nullopt)
{
    sys.require_w_homogeneous();
    const auto& W = sys.weights();
    auto D = sys.degrees();
    StructureReport r;
    std::size_t m = std::min(sys.size(), sys.nvars());
    if (sys.size() <= sys.nvars()) r.regular = is_regular_sequence(sys);
    for (std::size_t i = 1; i <= m; ++i) r.noether_position.push_back(is_noether_position(sys, i));
    r.snp.verdict.holds = true;
    for (std::size_t i = 0; i < r.noether_position.size(); ++i)
        if (!r.noether_position[i].holds) {
            r.snp.verdict.holds = false;
            r.snp.first_failing_prefix = i + 1;
            break;
        }
    r.semiregular = is_semiregular(sys, d_max);
    r.reverse_chain_divisible = is_reverse_chain_divisible(W);
    r.strongly_w_compatible = D.size() <= W.size() && is_strongly_w_compatible(W, D);
    r.degrees_dominate = degrees_dominate_previous_weights(W, D);
    r.w1_divides_degrees = true;
    for (int d : D)
        if (d % W[0] != 0) r.w1_divides_degrees = false;
    r.unit_last_weight = W[W.size() - 1] == 1;
    return r;
}

} // namespace wgb
