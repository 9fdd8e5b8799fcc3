#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "monomial_ideal.hpp"
#include "series.hpp"
#include "system.hpp"

namespace wgb {

/// The degree cap was reached before completeness was certified.
class window_exhausted : public error {
public:
    window_exhausted(const std::string& what, std::vector<Polynomial> partial, long degree)
        : error(what), partial(std::move(partial)), degree(degree)
    {
    }
    std::vector<Polynomial> partial;
    long degree;
};

struct MatrixGbOptions {
    /// Numerator N(T) of the expected quotient series N(T) / prod(1 - T^{w_i}).
    std::optional<TPoly> expected_numerator;
    std::optional<long> max_degree;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

inline TPoly regular_numerator(const DegreeSystem& D)
{
    TPoly num{1};
    for (int d : D) num = tpoly_mul(num, one_minus_t(d));
    return num;
}

/// Truncated semi-regular series times prod(1 - T^{w_i}).
inline TPoly semiregular_numerator(const DegreeSystem& D, const WeightSystem& W)
{
    long N = D.sum() + W.max() + 1;
    auto t = truncate_semiregular(expand_rational(D, W, N));
    TPoly num(t.series.coeffs.begin(), t.series.coeffs.end());
    for (int w : W) num = tpoly_mul(num, one_minus_t(w));
    tpoly_trim(num);
    return num;
}

namespace detail {

inline bool divisible_by_any(const Monomial& u, const std::vector<Monomial>& gens)
{
    for (const auto& g : gens)
        if (g.divides(u)) return true;
    return false;
}

/// Is every S-pair of G with lcm above degree d covered by a criterion down to pairs of degree <= d?
inline bool pairs_resolved(const std::vector<Monomial>& lt, const WeightSystem& W, long d)
{
    std::size_t g = lt.size();
    std::map<std::pair<std::size_t, std::size_t>, int> memo;
    std::function<bool(std::size_t, std::size_t)> ok = [&](std::size_t i, std::size_t j) -> bool {
        if (i > j) std::swap(i, j);
        Monomial L = lcm(lt[i], lt[j]);
        if (wdeg(L, W) <= d || lt[i].coprime_with(lt[j])) return true;
        auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second == 1;
        memo[key] = 0;
        bool res = false;
        for (std::size_t k = 0; k < g && !res; ++k) {
            if (k == i || k == j || !lt[k].divides(L)) continue;
            Monomial a = lcm(lt[i], lt[k]), b = lcm(lt[j], lt[k]);
            if (a == L || b == L) continue;
            res = ok(i, k) && ok(j, k);
        }
        memo[key] = res ? 1 : 0;
        return res;
    };
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            if (!ok(i, j)) return false;
    return true;
}

} // namespace detail

/// Degree-by-degree Macaulay matrices with the F5 rule, for W-homogeneous input under W-grevlex.
inline GroebnerBasis matrix_gb_whomog(const PolySystem& sys, const MatrixGbOptions& opt = {})
{
    sys.require_w_homogeneous();
    const auto& W = sys.weights();
    const auto& o = sys.ring->order();
    if (!(o == MonomialOrder::wgrevlex(W))) throw error("the matrix engine needs the W-grevlex order, got " + o.name());
    const auto& F = sys.field();

    GroebnerBasis out;
    out.ring = sys.ring;
    std::vector<Polynomial> f;
    std::vector<long> deg;
    for (const auto& p : sys.polys)
        if (!p.is_zero()) {
            f.push_back(p);
            deg.push_back(p.wdegree());
        }
    if (f.empty()) {
        out.reduced = true;
        out.stats.stop_reason = "zero ideal";
        return out;
    }
    for (const auto& p : f)
        if (p.is_constant()) {
            out.polys = {Polynomial::constant(sys.ring, 1)};
            out.reduced = true;
            out.stats.observed_dreg = 0;
            out.stats.stop_reason = "unit ideal";
            return out;
        }

    std::size_t m = f.size();
    long dmin = *std::min_element(deg.begin(), deg.end());
    long dtop = *std::max_element(deg.begin(), deg.end());
    std::optional<TPoly> expected = opt.expected_numerator;
    if (expected) tpoly_trim(*expected);

    std::vector<std::vector<Monomial>> prefix_gens(m);
    std::vector<Monomial> lt;
    std::vector<Polynomial> G;

    for (long d = dmin;; ++d) {
        if (opt.max_degree && d > *opt.max_degree)
            throw window_exhausted("no completeness certificate up to degree " + std::to_string(*opt.max_degree),
                                   reduce_polys(G), *opt.max_degree);
        if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
            throw window_exhausted("time budget exhausted at degree " + std::to_string(d), reduce_polys(G), d - 1);
        auto cols = monomials_of_degree(W, d);
        if (!cols.empty()) {
            std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return o.greater(a, b); });
            std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
            for (std::size_t c = 0; c < cols.size(); ++c) idx.emplace(cols[c], c);
            Echelon E(F, cols.size());
            std::size_t rows = 0;
            std::vector<Monomial> earlier;
            for (std::size_t i = 0; i < m; ++i) {
                if (deg[i] <= d) {
                    auto mult = monomials_of_degree(W, d - deg[i]);
                    std::sort(mult.begin(), mult.end(), [&](const Monomial& a, const Monomial& b) { return o.less(a, b); });
                    std::size_t r0 = E.rank();
                    for (const auto& u : mult) {
                        if (detail::divisible_by_any(u, earlier)) continue;
                        Row row(cols.size(), 0);
                        for (const auto& t : f[i]) row[idx.at(t.m * u)] = t.c;
                        E.insert(std::move(row));
                        ++rows;
                    }
                    for (std::size_t k = r0; k < E.rank(); ++k) {
                        const Monomial& mk = cols[E.pivots()[k]];
                        if (!detail::divisible_by_any(mk, earlier) && !detail::divisible_by_any(mk, prefix_gens[i]))
                            prefix_gens[i].push_back(mk);
                    }
                }
                earlier.insert(earlier.end(), prefix_gens[i].begin(), prefix_gens[i].end());
            }
            out.stats.max_matrix_rows = std::max(out.stats.max_matrix_rows, rows);
            out.stats.max_matrix_cols = std::max(out.stats.max_matrix_cols, cols.size());
            if (rows) {
                out.stats.observed_dreg = d;
                out.stats.pairs_considered += rows;
                out.stats.reductions_to_zero += rows - E.rank();
            }
            std::size_t found = lt.size();
            for (std::size_t k = 0; k < E.rank(); ++k) {
                std::size_t c = E.pivots()[k];
                if (detail::divisible_by_any(cols[c], {lt.begin(), lt.begin() + static_cast<long>(found)})) continue;
                std::vector<Term> ts;
                const Row& r = E.row(k);
                for (std::size_t j = c; j < cols.size(); ++j)
                    if (r[j]) ts.push_back({cols[j], r[j]});
                lt.push_back(cols[c]);
                G.push_back(Polynomial::from_sorted(sys.ring, std::move(ts)));
            }
        }
        if (d < dtop) continue;
        if (expected) {
            TPoly num = hilbert_numerator(lt, W);
            tpoly_trim(num);
            if (num == *expected) {
                out.stats.stop_reason = "hilbert series";
                break;
            }
        }
        if (detail::pairs_resolved(lt, W, d)) {
            out.stats.stop_reason = "pairs resolved";
            break;
        }
    }
    out.polys = std::move(G);
    return reduce_basis(std::move(out));
}

} // namespace wgb
