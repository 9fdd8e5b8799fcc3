#pragma once

#include <algorithm>
#include <vector>

#include "bigint.hpp"
#include "enumerate.hpp"
#include "monomial.hpp"
#include "weights.hpp"

namespace wgb {

/// Polynomial in T, coefficient of T^i at index i.
using TPoly = std::vector<bigint>;

inline void tpoly_trim(TPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline TPoly tpoly_mul(const TPoly& a, const TPoly& b)
{
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    tpoly_trim(r);
    return r;
}

/// a += T^shift * b
inline void tpoly_add_shifted(TPoly& a, const TPoly& b, std::size_t shift)
{
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] += b[j];
    tpoly_trim(a);
}

/// 1 - T^e
inline TPoly one_minus_t(long e)
{
    if (e == 0) return {};
    TPoly r(static_cast<std::size_t>(e) + 1, 0);
    r[0] = 1;
    r[e] = -1;
    return r;
}

/// Minimal generators, sorted for determinism.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    std::vector<Monomial> out;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    return out;
}

namespace detail {

inline TPoly numerator_rec(std::vector<Monomial> gens, const WeightSystem& w)
{
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_unit()) return {};
    // a generator that is not a pure power, if any
    const Monomial* mixed = nullptr;
    for (const auto& g : gens)
        if (g.pure_power_variable() == g.size()) {
            mixed = &g;
            break;
        }
    if (!mixed) {
        TPoly r{1};
        for (const auto& g : gens) r = tpoly_mul(r, one_minus_t(wdeg(g, w)));
        return r;
    }
    std::size_t x = 0;
    while ((*mixed)[x] == 0) ++x;
    exp_t e = (*mixed)[x];
    Monomial p = Monomial::variable(mixed->size(), x, e);

    std::vector<Monomial> plus = gens;
    plus.push_back(p);
    std::vector<Monomial> quot;
    quot.reserve(gens.size());
    for (const auto& g : gens) {
        Monomial q = g;
        q[x] = q[x] > e ? q[x] - e : 0;
        quot.push_back(std::move(q));
    }
    TPoly r = numerator_rec(std::move(plus), w);
    tpoly_add_shifted(r, numerator_rec(std::move(quot), w), static_cast<std::size_t>(wdeg(p, w)));
    return r;
}

} // namespace detail

/// N(T) with HS(R/I) = N(T) / prod(1 - T^{w_i}), by pivot splitting
/// N(I) = N(I + p) + T^{deg p} N(I : p).
inline TPoly hilbert_numerator(const std::vector<Monomial>& gens, const WeightSystem& w)
{
    for (const auto& g : gens)
        if (g.size() != w.size()) throw dimension_error("generator size does not match the weights");
    return detail::numerator_rec(gens, w);
}

/// Number of monomials of each W-degree 0..N outside the ideal, by enumeration.
inline std::vector<bigint> standard_monomial_counts(const std::vector<Monomial>& gens, const WeightSystem& w, long N)
{
    std::vector<bigint> out;
    for (long d = 0; d <= N; ++d) {
        long c = 0;
        for_each_monomial_of_degree(w, d, [&](const Monomial& m) {
            for (const auto& g : gens)
                if (g.divides(m)) return;
            ++c;
        });
        out.push_back(c);
    }
    return out;
}

/// Does every variable have a pure power among the generators?
inline bool is_zero_dimensional(const std::vector<Monomial>& gens, std::size_t n)
{
    std::vector<bool> seen(n, false);
    for (const auto& g : gens) {
        std::size_t v = g.pure_power_variable();
        if (v < n) seen[v] = true;
        else if (g.is_unit()) return true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

} // namespace wgb
