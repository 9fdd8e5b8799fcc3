#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "system.hpp"

namespace wgb {

namespace detail {

inline Polynomial dense_poly(RingPtr r, const std::vector<Monomial>& support, std::mt19937_64& rng)
{
    std::uint64_t p = r->field().modulus();
    std::vector<Term> ts;
    ts.reserve(support.size());
    for (const auto& m : support) ts.push_back({m, static_cast<coeff_t>(rng() % (p - 1) + 1)});
    return Polynomial(std::move(r), std::move(ts));
}

inline void require_positive(const WeightSystem& W, long d, std::size_t count)
{
    if (count == 0)
        throw empty_support("no monomials of W-degree " + std::to_string(d) + " for " + W.to_string() +
                            " (denumerant 0)");
}

} // namespace detail

/// Dense support on all monomials of W-degree exactly d_i, nonzero coefficients.
inline PolySystem random_w_homogeneous_system(const WeightSystem& W, const DegreeSystem& D, std::uint64_t seed,
                                              std::uint64_t p = default_modulus)
{
    auto r = Ring::make(W, p);
    std::mt19937_64 rng(seed);
    std::vector<Polynomial> ps;
    for (int d : D) {
        auto sup = monomials_of_degree(W, d);
        detail::require_positive(W, d, sup.size());
        ps.push_back(detail::dense_poly(r, sup, rng));
    }
    return PolySystem(r, std::move(ps), D);
}

/// Dense support on all monomials of W-degree at most d_i.
inline PolySystem random_affine_system(const WeightSystem& W, const DegreeSystem& D, std::uint64_t seed,
                                       std::uint64_t p = default_modulus)
{
    auto r = Ring::make(W, p);
    std::mt19937_64 rng(seed);
    std::vector<Polynomial> ps;
    for (int d : D) {
        auto top = monomials_of_degree(W, d);
        detail::require_positive(W, d, top.size());
        ps.push_back(detail::dense_poly(r, monomials_up_to_degree(W, d), rng));
    }
    return PolySystem(r, std::move(ps), D);
}

/// (X_1^{d_1/w_1}, ..., X_n^{d_n/w_n}, (X_1 + X_2^{w_1/w_2} + ... + X_n^{w_1/w_n})^{d_extra/w_1}).
inline PolySystem froberg_sequence(const WeightSystem& W, const DegreeSystem& D, long d_extra,
                                   std::uint64_t p = default_modulus)
{
    std::size_t n = W.size();
    if (D.size() != n) throw arity_error("expected " + std::to_string(n) + " degrees");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (W[i] % W[i + 1] != 0) throw error("weights " + W.to_string() + " are not reverse chain-divisible");
    for (std::size_t i = 0; i < n; ++i)
        if (D[i] % W[i] != 0) throw error("degree " + std::to_string(D[i]) + " is not divisible by its weight");
    if (d_extra % W[0] != 0) throw error("w_1 must divide the extra degree");
    auto r = Ring::make(W, p);
    std::vector<Polynomial> ps;
    for (std::size_t i = 0; i < n; ++i) ps.push_back(Polynomial::variable(r, i, static_cast<exp_t>(D[i] / W[i])));
    Polynomial base(r);
    for (std::size_t i = 0; i < n; ++i) base += Polynomial::variable(r, i, static_cast<exp_t>(W[0] / W[i]));
    ps.push_back(base.pow(static_cast<unsigned>(d_extra / W[0])));
    return PolySystem(r, std::move(ps), D.appended(static_cast<int>(d_extra)));
}

/// Copies f into a ring with more variables, padding exponents with zeros.
inline Polynomial embed(const Polynomial& f, RingPtr target, std::size_t offset = 0)
{
    std::vector<Term> ts;
    for (const auto& t : f) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < t.m.size(); ++i) m[offset + i] = t.m[i];
        ts.push_back({m, t.c});
    }
    return Polynomial(std::move(target), std::move(ts));
}

/// (T_i - f_i) in K[X_1..X_n, T_1..T_m] with weights (1..1, deg f_1, ..., deg f_m).
inline PolySystem inversion_system(const std::vector<Polynomial>& fs)
{
    if (fs.empty()) throw error("inversion needs at least one polynomial");
    const auto& src = fs[0].ring();
    std::size_t n = src->nvars(), m = fs.size();
    std::vector<int> w(n, 1);
    std::vector<std::string> names = src->names();
    for (std::size_t i = 0; i < m; ++i) {
        fs[0].check_compatible(fs[i]);
        w.push_back(static_cast<int>(std::max(1L, fs[i].total_degree())));
        names.push_back("T" + std::to_string(i + 1));
    }
    WeightSystem W(w);
    auto r = Ring::make(W, src->field().modulus(), names);
    std::vector<Polynomial> ps;
    for (std::size_t i = 0; i < m; ++i) ps.push_back(Polynomial::variable(r, n + i) - embed(fs[i], r));
    return PolySystem(r, std::move(ps));
}

} // namespace wgb
