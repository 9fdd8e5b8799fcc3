#pragma once

#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"

namespace wgb {

/// Ring of the images t_i = X_i^{1/w_i}: trivial grading, plain grevlex, same names.
inline RingPtr hom_w_ring(const Ring& r)
{
    auto ones = WeightSystem::ones(r.nvars());
    return r.with_weights(ones, MonomialOrder::grevlex(r.nvars()));
}

/// X_i -> t_i^{w_i}.
inline Polynomial hom_w(const Polynomial& f, const WeightSystem& w, RingPtr target)
{
    if (w.size() != f.nvars() || target->nvars() != f.nvars()) throw dimension_error("hom_w: size mismatch");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f) {
        Monomial m = t.m;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] *= static_cast<exp_t>(w[i]);
        out.push_back({std::move(m), t.c});
    }
    return Polynomial(std::move(target), std::move(out));
}

inline Polynomial hom_w(const Polynomial& f) { return hom_w(f, f.ring()->weights(), hom_w_ring(*f.ring())); }

/// Preimage under X_i -> t_i^{w_i}; every exponent of t_i must be a multiple of w_i.
inline Polynomial hom_w_inverse(const Polynomial& g, const WeightSystem& w, RingPtr target)
{
    if (w.size() != g.nvars() || target->nvars() != g.nvars()) throw dimension_error("hom_w_inverse: size mismatch");
    std::vector<Term> out;
    out.reserve(g.size());
    for (const auto& t : g) {
        Monomial m = t.m;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] % static_cast<exp_t>(w[i]) != 0) {
                Polynomial bad = Polynomial::monomial(g.ring(), t.m, t.c);
                throw not_in_image("term " + bad.to_string() + ": exponent " + std::to_string(m[i]) + " of " +
                                   g.ring()->names()[i] + " is not divisible by " + std::to_string(w[i]));
            }
            m[i] /= static_cast<exp_t>(w[i]);
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial(std::move(target), std::move(out));
}

inline bool is_w_homogeneous(const Polynomial& f, const WeightSystem& w)
{
    if (f.is_zero()) return true;
    long d = wdeg(f.terms().front().m, w);
    for (const auto& t : f)
        if (wdeg(t.m, w) != d) return false;
    return true;
}

inline bool is_w_homogeneous(const Polynomial& f) { return is_w_homogeneous(f, f.ring()->weights()); }

/// W-degree -> component. Empty for f = 0.
inline std::map<long, Polynomial> w_homogeneous_components(const Polynomial& f, const WeightSystem& w)
{
    std::map<long, std::vector<Term>> parts;
    for (const auto& t : f) parts[wdeg(t.m, w)].push_back(t);
    std::map<long, Polynomial> out;
    for (auto& [d, ts] : parts) out.emplace(d, Polynomial::from_sorted(f.ring(), std::move(ts)));
    return out;
}

/// Ring with an extra last variable H of weight 1, smallest for W-grevlex.
inline RingPtr homogenized_ring(const Ring& r, const std::string& hname = "h")
{
    auto w = r.weights().appended(1);
    auto names = r.names();
    names.push_back(hname);
    return std::make_shared<const Ring>(r.field(), w, MonomialOrder::wgrevlex(w), std::move(names));
}

/// f^h(X, H) with f^h(X, 1) = f, W^h-homogeneous of degree max wdeg(f).
inline Polynomial w_homogenize_affine(const Polynomial& f, RingPtr target)
{
    const auto& w = f.ring()->weights();
    std::size_t n = f.nvars();
    if (target->nvars() != n + 1) throw dimension_error("homogenization needs exactly one extra variable");
    long top = f.wdegree();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f) {
        Monomial m(n + 1);
        for (std::size_t i = 0; i < n; ++i) m[i] = t.m[i];
        m[n] = static_cast<exp_t>(top - wdeg(t.m, w));
        out.push_back({std::move(m), t.c});
    }
    return Polynomial(std::move(target), std::move(out));
}

inline Polynomial w_homogenize_affine(const Polynomial& f)
{
    return w_homogenize_affine(f, homogenized_ring(*f.ring()));
}

/// H := 1, dropping the last variable.
inline Polynomial dehomogenize(const Polynomial& fh, RingPtr target)
{
    std::size_t n = fh.nvars();
    if (n == 0 || target->nvars() + 1 != n) throw dimension_error("dehomogenize: size mismatch");
    std::vector<Term> out;
    out.reserve(fh.size());
    for (const auto& t : fh) out.push_back({Monomial(t.m.begin(), t.m.end() - 1), t.c});
    return Polynomial(std::move(target), std::move(out));
}

/// H := 0, dropping the last variable.
inline Polynomial restrict_at_zero(const Polynomial& fh, RingPtr target)
{
    std::size_t n = fh.nvars();
    if (n == 0 || target->nvars() + 1 != n) throw dimension_error("restrict_at_zero: size mismatch");
    std::vector<Term> out;
    for (const auto& t : fh)
        if (t.m[n - 1] == 0) out.push_back({Monomial(t.m.begin(), t.m.end() - 1), t.c});
    return Polynomial(std::move(target), std::move(out));
}

} // namespace wgb
