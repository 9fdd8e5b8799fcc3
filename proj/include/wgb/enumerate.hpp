#pragma once

#include <functional>
#include <vector>

#include "bigint.hpp"
#include "monomial.hpp"
#include "weights.hpp"

namespace wgb {

/// Calls fn(m) for every monomial of W-degree exactly d, in lex-decreasing order.
inline void for_each_monomial_of_degree(const WeightSystem& w, long d, const std::function<void(const Monomial&)>& fn)
{
    if (d < 0) return;
    std::size_t n = w.size();
    Monomial m(n);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i + 1 == n) {
            if (left % w[i] == 0) {
                m[i] = static_cast<exp_t>(left / w[i]);
                fn(m);
                m[i] = 0;
            }
            return;
        }
        for (long e = left / w[i]; e >= 0; --e) {
            m[i] = static_cast<exp_t>(e);
            rec(i + 1, left - e * w[i]);
        }
        m[i] = 0;
    };
    rec(0, d);
}

inline std::vector<Monomial> monomials_of_degree(const WeightSystem& w, long d)
{
    std::vector<Monomial> out;
    for_each_monomial_of_degree(w, d, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

inline std::vector<Monomial> monomials_up_to_degree(const WeightSystem& w, long d)
{
    std::vector<Monomial> out;
    for (long e = 0; e <= d; ++e)
        for_each_monomial_of_degree(w, e, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

/// Number of monomials of W-degree e for e = 0..d (coin-counting DP).
inline std::vector<bigint> denumerant_table(const WeightSystem& w, long d)
{
    if (d < 0) return {};
    std::vector<bigint> t(static_cast<std::size_t>(d) + 1, 0);
    t[0] = 1;
    for (int wi : w)
        for (long e = wi; e <= d; ++e) t[e] += t[e - wi];
    return t;
}

/// Sylvester denumerant M_{W,d}.
inline bigint sylvester_denumerant(long d, const WeightSystem& w)
{
    if (d < 0) return 0;
    return denumerant_table(w, d).back();
}

} // namespace wgb
