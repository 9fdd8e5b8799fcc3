#pragma once

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "bigint.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "weights.hpp"

namespace wgb {

namespace detail {

inline void require_square(const WeightSystem& W, const DegreeSystem& D)
{
    if (D.size() != W.size())
        throw arity_error("expected " + std::to_string(W.size()) + " degrees, got " + std::to_string(D.size()));
}

inline long excess(const WeightSystem& W, const DegreeSystem& D, std::size_t k)
{
    long s = 0;
    for (std::size_t i = 0; i < k; ++i) s += D[i] - W[i];
    return s;
}

} // namespace detail

/// sum(d_i - w_i) + max w_j
inline long macaulay_weak(const WeightSystem& W, const DegreeSystem& D)
{
    detail::require_square(W, D);
    return detail::excess(W, D, W.size()) + W.max();
}

/// max over k of sum_{i<=k}(d_i - w_i) + w_k
inline long macaulay_general(const WeightSystem& W, const DegreeSystem& D)
{
    detail::require_square(W, D);
    long best = std::numeric_limits<long>::min();
    for (std::size_t k = 1; k <= W.size(); ++k) best = std::max(best, detail::excess(W, D, k) + W[k - 1]);
    return best;
}

inline bool is_strongly_w_compatible(const WeightSystem& W, const DegreeSystem& D)
{
    if (D.size() > W.size())
        throw arity_error(std::to_string(D.size()) + " degrees for " + std::to_string(W.size()) + " weights");
    for (std::size_t i = 0; i < D.size(); ++i)
        if (D[i] % W[i] != 0) return false;
    return true;
}

/// d_j >= w_{j-1} for every j >= 2.
inline bool degrees_dominate_previous_weights(const WeightSystem& W, const DegreeSystem& D)
{
    for (std::size_t j = 1; j < D.size() && j < W.size(); ++j)
        if (D[j] < W[j - 1]) return false;
    return true;
}

struct SnpBound {
    long value;
    long general;
    bool degrees_dominate;
    bool strongly_compatible;
};

/// sum(d_i - w_i) + w_n, together with the general variant and the hypothesis flags.
inline SnpBound macaulay_snp(const WeightSystem& W, const DegreeSystem& D)
{
    detail::require_square(W, D);
    return {detail::excess(W, D, W.size()) + W[W.size() - 1], macaulay_general(W, D),
            degrees_dominate_previous_weights(W, D), is_strongly_w_compatible(W, D)};
}

/// Largest integer with no representation as a non-negative combination of W; -1 if some w_i = 1.
inline long frobenius_number(const WeightSystem& W)
{
    if (W.gcd() > 1) throw undefined_frobenius("weights " + W.to_string() + " have a common divisor");
    if (W.has_unit_weight()) return -1;
    // shortest representable value in each residue class modulo the smallest weight
    long a = W.min();
    const long inf = std::numeric_limits<long>::max();
    std::vector<long> dist(static_cast<std::size_t>(a), inf);
    dist[0] = 0;
    using item = std::pair<long, long>;
    std::priority_queue<item, std::vector<item>, std::greater<>> pq;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [d, r] = pq.top();
        pq.pop();
        if (d != dist[r]) continue;
        for (int w : W) {
            long nr = (r + w) % a, nd = d + w;
            if (nd < dist[nr]) {
                dist[nr] = nd;
                pq.push({nd, nr});
            }
        }
    }
    return *std::max_element(dist.begin(), dist.end()) - a;
}

struct ConjecturedDreg {
    long d0;
    long value;
};

/// d0 = delta + 1 if some w_i = 1, else delta - g; rounded up to a multiple of w_n.
inline ConjecturedDreg conjectured_dreg(const WeightSystem& W, const DegreeSystem& D)
{
    detail::require_square(W, D);
    long delta = detail::excess(W, D, W.size());
    long d0 = W.has_unit_weight() ? delta + 1 : delta - frobenius_number(W);
    long wn = W[W.size() - 1];
    long q = d0 >= 0 ? (d0 + wn - 1) / wn : -((-d0) / wn);
    return {d0, wn * q};
}

/// prod d_i / prod w_i
inline rational weighted_bezout(const WeightSystem& W, const DegreeSystem& D)
{
    detail::require_square(W, D);
    bigint num = 1, den = 1;
    for (int d : D) num *= d;
    for (int w : W) den *= w;
    return rational(num, den);
}

/// Largest root of the physicists' Hermite polynomial H_k.
inline double hermite_largest_root(int k)
{
    if (k <= 0) throw error("Hermite index must be positive, got " + std::to_string(k));
    if (k == 1) return 0.0;
    auto sign_h = [](int kk, double x) {
        double prev = 1.0, cur = 2.0 * x;
        for (int j = 1; j < kk; ++j) {
            double next = 2.0 * x * cur - 2.0 * j * prev;
            prev = cur;
            cur = next;
            if (std::fabs(cur) > 1e200) {
                prev *= 1e-200;
                cur *= 1e-200;
            }
        }
        return cur > 0 ? 1 : cur < 0 ? -1 : 0;
    };
    // the roots of H_{k-1} and H_k interlace, so H_k has exactly one root above alpha_{k-1}
    double lo = hermite_largest_root(k - 1), hi = std::sqrt(2.0 * k + 1.0) + 1.0;
    int shi = sign_h(k, hi);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + hi);
        int s = sign_h(k, mid);
        if (s == 0) return mid;
        if (s == shi) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

/// n(d0 - w0)/2 - alpha_k sqrt(n(d0^2 - w0^2)/6)
inline double asymptotic_dreg(long n, int k, long d0, long w0)
{
    if (k <= 0) throw error("k must be positive");
    if (w0 <= 0 || d0 % w0 != 0) throw error("w0 must divide d0");
    double a = hermite_largest_root(k);
    double nn = static_cast<double>(n);
    return nn * static_cast<double>(d0 - w0) / 2.0 -
           a * std::sqrt(nn * static_cast<double>(d0 * d0 - w0 * w0) / 6.0);
}

struct EstimatorConfig {
    double omega = 3.0;

    void validate() const
    {
        if (!(omega >= 2.0 && omega <= 3.0)) throw error("omega must lie in [2, 3]");
    }
};

struct CostEstimate {
    bigint matrix_size;
    double c_f5 = 0;
    double c_f5_surrogate = 0;
    double c_fglm = 0;
};

inline double to_double(const bigint& v) { return v.convert_to<double>(); }

inline bigint binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    bigint r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Matrix width M_{W,dreg}, its omega-th power, the closed-form surrogate and n deg^omega.
inline CostEstimate estimate_costs(const WeightSystem& W, long dreg, const bigint& deg, EstimatorConfig cfg = {})
{
    cfg.validate();
    if (dreg < 0 || deg < 0) throw error("cost inputs must be non-negative");
    CostEstimate c;
    long n = static_cast<long>(W.size());
    c.matrix_size = sylvester_denumerant(dreg, W);
    c.c_f5 = std::pow(to_double(c.matrix_size), cfg.omega);
    c.c_f5_surrogate = std::pow(to_double(binomial(n + dreg - 1, dreg)), cfg.omega) /
                       std::pow(static_cast<double>(W.product()), cfg.omega);
    c.c_fglm = static_cast<double>(n) * std::pow(to_double(deg), cfg.omega);
    return c;
}

struct BoundsReport {
    long macaulay_weak = 0;
    SnpBound macaulay_snp{};
    std::optional<ConjecturedDreg> conjectured;
    std::optional<long> frobenius_g;
    rational bezout_degree;
    bigint denumerant_at_dreg;
    double omega = 3.0;
    CostEstimate costs;
};

/// Every bound for a square system; the conjectured value is absent when the Frobenius number is undefined.
inline BoundsReport bounds_report(const WeightSystem& W, const DegreeSystem& D, EstimatorConfig cfg = {})
{
    BoundsReport r;
    r.macaulay_weak = macaulay_weak(W, D);
    r.macaulay_snp = macaulay_snp(W, D);
    try {
        r.frobenius_g = frobenius_number(W);
    } catch (const undefined_frobenius&) {
    }
    if (r.frobenius_g || W.has_unit_weight()) r.conjectured = conjectured_dreg(W, D);
    r.bezout_degree = weighted_bezout(W, D);
    long dreg = r.conjectured ? r.conjectured->value : r.macaulay_snp.value;
    r.denumerant_at_dreg = sylvester_denumerant(dreg, W);
    r.omega = cfg.omega;
    bigint deg = boost::multiprecision::numerator(r.bezout_degree) / boost::multiprecision::denominator(r.bezout_degree);
    r.costs = estimate_costs(W, std::max(0L, dreg), deg, cfg);
    return r;
}

} // namespace wgb
