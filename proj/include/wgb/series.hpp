#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "monomial_ideal.hpp"
#include "weights.hpp"

namespace wgb {

/// Coefficient window a_0..a_N of a power series in T.
///
/// When is_polynomial is set the series is known to be a polynomial of degree
/// poly_degree, so coefficients beyond the window are known to be zero.
struct HilbertSeries {
    std::vector<bigint> coeffs;
    bool is_polynomial = false;
    long poly_degree = -1;
    std::optional<DegreeSystem> numerator_degrees;
    std::optional<WeightSystem> denominator_weights;

    long bound() const { return static_cast<long>(coeffs.size()) - 1; }

    bigint operator[](long d) const
    {
        if (d < 0) return 0;
        if (d <= bound()) return coeffs[static_cast<std::size_t>(d)];
        if (is_polynomial && d > poly_degree) return 0;
        throw insufficient_window("coefficient " + std::to_string(d) + " lies beyond the window " +
                                  std::to_string(bound()));
    }

    std::vector<long long> to_ll() const
    {
        std::vector<long long> out;
        for (const auto& c : coeffs) out.push_back(static_cast<long long>(c));
        return out;
    }

    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) { return a.coeffs == b.coeffs; }
};

/// N(T) / prod(1 - T^{w_i}) up to degree N; polynomiality detected by exact division.
inline HilbertSeries expand_numerator(const TPoly& num, const WeightSystem& w, long N)
{
    if (N < 0) throw error("series bound must be non-negative");
    HilbertSeries s;
    s.coeffs.assign(static_cast<std::size_t>(N) + 1, 0);
    for (std::size_t i = 0; i < num.size() && static_cast<long>(i) <= N; ++i) s.coeffs[i] = num[i];
    for (int wi : w)
        for (long e = wi; e <= N; ++e) s.coeffs[e] += s.coeffs[e - wi];

    // exact long division of the full numerator
    TPoly q = num;
    bool exact = true;
    for (int wi : w) {
        // q / (1 - T^wi): running sums with stride wi must vanish past deg(q) - wi
        if (q.empty()) break;
        long deg = static_cast<long>(q.size()) - 1;
        if (deg < wi) {
            exact = false;
            break;
        }
        TPoly r(static_cast<std::size_t>(deg - wi) + 1, 0);
        for (long e = 0; e <= deg - wi; ++e) r[e] = q[e] + (e >= wi ? r[e - wi] : bigint(0));
        for (long e = deg - wi + 1; e <= deg; ++e) {
            bigint v = q[e] + (e - wi >= 0 ? r[e - wi] : bigint(0));
            if (v != 0) {
                exact = false;
                break;
            }
        }
        if (!exact) break;
        tpoly_trim(r);
        q = std::move(r);
    }
    if (exact) {
        s.is_polynomial = true;
        s.poly_degree = static_cast<long>(q.size()) - 1;
    }
    return s;
}

/// prod(1 - T^{d_i}) / prod(1 - T^{w_i}) up to degree N.
inline HilbertSeries expand_rational(const DegreeSystem& D, const WeightSystem& W, long N)
{
    TPoly num{1};
    for (int d : D) num = tpoly_mul(num, one_minus_t(d));
    HilbertSeries s = expand_numerator(num, W, N);
    s.numerator_degrees = D;
    s.denominator_weights = W;
    return s;
}

/// Default window: delta + max w + 1 for m = n, delta_n + d_m + 1 for m > n, sum d + max w + 1 otherwise.
inline long default_window(const WeightSystem& W, const DegreeSystem& D)
{
    long n = static_cast<long>(W.size()), m = static_cast<long>(D.size());
    long head = 0;
    for (long i = 0; i < std::min(n, m); ++i) head += D[i] - W[i];
    if (m == n) return std::max(0L, head) + W.max() + 1;
    if (m > n) return std::max(0L, head) + D[m - 1] + 1;
    return D.sum() + W.max() + 1;
}

struct Truncation {
    HilbertSeries series;
    long degree;
};

/// Drops everything from the first coefficient <= 0 onward.
inline Truncation truncate_semiregular(const HilbertSeries& s)
{
    for (long d = 0; d <= s.bound(); ++d) {
        if (s.coeffs[d] <= 0) {
            HilbertSeries t;
            t.coeffs.assign(s.coeffs.begin(), s.coeffs.begin() + d);
            if (t.coeffs.empty()) t.coeffs.push_back(0);
            t.is_polynomial = true;
            t.poly_degree = d - 1;
            return {t, d - 1};
        }
    }
    if (s.is_polynomial && s.poly_degree <= s.bound()) return {s, s.poly_degree};
    throw insufficient_window("no non-positive coefficient up to degree " + std::to_string(s.bound()) +
                              " and the series is not known to be a polynomial");
}

/// (1 - T) S on the window.
inline HilbertSeries series_delta(const HilbertSeries& s)
{
    HilbertSeries r;
    r.coeffs = s.coeffs;
    for (std::size_t d = r.coeffs.size(); d-- > 1;) r.coeffs[d] -= s.coeffs[d - 1];
    return r;
}

/// S / (1 - T) on the window.
inline HilbertSeries series_integrate(const HilbertSeries& s)
{
    HilbertSeries r;
    r.coeffs = s.coeffs;
    for (std::size_t d = 1; d < r.coeffs.size(); ++d) r.coeffs[d] += r.coeffs[d - 1];
    return r;
}

/// HS(1) of a polynomial series.
inline bigint ideal_degree(const HilbertSeries& s)
{
    if (!s.is_polynomial || s.poly_degree > s.bound())
        throw positive_dimension("the Hilbert series is not a polynomial on its window");
    bigint sum = 0;
    for (const auto& c : s.coeffs) sum += c;
    return sum;
}

struct SeriesShape {
    std::vector<long> delta_j;
    long delta = 0;
    long delta_star = 0;
    long sigma = 0;
    long sigma_star = 0;
    long mu = 0;
    long mu_star = 0;
    bool complete_intersection = false;
    bool self_reciprocal = false;
    bool step_width_ok = false;
    DegreeSystem degrees_used;
};

inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct ShapeReport {
    bool self_reciprocal = false;
    bool monotone_pattern_ok = false;
    bool step_width_ok = false;
};

namespace detail {

inline SeriesShape shape_numbers(const WeightSystem& W, const DegreeSystem& D)
{
    SeriesShape sh;
    bool all_divisible = std::all_of(D.begin(), D.end(), [&](int d) {
        return std::all_of(W.begin(), W.end(), [&](int w) { return d % w == 0; });
    });
    sh.degrees_used = all_divisible ? D.sorted() : D;
    std::size_t n = W.size(), k = std::min(n, D.size());
    long acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
        acc += sh.degrees_used[j] - W[j];
        sh.delta_j.push_back(acc);
    }
    sh.complete_intersection = D.size() == n;
    if (!sh.complete_intersection) return sh;
    auto dj = [&](long j) { return j >= 1 ? sh.delta_j[static_cast<std::size_t>(j - 1)] : 0L; };
    long N = static_cast<long>(n);
    sh.delta = dj(N);
    sh.delta_star = dj(N - 1);
    sh.sigma = std::min(sh.delta_star, floor_div(sh.delta, 2));
    sh.sigma_star = std::min(dj(N - 2), floor_div(sh.delta_star, 2));
    sh.mu = sh.delta - 2 * sh.sigma;
    sh.mu_star = sh.delta_star - 2 * sh.sigma_star;
    return sh;
}

} // namespace detail

/// Checks palindromy, the increase/plateau/decrease pattern and the step widths.
inline ShapeReport validate_ci_shape(const HilbertSeries& s, const WeightSystem& W, const DegreeSystem& D)
{
    SeriesShape sh = detail::shape_numbers(W, D);
    ShapeReport rep;
    if (!sh.complete_intersection) return rep;
    long delta = sh.delta;
    auto a = [&](long d) { return s[d]; };

    rep.self_reciprocal = s.is_polynomial && s.poly_degree == delta;
    for (long d = 0; rep.self_reciprocal && d <= delta; ++d)
        if (a(d) != a(delta - d)) rep.self_reciprocal = false;

    rep.monotone_pattern_ok = true;
    for (long d = 0; d <= delta; ++d) {
        bigint x = a(d), y = a(d + 1);
        bool ok = d < sh.sigma ? x <= y : d < sh.sigma + sh.mu ? x == y : x >= y;
        if (!ok) {
            rep.monotone_pattern_ok = false;
            break;
        }
    }

    rep.step_width_ok = true;
    if (W.size() >= 2) {
        long step = W[W.size() - 2];
        for (long d = 0; d < sh.sigma; ++d) {
            bigint diff = a(d) - a(d - 1);
            bool ok = d % step == 0 ? diff > 0 : diff == 0;
            if (!ok) {
                rep.step_width_ok = false;
                break;
            }
        }
    }
    return rep;
}

/// Shape parameters; D is sorted ascending when every d_i is divisible by every w_j.
inline SeriesShape shape_params(const WeightSystem& W, const DegreeSystem& D)
{
    SeriesShape sh = detail::shape_numbers(W, D);
    if (sh.complete_intersection) {
        auto s = expand_rational(D, W, std::max(0L, sh.delta) + W.max() + 1);
        auto rep = validate_ci_shape(s, W, D);
        sh.self_reciprocal = rep.self_reciprocal;
        sh.step_width_ok = rep.step_width_ok;
    }
    return sh;
}

/// min(sum_{i<=n} d_i - sum w, floor((sum_{i<=n+1} d_i - sum w) / 2)).
inline long delta_semiregular_n_plus_1(const WeightSystem& W, const DegreeSystem& D)
{
    if (D.size() != W.size() + 1)
        throw arity_error("expected " + std::to_string(W.size() + 1) + " degrees, got " + std::to_string(D.size()));
    long sw = W.sum();
    long head = D.sum() - D[D.size() - 1];
    return std::min(head - sw, floor_div(D.sum() - sw, 2));
}

/// HS of R / <gens> under the W-grading, on the window 0..N.
inline HilbertSeries monomial_quotient_series(const std::vector<Monomial>& gens, const WeightSystem& W, long N)
{
    return expand_numerator(hilbert_numerator(gens, W), W, N);
}

} // namespace wgb
