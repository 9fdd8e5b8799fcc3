// One line per criterion; `--only N` runs a single one. Exit status is non-zero iff a selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <wgb/wgb.hpp>

using namespace wgb;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

/// Reverse chain-divisible weights with last weight 1 and w_1 <= wmax.
std::vector<WeightSystem> rcd_unit_tail(std::size_t n, int wmax)
{
    std::vector<WeightSystem> out;
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == n) {
            if (cur.back() == 1) out.emplace_back(cur);
            return;
        }
        for (int w = 1; w <= wmax; ++w)
            if (cur.empty() || cur.back() % w == 0) {
                cur.push_back(w);
                rec();
                cur.pop_back();
            }
    };
    rec();
    return out;
}

/// Every tuple with entry i drawn from choices[i]; non-decreasing when asked.
void for_each_choice(const std::vector<std::vector<int>>& choices, bool nondecreasing,
                     const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == choices.size()) {
            fn(cur);
            return;
        }
        for (int v : choices[cur.size()]) {
            if (nondecreasing && !cur.empty() && v < cur.back()) continue;
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

std::vector<int> multiples(int step, int top)
{
    std::vector<int> out;
    for (int d = step; d <= top; d += step) out.push_back(d);
    return out;
}

/// Histogram of W-degrees of all exponent vectors with W-degree <= top, by direct enumeration.
std::vector<long long> brute_degree_counts(const std::vector<int>& w, int top)
{
    std::vector<long long> h(static_cast<std::size_t>(top) + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int deg) {
        if (i == w.size()) {
            ++h[static_cast<std::size_t>(deg)];
            return;
        }
        for (int e = 0; deg + e * w[i] <= top; ++e) rec(i + 1, deg + e * w[i]);
    };
    rec(0, 0);
    return h;
}

/// Random regular strongly W-compatible zero-dimensional systems, n <= 3.
std::vector<PolySystem> regular_square_systems(std::size_t count, std::uint64_t seed, std::size_t* rejected)
{
    std::mt19937_64 rng(seed);
    std::vector<PolySystem> out;
    while (out.size() < count) {
        std::size_t n = rng() % 3 + 1;
        std::vector<int> w, d;
        for (std::size_t i = 0; i < n; ++i) {
            w.push_back(static_cast<int>(rng() % 3) + 1);
            d.push_back(w.back() * static_cast<int>(rng() % (n == 3 ? 2 : 3) + 1));
        }
        WeightSystem W(w);
        DegreeSystem D(d);
        auto sys = random_w_homogeneous_system(W, D, rng());
        if (!is_regular_sequence(sys).holds) {
            if (rejected) ++*rejected;
            continue;
        }
        out.push_back(std::move(sys));
    }
    return out;
}

Outcome table1()
{
    auto r = bench_table1(load_pinned(std::string(WGB_DATA_DIR) + "/pinned_values.json"));
    std::string d;
    for (const auto& row : r.report["instances"])
        d += row["key"].get<std::string>() + " dreg " + row["measured_dreg"].dump() + " bounds (" +
             row["macaulay_weak"].dump() + "," + row["macaulay_snp"].dump() + "); ";
    return {r.diffs == 0, d + std::to_string(r.diffs) + " diffs"};
}

Outcome table2()
{
    auto r = bench_table2(load_pinned(std::string(WGB_DATA_DIR) + "/pinned_values.json"));
    std::string d;
    for (const auto& row : r.report["instances"])
        d += row["key"].get<std::string>() + " (" + row["macaulay_weak"].dump() + "," + row["macaulay_snp"].dump() +
             "," + row["conjectured_dreg"].dump() + "); ";
    return {r.diffs == 0, d + std::to_string(r.diffs) + " diffs; full-scale dreg via `wgb bench table2 --full`"};
}

Outcome figures()
{
    auto r = bench_figures(load_pinned(std::string(WGB_DATA_DIR) + "/pinned_values.json"));
    long tdeg = -1;
    for (const auto& row : r.report["instances"])
        if (row.contains("truncation_degree")) tdeg = row["truncation_degree"];
    return {r.diffs == 0 && tdeg == 8,
            std::to_string(r.report["instances"].size()) + " sequences, " + std::to_string(r.diffs) +
                " diffs, truncation degree " + std::to_string(tdeg)};
}

Outcome bezout_fglm()
{
    std::size_t rejected = 0, bezout_ok = 0, fglm_ok = 0;
    auto systems = regular_square_systems(50, 41, &rejected);
    for (const auto& sys : systems) {
        if (!is_strongly_w_compatible(sys.weights(), sys.degrees())) continue;
        auto g = buchberger(sys);
        auto b = weighted_bezout(sys.weights(), sys.degrees());
        if (rational(static_cast<long>(staircase(g).size())) == b) ++bezout_ok;
        auto lex = fglm_lex(g);
        auto direct = buchberger(sys.with_order(MonomialOrder::lex(sys.nvars())));
        if (lex.polys == direct.polys && is_reduced_basis(lex.polys)) ++fglm_ok;
    }
    return {bezout_ok == 50 && fglm_ok == 50,
            "staircase = Bezout on " + std::to_string(bezout_ok) + "/50, fglm = lex Buchberger on " +
                std::to_string(fglm_ok) + "/50 (" + std::to_string(rejected) + " non-regular draws skipped)"};
}

Outcome homw()
{
    std::mt19937_64 rng(55);
    std::size_t same = 0, total = 0;
    while (total < 100) {
        std::size_t n = rng() % 3 + 1;
        std::vector<int> w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<int>(rng() % 4) + 1);
        WeightSystem W(w);
        std::size_t m = rng() % n + 1;
        std::vector<int> d;
        while (d.size() < m) {
            int c = static_cast<int>(rng() % 12) + 1;
            if (!monomials_of_degree(W, c).empty()) d.push_back(c);
        }
        auto sys = random_w_homogeneous_system(W, DegreeSystem(d), rng());
        ++total;
        if (gb_via_homw(sys).polys == buchberger(sys).polys) ++same;
    }
    return {same == total, std::to_string(same) + "/" + std::to_string(total) + " identical bases"};
}

Outcome froberg()
{
    std::size_t cases = 0, rank_ok = 0, series_ok = 0, hs_ok = 0, trivial_bad = 0;
    std::string first_bad;
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& W : rcd_unit_tail(n, 4)) {
            std::vector<std::vector<int>> choices;
            for (int w : W) choices.push_back(multiples(w, 8));
            for_each_choice(choices, false, [&](const std::vector<int>& dv) {
                DegreeSystem D(dv);
                for (int de : multiples(W[0], 8)) {
                    auto sys = froberg_sequence(W, D, de);
                    auto full = sys.degrees();
                    long N = default_window(W, full);
                    auto v = is_semiregular(sys, N);
                    auto hs = quotient_hilbert_series(structure_gb(sys), N);
                    bool h = hs.coeffs == truncated_window(full, W, N);
                    ++cases;
                    rank_ok += v.rank.holds;
                    series_ok += v.series.holds;
                    hs_ok += h;
                    bool bad = !v.rank.holds || !v.series.holds || !h;
                    if (bad && W.is_trivial()) ++trivial_bad;
                    if (bad && first_bad.empty())
                        first_bad = "; first failure W=" + W.to_string() + " D=" + full.to_string();
                }
            });
        }
    bool pass = rank_ok == cases && series_ok == cases && hs_ok == cases;
    return {pass, std::to_string(cases) + " sequences: rank " + std::to_string(rank_ok) + ", series " +
                      std::to_string(series_ok) + ", quotient series " + std::to_string(hs_ok) +
                      "; failures with unit weights " + std::to_string(trivial_bad) + first_bad};
}

Outcome semiregular_degree()
{
    std::size_t cases = 0, agree = 0;
    std::string first;
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& W : rcd_unit_tail(n, 20)) {
            std::vector<std::vector<int>> choices(n + 1, multiples(W[0], 20));
            for_each_choice(choices, true, [&](const std::vector<int>& dv) {
                DegreeSystem D(dv);
                auto s = expand_rational(D, W, D.sum() + 1);
                long t = truncate_semiregular(s).degree;
                long f = delta_semiregular_n_plus_1(W, D);
                ++cases;
                if (t == f) ++agree;
                else if (first.empty())
                    first = "; first mismatch W=" + W.to_string() + " D=" + D.to_string() + " truncation " +
                            std::to_string(t) + " formula " + std::to_string(f);
            });
        }
    return {agree == cases, std::to_string(agree) + "/" + std::to_string(cases) + " agree" + first};
}

Outcome denumerant()
{
    std::size_t checked = 0, bad = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::vector<int>> choices(n, {1, 2, 3, 4, 5, 6, 7, 8});
        for_each_choice(choices, false, [&](const std::vector<int>& w) {
            auto h = brute_degree_counts(w, 40);
            WeightSystem W(w);
            for (int d = 0; d <= 40; ++d) {
                ++checked;
                if (sylvester_denumerant(d, W) != h[static_cast<std::size_t>(d)]) ++bad;
            }
        });
    }
    return {bad == 0, std::to_string(checked) + " (W, d) pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome bound_dominance()
{
    std::size_t runs = 0, regular = 0, snp_checked = 0, violations = 0;
    std::string first;
    auto audit = [&](const PolySystem& sys) {
        const auto& W = sys.weights();
        auto D = sys.degrees();
        if (!is_regular_sequence(sys).holds) return;
        ++regular;
        MatrixGbOptions opt;
        opt.expected_numerator = regular_numerator(D);
        auto g = matrix_gb_whomog(sys, opt);
        ++runs;
        long dreg = g.stats.observed_dreg;
        long weak = macaulay_weak(W, D);
        if (dreg > weak) {
            ++violations;
            if (first.empty()) first = "; W=" + W.to_string() + " D=" + D.to_string() + " dreg " + std::to_string(dreg);
        }
        if (degrees_dominate_previous_weights(W, D) && is_snp(sys).verdict.holds) {
            ++snp_checked;
            if (dreg > macaulay_snp(W, D).value) {
                ++violations;
                if (first.empty())
                    first = "; W=" + W.to_string() + " D=" + D.to_string() + " dreg " + std::to_string(dreg);
            }
        }
    };
    for (const auto& w : std::vector<std::vector<int>>{{3, 2, 1}, {3, 1, 2}, {1, 2, 3}})
        for (std::uint64_t s = 1; s <= 5; ++s) audit(random_w_homogeneous_system(WeightSystem(w), {6, 6, 6}, s));
    for (const auto& sys : regular_square_systems(50, 41, nullptr)) audit(sys);
    for (const auto& sys : regular_square_systems(50, 97, nullptr)) audit(sys);
    return {violations == 0 && runs > 0, std::to_string(runs) + " matrix-engine runs on regular systems (" +
                                             std::to_string(snp_checked) + " also SNP with dominating degrees), " +
                                             std::to_string(violations) + " violations" + first};
}

Outcome asymptotics()
{
    double worst = 0;
    std::string where;
    for (long n : {50L, 100L, 200L})
        for (int w0 : {1, 2, 4}) {
            int d0 = 2 * w0;
            std::vector<int> w(static_cast<std::size_t>(n), w0);
            w.back() = 1;
            DegreeSystem D(std::vector<int>(static_cast<std::size_t>(n) + 1, d0));
            double exact = static_cast<double>(delta_semiregular_n_plus_1(WeightSystem(w), D));
            double approx = asymptotic_dreg(n, 1, d0, w0);
            double rel = std::abs(exact - approx) / approx;
            if (rel > worst) {
                worst = rel;
                where = " at n=" + std::to_string(n) + " w0=" + std::to_string(w0);
            }
        }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", worst);
    return {worst <= 0.05, std::string("max relative gap ") + buf + where + " (limit 0.05)"};
}

struct Criterion {
    int id;
    const char* name;
    double seconds;
    Outcome (*run)();
};

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);

    const std::vector<Criterion> all = {
        {1, "degree of regularity of random systems", 60, table1},
        {2, "Macaulay and conjectured bounds", 1, table2},
        {3, "series fixtures", 1, figures},
        {4, "weighted Bezout and FGLM", 120, bezout_fglm},
        {5, "hom_W strategy equivalence", 120, homw},
        {6, "Froberg sequences are semi-regular", 600, froberg},
        {7, "n+1 semi-regular degree formula", 30, semiregular_degree},
        {8, "Sylvester denumerant", 30, denumerant},
        {9, "observed dreg below the bounds", 0, bound_dominance},
        {10, "asymptotic degree", 1, asymptotics},
    };
    int failed = 0;
    for (const auto& c : all) {
        if (only && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.seconds <= 0 || s <= c.seconds;
        bool pass = o.pass && in_time;
        if (!pass) ++failed;
        std::printf("%s %2d %s: %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s,
                    in_time ? "" : ", over time limit");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
