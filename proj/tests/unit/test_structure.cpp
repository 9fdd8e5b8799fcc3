#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "wgb/generators.hpp"
#include "wgb/structure.hpp"

using namespace wgb;

namespace {

std::vector<WeightSystem> sorted_weight_systems(std::size_t n, int wmax)
{
    std::vector<WeightSystem> out;
    std::vector<int> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == n) {
            out.emplace_back(cur);
            return;
        }
        for (int w = 1; w <= (cur.empty() ? wmax : cur.back()); ++w) {
            cur.push_back(w);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

} // namespace

TEST_CASE("weight predicates")
{
    CHECK(is_reverse_chain_divisible({4, 2, 1}));
    CHECK_FALSE(is_reverse_chain_divisible({3, 2, 1}));
    CHECK(is_reverse_chain_divisible({5, 5, 5, 5}));
    CHECK(is_strongly_w_compatible({3, 2, 1}, {6, 6, 6}));
    CHECK_FALSE(is_strongly_w_compatible({2, 5}, {4, 8}));
    CHECK(is_strongly_w_compatible({2, 5}, DegreeSystem(std::vector<int>{})));
    CHECK_THROWS_AS(is_strongly_w_compatible({2}, {2, 2}), arity_error);
}

TEST_CASE("regular sequences")
{
    auto r = Ring::make({2, 5});
    auto X = Polynomial::variable(r, 0);
    CHECK_FALSE(is_regular_sequence(PolySystem(r, {X * X, X.pow(4)})).holds);
    CHECK_THROWS_AS(is_regular_sequence(PolySystem(r, {X, X, X})), arity_error);
    CHECK_THROWS_AS(is_regular_sequence(PolySystem(r, {X + Polynomial::variable(r, 1)})), not_homogeneous);

    // monomial systems X_i^{d_i / w_i}
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& W : sorted_weight_systems(n, 4)) {
            auto rr = Ring::make(W);
            std::vector<int> mult(n, 1);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == n) {
                    std::vector<Polynomial> ps;
                    for (std::size_t k = 0; k < n; ++k)
                        ps.push_back(Polynomial::variable(rr, k, static_cast<exp_t>(mult[k])));
                    REQUIRE(is_regular_sequence(PolySystem(rr, ps)).holds);
                    ++checked;
                    return;
                }
                for (int a = 1; a <= 3; ++a) {
                    mult[i] = a;
                    rec(i + 1);
                }
            };
            rec(0);
        }
    CHECK(checked > 100);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        REQUIRE(is_regular_sequence(random_w_homogeneous_system({3, 2, 1}, {6, 6, 6}, seed)).holds);
        REQUIRE(is_regular_sequence(random_w_homogeneous_system({2, 1}, {4, 2}, seed)).holds);
        REQUIRE(is_regular_sequence(random_w_homogeneous_system({4, 2, 1}, {8, 4}, seed)).holds);
    }
}

TEST_CASE("Noether position")
{
    auto r = Ring::make({3, 2});
    auto X = Polynomial::variable(r, 0), Y = Polynomial::variable(r, 1);
    PolySystem snp(r, {X * X + Y.pow(3), X * Y});
    CHECK(is_snp(snp).verdict.holds);
    CHECK(is_regular_sequence(snp).holds);

    PolySystem xy(r, {X * Y});
    CHECK(is_regular_sequence(xy).holds);
    CHECK_FALSE(is_noether_position(xy, 1).holds);
    CHECK_FALSE(is_noether_position_restricted(xy, 1).holds);
    auto s = is_snp(xy);
    CHECK_FALSE(s.verdict.holds);
    CHECK(s.first_failing_prefix == std::size_t{1});

    auto r3 = Ring::make(WeightSystem::ones(3));
    std::vector<Polynomial> sq;
    for (std::size_t i = 0; i < 3; ++i) sq.push_back(Polynomial::variable(r3, i, 2));
    CHECK(is_snp(PolySystem(r3, sq)).verdict.holds);
}

TEST_CASE("Noether position: both characterizations agree")
{
    std::mt19937_64 rng(3);
    std::size_t disagree = 0, nontrivial = 0;
    for (int k = 0; k < 50; ++k) {
        std::size_t n = rng() % 2 + 2;
        std::vector<int> w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<int>(rng() % 3) + 1);
        WeightSystem W(w);
        auto rr = Ring::make(W);
        std::vector<Polynomial> ps;
        while (ps.size() < n) {
            long d = static_cast<long>(rng() % 6) + 1;
            auto mons = monomials_of_degree(W, d);
            if (mons.empty()) continue;
            std::vector<Term> ts;
            for (const auto& m : mons)
                if (rng() % 2) ts.push_back({m, static_cast<coeff_t>(rng() % 65520 + 1)});
            if (ts.empty()) continue;
            ps.emplace_back(rr, ts);
        }
        PolySystem sys(rr, ps);
        for (std::size_t m = 1; m <= n; ++m) {
            bool a = is_noether_position(sys, m).holds, b = is_noether_position_restricted(sys, m).holds;
            if (a != b) ++disagree;
            if (!a) ++nontrivial;
            if (a) REQUIRE(is_regular_sequence(sys.prefix(m)).holds);
        }
        auto snp = is_snp(sys);
        if (snp.verdict.holds) {
            REQUIRE(is_noether_position(sys, n).holds);
            REQUIRE(is_regular_sequence(sys).holds);
        }
    }
    CHECK(disagree == 0);
    CHECK(nontrivial > 0);
}

TEST_CASE("semi-regularity")
{
    auto reg = random_w_homogeneous_system({3, 2, 1}, {6, 6, 6}, 2);
    auto v = is_semiregular(reg);
    CHECK(v.rank.holds);
    CHECK(v.series.holds);

    auto fr = froberg_sequence({2, 1}, {4, 4}, 4);
    auto rr = fr.ring;
    auto X1 = Polynomial::variable(rr, 0), X2 = Polynomial::variable(rr, 1);
    CHECK(fr.polys == std::vector<Polynomial>{X1 * X1, X2.pow(4), (X1 + X2 * X2).pow(2)});
    auto fv = is_semiregular(fr);
    CHECK(fv.rank.holds);
    CHECK(fv.series.holds);
    CHECK(fv.series_certifying);
    CHECK_FALSE(fv.inconclusive);

    auto r = Ring::make({1, 1});
    auto X = Polynomial::variable(r, 0), Y = Polynomial::variable(r, 1);
    auto bad = is_semiregular(PolySystem(r, {X * X, X * Y}));
    CHECK_FALSE(bad.rank.holds);
    REQUIRE(bad.first_failure);
    CHECK(bad.first_failure->i == 2);
    CHECK(bad.first_failure->d == 3);
    // X*XY = 0 and Y*XY = XY^2 on the bases {X, Y} -> {XY^2, Y^3}
    CHECK(bad.first_failure->deficiency == 2 - static_cast<long>(oracle::rank_mod({{0, 0}, {1, 0}}, 65521)));
    CHECK_FALSE(bad.series.holds);

    auto tiny = is_semiregular(froberg_sequence({1, 1}, {2, 2}, 2), 1);
    CHECK(tiny.inconclusive);
}

TEST_CASE("rank and series methods agree where the series method certifies")
{
    std::vector<std::vector<int>> weights = {{1, 1}, {2, 1}, {4, 2, 1}, {2, 2, 1}, {2, 1, 1}};
    std::size_t cases = 0;
    for (const auto& w : weights) {
        WeightSystem W(w);
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                    std::vector<int> d(w.size(), w[0] * a);
                    d.push_back(w[0] * b);
                    auto sys = random_w_homogeneous_system(W, DegreeSystem(d), seed);
                    auto v = is_semiregular(sys);
                    REQUIRE(v.series_certifying);
                    REQUIRE(v.rank.holds == v.series.holds);
                    ++cases;
                }
    }
    auto r = Ring::make({1, 1});
    auto X = Polynomial::variable(r, 0), Y = Polynomial::variable(r, 1);
    auto deg = is_semiregular(PolySystem(r, {X * X, Y * Y, X * X + Y * Y}));
    CHECK(deg.rank.holds == deg.series.holds);
    CHECK_FALSE(deg.rank.holds);
    CHECK(cases == 60);
}

TEST_CASE("Froberg construction")
{
    auto f = froberg_sequence({1, 1}, {2, 2}, 2);
    auto r = f.ring;
    auto X1 = Polynomial::variable(r, 0), X2 = Polynomial::variable(r, 1);
    CHECK(f.polys == std::vector<Polynomial>{X1 * X1, X2 * X2, (X1 + X2).pow(2)});
    CHECK_THROWS_AS(froberg_sequence({3, 2}, {6, 6}, 6), error);
    CHECK_THROWS_AS(froberg_sequence({2, 1}, {3, 2}, 4), error);
    CHECK_THROWS_AS(froberg_sequence({2, 1}, {4, 2}, 3), error);
    auto g = froberg_sequence({4, 2, 1}, {8, 4, 2}, 8);
    CHECK(is_w_homogeneous(g.polys.back()));
    CHECK(g.polys.back().wdegree() == 8);
}

TEST_CASE("divisors of a given W-degree")
{
    CHECK_FALSE(divisor_of_wdegree(Monomial{1, 2, 0}, 6, {3, 2, 1}));
    CHECK(divisor_of_wdegree(Monomial{2, 1, 3}, 13, {4, 2, 1}) == Monomial{2, 1, 3});
    CHECK(divisor_of_wdegree(Monomial{0, 3, 0}, 4, {4, 2, 1}) == Monomial{0, 2, 0});
    CHECK_THROWS_AS(divisor_of_wdegree(Monomial{1, 0, 0}, 5, {4, 2, 1}), error);

    // the divisor always exists exactly for reverse chain-divisible weights
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& W : sorted_weight_systems(n, 6)) {
            bool always = true;
            for (long d2 = 1; d2 <= 24 && always; ++d2)
                for (const auto& m2 : monomials_of_degree(W, d2)) {
                    if (!always) break;
                    for (std::size_t i = 0; i < n && always; ++i) {
                        bool free = true;
                        for (std::size_t j = 0; j < i; ++j)
                            if (m2[j]) free = false;
                        if (!free) continue;
                        for (long d1 = W[i]; d1 <= d2; d1 += W[i])
                            if (!divisor_of_wdegree(m2, d1, W)) {
                                always = false;
                                break;
                            }
                    }
                }
            REQUIRE(always == is_reverse_chain_divisible(W));
        }
}

TEST_CASE("inversion systems")
{
    auto r = Ring::make({1});
    auto X = Polynomial::variable(r, 0);
    auto s = inversion_system({X});
    CHECK(s.weights() == WeightSystem{1, 1});
    CHECK(s.polys[0] == Polynomial::variable(s.ring, 1) - Polynomial::variable(s.ring, 0));

    auto r2 = Ring::make({1, 1});
    auto a = Polynomial::variable(r2, 0), b = Polynomial::variable(r2, 1);
    auto sym = inversion_system({a + b, a * b});
    CHECK(sym.weights() == WeightSystem{1, 1, 1, 2});
    CHECK(elimination_gb(sym, 2).eliminated.empty());
    // Noether position with respect to the T's
    CHECK(is_noether_position(sym, 2).holds);
}

TEST_CASE("structure report")
{
    auto sys = random_w_homogeneous_system({3, 2, 1}, {6, 6, 6}, 1);
    auto rep = structure_report(sys);
    CHECK(rep.regular.holds);
    CHECK(rep.snp.verdict.holds);
    CHECK(rep.noether_position.size() == 3);
    CHECK(rep.semiregular.rank.holds);
    CHECK_FALSE(rep.reverse_chain_divisible);
    CHECK(rep.strongly_w_compatible);
    CHECK(rep.degrees_dominate);
    CHECK(rep.unit_last_weight);
    CHECK(rep.w1_divides_degrees);
}
