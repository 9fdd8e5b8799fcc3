#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "fglm.hpp"
#include "generators.hpp"
#include "matrix_gb.hpp"
#include "report.hpp"
#include "series.hpp"

namespace wgb {

struct BenchOptions {
    bool full = false;
    std::chrono::seconds budget{1800};
};

struct BenchOutcome {
    json report;
    std::size_t diffs = 0;
};

inline json load_pinned(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw error("cannot open pinned values " + path);
    return json::parse(in);
}

namespace detail {

class DiffLog {
public:
    explicit DiffLog(std::string bench) : bench_(std::move(bench)) {}

    template <class A, class B>
    void check(const json& entry, const std::string& field, const A& expected, const B& actual)
    {
        json e = expected, a = actual;
        if (e == a) return;
        diffs_.push_back({{"key", entry.at("key")},
                          {"source", entry.at("source")},
                          {"field", field},
                          {"expected", e},
                          {"actual", a}});
    }

    BenchOutcome finish(json instances) &&
    {
        std::sort(instances.begin(), instances.end(),
                  [](const json& a, const json& b) { return a.at("key") < b.at("key"); });
        BenchOutcome out;
        out.diffs = diffs_.size();
        out.report = {{"bench", bench_},
                      {"status", diffs_.empty() ? "ok" : "diff"},
                      {"instances", std::move(instances)},
                      {"diffs", diffs_}};
        return out;
    }

private:
    std::string bench_;
    json diffs_ = json::array();
};

inline WeightSystem weights_of(const json& e) { return WeightSystem(e.at("weights").get<std::vector<int>>()); }
inline DegreeSystem degrees_of(const json& e) { return DegreeSystem(e.at("degrees").get<std::vector<int>>()); }

} // namespace detail

/// Measured dreg over several seeds and the two Macaulay bounds.
inline BenchOutcome bench_table1(const json& pinned)
{
    detail::DiffLog log("table1");
    json rows = json::array();
    for (const auto& e : pinned.at("table1")) {
        auto W = detail::weights_of(e);
        auto D = detail::degrees_of(e);
        int seeds = e.at("seeds");
        long expected = e.at("dreg");
        MatrixGbOptions opt;
        opt.expected_numerator = regular_numerator(D);
        std::vector<long> measured;
        for (int s = 1; s <= seeds; ++s) {
            auto sys = random_w_homogeneous_system(W, D, static_cast<std::uint64_t>(s));
            measured.push_back(matrix_gb_whomog(sys, opt).stats.observed_dreg);
        }
        long agree = std::count(measured.begin(), measured.end(), expected);
        auto snp = macaulay_snp(W, D);
        json row{{"key", e.at("key")},
                 {"weights", W.values()},
                 {"degrees", D.values()},
                 {"measured_dreg", measured},
                 {"agreeing_seeds", agree},
                 {"macaulay_weak", macaulay_weak(W, D)},
                 {"macaulay_snp", snp.value}};
        log.check(e, "agreeing_seeds>=" + std::to_string(e.at("min_agreeing_seeds").get<int>()), true,
                  agree >= e.at("min_agreeing_seeds").get<long>());
        log.check(e, "macaulay_weak", e.at("macaulay_weak"), row["macaulay_weak"]);
        log.check(e, "macaulay_snp", e.at("macaulay_snp"), row["macaulay_snp"]);
        rows.push_back(std::move(row));
    }
    return std::move(log).finish(std::move(rows));
}

/// Bound columns; with `full`, the measured dreg as well under a wall-clock budget.
inline BenchOutcome bench_table2(const json& pinned, const BenchOptions& o = {})
{
    detail::DiffLog log("table2");
    json rows = json::array();
    for (const auto& e : pinned.at("table2")) {
        auto W = detail::weights_of(e);
        auto D = detail::degrees_of(e);
        auto conj = conjectured_dreg(W, D);
        json row{{"key", e.at("key")},
                 {"weights", W.values()},
                 {"degrees", D.values()},
                 {"macaulay_weak", macaulay_weak(W, D)},
                 {"macaulay_snp", macaulay_snp(W, D).value},
                 {"conjectured_dreg", conj.value}};
        for (const char* f : {"macaulay_weak", "macaulay_snp", "conjectured_dreg"}) log.check(e, f, e.at(f), row[f]);
        if (o.full) {
            MatrixGbOptions opt;
            opt.expected_numerator = regular_numerator(D);
            opt.deadline = std::chrono::steady_clock::now() + o.budget;
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto g = matrix_gb_whomog(random_w_homogeneous_system(W, D, 1), opt);
                row["measured_dreg"] = g.stats.observed_dreg;
                log.check(e, "dreg", e.at("dreg"), row["measured_dreg"]);
            } catch (const window_exhausted& x) {
                // reported, not a diff
                row["measured_dreg"] = nullptr;
                row["budget_exhausted_at_degree"] = x.degree;
            }
            row["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        rows.push_back(std::move(row));
    }
    return std::move(log).finish(std::move(rows));
}

/// Exact coefficient sequences of the rational series, truncated where the entry asks for it.
inline BenchOutcome bench_figures(const json& pinned)
{
    detail::DiffLog log("figures");
    json rows = json::array();
    for (const auto& e : pinned.at("figures")) {
        auto W = detail::weights_of(e);
        auto D = detail::degrees_of(e);
        auto pin = e.at("coefficients");
        long N = static_cast<long>(pin.size()) - 1;
        HilbertSeries s;
        json row{{"key", e.at("key")}, {"weights", W.values()}, {"degrees", D.values()}};
        if (e.at("truncate").get<bool>()) {
            auto t = truncate_semiregular(expand_rational(D, W, N + 1));
            s = t.series;
            row["truncation_degree"] = t.degree;
        } else {
            s = expand_rational(D, W, N);
        }
        json c = json::array();
        for (const auto& a : s.coeffs) c.push_back(big_json(a));
        row["coefficients"] = c;
        log.check(e, "coefficients", pin, c);
        rows.push_back(std::move(row));
    }
    return std::move(log).finish(std::move(rows));
}

/// Weighted Bezout degree; instances flagged `computed` also count the staircase of a random system.
inline BenchOutcome bench_dlp_pattern(const json& pinned)
{
    detail::DiffLog log("dlp-pattern");
    json rows = json::array();
    for (const auto& e : pinned.at("dlp_pattern")) {
        auto W = detail::weights_of(e);
        auto D = detail::degrees_of(e);
        json row{{"key", e.at("key")},
                 {"weights", W.values()},
                 {"degrees", D.values()},
                 {"bezout_degree", rational_json(weighted_bezout(W, D))}};
        log.check(e, "degree", e.at("degree"), row["bezout_degree"]);
        if (e.at("computed").get<bool>()) {
            MatrixGbOptions opt;
            opt.expected_numerator = regular_numerator(D);
            auto g = matrix_gb_whomog(random_w_homogeneous_system(W, D, 1), opt);
            row["staircase_size"] = staircase(g).size();
            row["observed_dreg"] = g.stats.observed_dreg;
            log.check(e, "staircase_size", e.at("degree"), row["staircase_size"]);
        }
        rows.push_back(std::move(row));
    }
    return std::move(log).finish(std::move(rows));
}

inline BenchOutcome run_bench(const std::string& name, const json& pinned, const BenchOptions& o = {})
{
    if (name == "table1") return bench_table1(pinned);
    if (name == "table2") return bench_table2(pinned, o);
    if (name == "figures") return bench_figures(pinned);
    if (name == "dlp-pattern") return bench_dlp_pattern(pinned);
    throw error("unknown bench `" + name + "`");
}

} // namespace wgb
