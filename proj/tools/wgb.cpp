#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <wgb/wgb.hpp>

using namespace wgb;

namespace {

std::vector<int> int_list(const std::string& s)
{
    std::vector<int> out;
    for (const auto& w : detail::split_list(s)) {
        std::size_t used = 0;
        int v = std::stoi(w, &used);
        if (used != w.size()) throw parse_error("not an integer: " + w);
        out.push_back(v);
    }
    if (out.empty()) throw parse_error("empty list");
    return out;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw error("cannot write " + out);
    f << text;
}

std::string series_text(const HilbertSeries& s)
{
    std::ostringstream os;
    for (std::size_t d = 0; d < s.coeffs.size(); ++d) os << (d ? " " : "") << s.coeffs[d];
    os << "\n";
    return os.str();
}

std::string gb_text(const GroebnerBasis& g)
{
    std::ostringstream os;
    for (const auto& p : g.polys) os << p.to_string() << "\n";
    const auto& s = g.stats;
    os << "# order " << g.order().name() << "\n"
       << "# size " << g.size() << "\n"
       << "# observed_dreg " << s.observed_dreg << "\n"
       << "# pairs_reduced " << s.pairs_reduced << "\n"
       << "# reductions_to_zero " << s.reductions_to_zero << "\n"
       << "# max_matrix " << s.max_matrix_rows << "x" << s.max_matrix_cols << "\n";
    if (!s.stop_reason.empty()) os << "# stop_reason " << s.stop_reason << "\n";
    return os.str();
}

GroebnerBasis compute_gb(const PolySystem& sys, const std::string& order, const std::string& engine,
                         const std::string& expect)
{
    if (!expect.empty() && engine != "matrix") throw error("--expect needs the matrix engine");
    if (order.rfind("elim:", 0) == 0) {
        if (engine != "buchberger") throw error("elimination orders run with the buchberger engine only");
        long k = std::stol(order.substr(5));
        if (k < 0) throw error("negative block size");
        return elimination_gb(sys, static_cast<std::size_t>(k)).basis;
    }
    MonomialOrder o = order == "lex" ? MonomialOrder::lex(sys.nvars()) : MonomialOrder::wgrevlex(sys.weights());
    if (order != "lex" && order != "wgrevlex") throw error("unknown order `" + order + "`");
    auto s = sys.with_order(o);
    if (engine == "buchberger") return buchberger(s);
    if (order != "wgrevlex") throw error("the " + engine + " engine needs the wgrevlex order");
    if (engine == "matrix") {
        MatrixGbOptions opt;
        if (expect == "regular") opt.expected_numerator = regular_numerator(sys.degrees());
        else if (expect == "semiregular") opt.expected_numerator = semiregular_numerator(sys.degrees(), sys.weights());
        else if (!expect.empty()) throw error("unknown series `" + expect + "`");
        return matrix_gb_whomog(s, opt);
    }
    if (engine == "homw") return gb_via_homw(s);
    throw error("unknown engine `" + engine + "`");
}

/// Matrix engine for W-homogeneous input, Buchberger otherwise.
GroebnerBasis wgrevlex_gb(const PolySystem& sys)
{
    auto s = sys.with_order(MonomialOrder::wgrevlex(sys.weights()));
    return s.is_w_homogeneous() ? matrix_gb_whomog(s) : buchberger(s);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"weighted homogeneous polynomial systems over GF(p)"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string out;

    auto* gen = app.add_subcommand("gen", "write a random system file");
    std::string weights, degrees;
    bool affine = false;
    std::uint64_t seed = 1, modulus = 0;
    gen->add_option("--weights", weights, "comma-separated weights")->required();
    gen->add_option("--degrees", degrees, "comma-separated W-degrees")->required();
    gen->add_flag("--affine", affine, "support on all monomials of W-degree at most d_i");
    gen->add_option("--seed", seed);
    gen->add_option("--modulus", modulus, "prime below 2^32 (default WGB_MODULUS or 65521)");
    gen->add_option("--out", out);

    std::string file, order = "wgrevlex", engine = "buchberger";
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis with statistics");
    gb->add_option("file", file)->required()->check(CLI::ExistingFile);
    gb->add_option("--order", order, "wgrevlex | lex | elim:k");
    gb->add_option("--engine", engine, "buchberger | matrix | homw");
    std::string expect;
    gb->add_option("--expect", expect, "regular | semiregular: stop once the leading terms reach this quotient series");
    gb->add_flag("--json", as_json);

    auto* hil = app.add_subcommand("hilbert", "quotient series of a system file, or N(T)/prod(1-T^w) from --weights/--degrees");
    long bound = -1;
    bool truncate = false;
    hil->add_option("file", file)->check(CLI::ExistingFile);
    hil->add_option("--weights", weights);
    hil->add_option("--degrees", degrees);
    hil->add_option("--bound", bound, "last degree to print");
    hil->add_flag("--truncate", truncate, "cut at the first non-positive coefficient");
    hil->add_flag("--json", as_json);

    auto* bnd = app.add_subcommand("bounds", "degree and complexity bounds of a square system");
    double omega = 3.0;
    bnd->add_option("file", file)->check(CLI::ExistingFile);
    bnd->add_option("--weights", weights);
    bnd->add_option("--degrees", degrees);
    bnd->add_option("--omega", omega);
    bnd->add_flag("--json", as_json);

    auto* str = app.add_subcommand("structure", "regularity, Noether position and semi-regularity");
    long window = -1;
    str->add_option("file", file)->required()->check(CLI::ExistingFile);
    str->add_option("--window", window, "last degree checked by the semi-regularity tests");
    str->add_flag("--json", as_json);

    auto* fg = app.add_subcommand("fglm", "lex basis of a zero-dimensional system");
    fg->add_option("file", file)->required()->check(CLI::ExistingFile);
    fg->add_flag("--json", as_json);

    auto* inv = app.add_subcommand("invert", "algebraic relations among the polynomials of a file");
    inv->add_option("file", file)->required()->check(CLI::ExistingFile);
    inv->add_flag("--json", as_json);

    auto* bench = app.add_subcommand("bench", "regenerate pinned values and diff against them");
    std::string which, pinned_path = std::string(WGB_DATA_DIR) + "/pinned_values.json";
    bool full = false;
    long budget = 1800;
    bench->add_option("name", which, "table1 | table2 | figures | dlp-pattern")->required();
    bench->add_option("--pinned", pinned_path)->check(CLI::ExistingFile);
    bench->add_flag("--full", full, "table2: measure dreg at full scale");
    bench->add_option("--budget", budget, "seconds allowed for --full");
    bench->add_option("--out", out, "report file");

    CLI11_PARSE(app, argc, argv);

    try {
        auto load = [&] { return read_system_file(file); };
        auto shape = [&]() -> std::pair<WeightSystem, DegreeSystem> {
            if (!file.empty()) {
                if (!weights.empty() || !degrees.empty()) throw error("give either a file or --weights/--degrees");
                auto s = load();
                return {s.weights(), s.degrees()};
            }
            if (weights.empty() || degrees.empty()) throw error("--weights and --degrees are required without a file");
            return {WeightSystem(int_list(weights)), DegreeSystem(int_list(degrees))};
        };

        if (*gen) {
            WeightSystem W(int_list(weights));
            DegreeSystem D(int_list(degrees));
            std::uint64_t p = modulus ? modulus : env_default_modulus();
            if (!is_prime(p) || p >= (1ULL << 32)) throw error("modulus must be a prime below 2^32");
            auto sys = affine ? random_affine_system(W, D, seed, p) : random_w_homogeneous_system(W, D, seed, p);
            emit(format_system(sys), out);
        } else if (*gb) {
            auto g = compute_gb(load(), order, engine, expect);
            std::cout << (as_json ? gb_json(g).dump(2) + "\n" : gb_text(g));
        } else if (*hil) {
            HilbertSeries s;
            if (!file.empty()) {
                if (!weights.empty() || !degrees.empty()) throw error("give either a file or --weights/--degrees");
                auto sys = load();
                auto g = structure_gb(sys);
                long N = bound >= 0 ? bound : default_window(sys.weights(), sys.degrees());
                s = quotient_hilbert_series(g, N);
            } else {
                auto [W, D] = shape();
                s = expand_rational(D, W, bound >= 0 ? bound : default_window(W, D));
            }
            long tdeg = -1;
            if (truncate) {
                auto t = truncate_semiregular(s);
                s = t.series;
                tdeg = t.degree;
            }
            if (as_json) {
                auto j = series_json(s);
                if (truncate) j["truncation_degree"] = tdeg;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << series_text(s);
            }
        } else if (*bnd) {
            auto [W, D] = shape();
            EstimatorConfig cfg;
            cfg.omega = omega;
            auto j = bounds_json(bounds_report(W, D, cfg), W, D);
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& [k, v] : j.items())
                    if (!v.is_object()) std::cout << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        } else if (*str) {
            auto r = structure_report(load(), window >= 0 ? std::optional<long>(window) : std::nullopt);
            auto j = structure_json(r);
            if (as_json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "regular " << r.regular.holds << "\n"
                          << "snp " << r.snp.verdict.holds << "\n"
                          << "semiregular_rank " << r.semiregular.rank.holds << "\n"
                          << "semiregular_series " << r.semiregular.series.holds << "\n";
                for (std::size_t i = 0; i < r.noether_position.size(); ++i)
                    std::cout << "noether_position " << i + 1 << " " << r.noether_position[i].holds << "\n";
            }
        } else if (*fg) {
            auto sys = load();
            auto g = wgrevlex_gb(sys);
            auto lex = fglm_lex(g);
            if (as_json) {
                json j = gb_json(lex);
                j["degree"] = staircase(g).size();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << gb_text(lex) << "# degree " << staircase(g).size() << "\n";
            }
        } else if (*inv) {
            auto sys = load();
            auto tagged = inversion_system(sys.polys);
            auto e = elimination_gb(tagged, sys.nvars());
            if (as_json) {
                json rel = json::array();
                for (const auto& p : e.eliminated) rel.push_back(p.to_string());
                std::cout << json{{"tagged_weights", tagged.weights().values()}, {"relations", rel}}.dump(2) << "\n";
            } else {
                for (const auto& p : e.eliminated) std::cout << p.to_string() << " = 0\n";
                if (e.eliminated.empty()) std::cout << "# no relations\n";
            }
        } else if (*bench) {
            BenchOptions o;
            o.full = full;
            o.budget = std::chrono::seconds(budget);
            auto r = run_bench(which, load_pinned(pinned_path), o);
            emit(r.report.dump(2) + "\n", out);
            if (!out.empty() && out != "-") std::cout << which << ": " << r.report["status"].get<std::string>() << "\n";
            return r.diffs == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "wgb: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
