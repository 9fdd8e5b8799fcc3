#pragma once

#include <json.hpp>

#include "bounds.hpp"
#include "groebner.hpp"
#include "series.hpp"
#include "structure.hpp"

namespace wgb {

using json = nlohmann::ordered_json;

/// Integer when it fits in 64 bits, decimal string otherwise.
inline json big_json(const bigint& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json rational_json(const rational& q)
{
    if (boost::multiprecision::denominator(q) == 1) return big_json(boost::multiprecision::numerator(q));
    return q.str();
}

inline json series_json(const HilbertSeries& s)
{
    json c = json::array();
    for (const auto& a : s.coeffs) c.push_back(big_json(a));
    json j{{"coefficients", c}, {"polynomial", s.is_polynomial}};
    if (s.is_polynomial) j["degree"] = s.poly_degree;
    return j;
}

inline json gb_json(const GroebnerBasis& g)
{
    json polys = json::array();
    for (const auto& p : g.polys) polys.push_back(p.to_string());
    const auto& st = g.stats;
    return {{"order", g.order().name()},
            {"reduced", g.reduced},
            {"size", g.polys.size()},
            {"polys", polys},
            {"stats",
             {{"pairs_considered", st.pairs_considered},
              {"pairs_reduced", st.pairs_reduced},
              {"reductions_to_zero", st.reductions_to_zero},
              {"observed_dreg", st.observed_dreg},
              {"max_matrix_rows", st.max_matrix_rows},
              {"max_matrix_cols", st.max_matrix_cols},
              {"field_ops", st.field_ops},
              {"stop_reason", st.stop_reason}}}};
}

inline json bounds_json(const BoundsReport& r, const WeightSystem& W, const DegreeSystem& D)
{
    json j{{"weights", W.values()},
           {"degrees", D.values()},
           {"macaulay_weak", r.macaulay_weak},
           {"macaulay_snp", r.macaulay_snp.value},
           {"macaulay_general", r.macaulay_snp.general},
           {"snp_hypotheses", {{"degrees_dominate_previous_weights", r.macaulay_snp.degrees_dominate},
                               {"strongly_w_compatible", r.macaulay_snp.strongly_compatible}}},
           {"frobenius_g", r.frobenius_g ? json(*r.frobenius_g) : json(nullptr)},
           {"d0", r.conjectured ? json(r.conjectured->d0) : json(nullptr)},
           {"conjectured_dreg", r.conjectured ? json(r.conjectured->value) : json(nullptr)},
           {"bezout_degree", rational_json(r.bezout_degree)},
           {"denumerant_at_dreg", big_json(r.denumerant_at_dreg)},
           {"omega", r.omega},
           {"matrix_size", big_json(r.costs.matrix_size)},
           {"c_f5", r.costs.c_f5},
           {"c_f5_surrogate", r.costs.c_f5_surrogate},
           {"c_fglm", r.costs.c_fglm}};
    return j;
}

inline json verdict_json(const Verdict& v)
{
    json j{{"holds", v.holds}, {"basis", v.basis}};
    j["window"] = v.window < 0 ? json("exact") : json(v.window);
    return j;
}

inline json structure_json(const StructureReport& r)
{
    json np = json::array();
    for (const auto& v : r.noether_position) np.push_back(verdict_json(v));
    json sr{{"rank_method", verdict_json(r.semiregular.rank)},
            {"series_method", verdict_json(r.semiregular.series)},
            {"series_certifying", r.semiregular.series_certifying},
            {"inconclusive", r.semiregular.inconclusive}};
    if (r.semiregular.first_failure) {
        const auto& f = *r.semiregular.first_failure;
        sr["first_failure"] = {{"i", f.i}, {"d", f.d}, {"rank_deficiency", f.deficiency}};
    }
    if (r.semiregular.first_series_mismatch) sr["first_series_mismatch_prefix"] = *r.semiregular.first_series_mismatch;
    json snp{{"holds", r.snp.verdict.holds}};
    if (r.snp.first_failing_prefix) snp["first_failing_prefix"] = *r.snp.first_failing_prefix;
    return {{"regular", verdict_json(r.regular)},
            {"noether_position", np},
            {"snp", snp},
            {"semiregular", sr},
            {"reverse_chain_divisible", r.reverse_chain_divisible},
            {"strongly_w_compatible", r.strongly_w_compatible},
            {"hypotheses",
             {{"degrees_dominate_previous_weights", r.degrees_dominate},
              {"w1_divides_degrees", r.w1_divides_degrees},
              {"unit_last_weight", r.unit_last_weight}}}};
}

} // namespace wgb
