#pragma once

#include <optional>

#include "motivic/generators.hpp"
#include "motivic/io.hpp"
#include "motivic/selfcheck.hpp"

namespace motivic {

// Command implementations shared by the CLI binary and the test suites.
// They consume validated domain values and produce deterministic reports.

inline Report cmd_analyze(const SurfaceDatum& s) {
    validate(s);
    Report r;
    r.command = "analyze";

    const RatMatrix gram = gram_matrix(s);
    r.sections["b2"] = s.b2();
    r.sections["h1_dim"] = s.h1_dim;
    r.sections["euler_characteristic"] = euler_characteristic(s);
    r.sections["exceptional_count"] = s.exceptional.size();
    r.sections["gram_matrix"] = matrix_to_json(gram);
    r.sections["gram_negative_definite"] =
        s.exceptional.empty() || gram.is_negative_definite();

    const Projector proj = projector_p(s);
    r.sections["projector_rank"] = proj.p.rank();
    const IhDecomposition ih = ih_decomposition(s);
    r.sections["ih2_dim"] = ih.ih2_basis.size();
    const RatMatrix restricted = restricted_form(s, ih.ih2_basis);
    r.sections["restricted_form_det"] = rational_to_json(restricted.det());
    {
        const auto [pos, neg, zero] = restricted.signature();
        r.sections["restricted_form_signature"] =
            ordered_json{{"positive", pos}, {"negative", neg}, {"zero", zero}};
    }

    const KunnethSummary k = kunneth_betti(s);
    r.sections["kunneth_dims"] =
        ordered_json::array({k.dims[0], k.dims[1], k.dims[2], k.dims[3],
                             k.dims[4]});

    if (s.ample) {
        ordered_json hl;
        RatVec iv(s.exceptional.size());
        for (std::size_t m = 0; m < s.exceptional.size(); ++m)
            iv[m] = pair(s.form, *s.ample, s.exceptional[m]);
        try {
            const RatVec a = s.exceptional.empty()
                                 ? RatVec{}
                                 : intersection_correction(gram, iv);
            const HardLefschetzReport hlr = hard_lefschetz_check(s, *s.ample, a);
            hl["coefficients"] = vector_to_json(a);
            hl["lefschetz_class"] = vector_to_json(hlr.lefschetz_class);
            hl["l_self_intersection"] =
                rational_to_json(hlr.l_self_intersection);
            hl["h0_h4_isomorphism"] = hlr.h0_h4_isomorphism;
            if (hlr.h1_h3_isomorphism)
                hl["h1_h3_isomorphism"] = *hlr.h1_h3_isomorphism;
            else
                hl["h1_h3_isomorphism"] = "not evaluated";
            if (!hlr.h0_h4_isomorphism ||
                (hlr.h1_h3_isomorphism && !*hlr.h1_h3_isomorphism))
                r.status = "fail";
            else if (!hlr.h1_h3_isomorphism)
                r.status = "partial";
        } catch (const HypothesisViolated& e) {
            hl["hypothesis_violated"] = e.what();
            r.status = "partial";
        }
        r.sections["hard_lefschetz"] = hl;
    }
    return r;
}

inline Report cmd_divisor(const CurveConfiguration& c,
                          std::optional<long> chi_smooth = std::nullopt) {
    validate(c);
    Report r;
    r.command = "divisor";

    const MotiveOfD m = motive_dims(c);
    r.sections["components"] = c.components.size();
    r.sections["nodes"] = c.nodes.size();
    r.sections["m0_dim"] = m.m0_dim;
    r.sections["m1_dim"] = m.m1_dim;
    r.sections["m2_dim"] = m.m2_dim;
    r.sections["graph_b1"] = m.graph_b1;
    {
        ordered_json basis = ordered_json::array();
        for (const RatVec& v : m.cycle_basis)
            basis.push_back(ordered_json(vector_to_json(v)));
        r.sections["cycle_basis"] = basis;
    }

    const CechReport cech = cech_check(c);
    r.sections["cech"] = ordered_json{
        {"boundary_rank", cech.boundary_rank},
        {"kernel_dim", cech.kernel_dim},
        {"rank_nullity_ok", cech.rank_nullity_ok},
        {"kernel_matches_b1", cech.kernel_matches_b1},
        {"euler_identity_ok", cech.euler_identity_ok},
        {"cycle_basis_in_kernel", cech.cycle_basis_in_kernel}};
    if (!cech.passed())
        r.status = "fail";

    r.sections["euler_char_divisor"] = euler_char_divisor(c);
    if (chi_smooth)
        r.sections["euler_char_compact"] = euler_char_compact(c, *chi_smooth);
    return r;
}

inline Report cmd_kce(const KCEInput& input, bool reverse_orientation) {
    KCEInput in = input;
    if (reverse_orientation) {
        if (in.distinguished_cycle.empty())
            in.distinguished_cycle = default_cycle(in.config);
        in.distinguished_cycle = reverse_walk(in.distinguished_cycle);
    }
    const KCEResult result = cl_kce(in);
    Report r;
    r.command = "kce";
    r.sections["orientation"] = reverse_orientation ? "reverse" : "forward";
    r.sections["cycle"] = walk_to_json(result.cycle);
    r.sections["correction_coefficients"] = vector_to_json(result.correction);
    {
        ordered_json corrected = ordered_json::object();
        for (const auto& [id, entries] : result.corrected_divisors) {
            ordered_json list = ordered_json::array();
            for (const auto& e : entries)
                list.push_back(ordered_json{
                    {"point", point_to_json(e.point)},
                    {"mult", rational_to_json(e.mult)}});
            corrected[id] = list;
        }
        r.sections["corrected_divisors"] = corrected;
    }
    r.sections["class"] = kstar_to_json(result.holonomy_class);
    if (const auto value = kstar_collapse(result.holonomy_class))
        r.sections["class_value"] = quad_to_json(*value);
    r.sections["class_is_trivial"] =
        kstar_equal(result.holonomy_class, KStarClass::one());
    return r;
}

inline Report cmd_cusp(long d, CuspCycle* out_cycle = nullptr) {
    const CuspCycle cycle = cusp_cycle(d);
    Report r;
    r.command = "cusp";
    r.sections["d"] = d;
    {
        ordered_json pre = ordered_json::array();
        for (const Integer& b : cycle.preperiod)
            pre.push_back(b.get_str());
        ordered_json per = ordered_json::array();
        for (const Integer& b : cycle.period)
            per.push_back(b.get_str());
        r.sections["preperiod"] = pre;
        r.sections["period"] = per;
    }
    r.sections["seed"] = ordered_json{{"p", cycle.seed.p.get_str()},
                                      {"q", cycle.seed.q.get_str()},
                                      {"d", cycle.seed.d}};
    const RatMatrix gram = cusp_gram(cycle.period);
    r.sections["gram_matrix"] = matrix_to_json(gram);
    r.sections["gram_negative_definite"] = gram.is_negative_definite();

    const QuadElem eps = fundamental_unit(d);
    r.sections["fundamental_unit"] = quad_to_json(eps);

    const UnitPeriodReport unit = unit_period_check(cycle);
    r.sections["unit_period_check"] = ordered_json{
        {"det_one", unit.det_one},
        {"fixes_seed", unit.fixes_seed},
        {"eigenvalue", quad_to_json(unit.eigenvalue)},
        {"eigenvalue_is_unit", unit.eigenvalue_is_unit},
        {"totally_positive", unit.totally_positive},
        {"power_of_fundamental", unit.power_of_fundamental},
        {"exponent", unit.exponent},
        {"passed", unit.passed()}};
    if (!gram.is_negative_definite() || !unit.passed())
        r.status = "fail";
    if (out_cycle)
        *out_cycle = cycle;
    return r;
}

inline Report cmd_selfcheck(std::uint64_t seed) {
    const std::vector<PropertyResult> results = run_selfcheck(seed);
    Report r;
    r.command = "selfcheck";
    r.sections["seed"] = seed;
    ordered_json props = ordered_json::object();
    bool all = true;
    for (const PropertyResult& p : results) {
        ordered_json entry;
        entry["passed"] = p.passed;
        if (!p.detail.empty())
            entry["detail"] = p.detail;
        props[p.name] = entry;
        all = all && p.passed;
    }
    r.sections["properties"] = props;
    if (!all)
        r.status = "fail";
    return r;
}

} // namespace motivic
