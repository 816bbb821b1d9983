#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motivic/generators.hpp"

namespace motivic {

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

namespace selfcheck_detail {

struct Runner {
    std::vector<PropertyResult>& out;
    std::uint64_t seed;

    void run(const std::string& name, bool (*body)(gen::Rng&)) {
        PropertyResult r;
        r.name = name;
        gen::Rng rng(seed); // every property gets the same master seed
        try {
            r.passed = body(rng);
            if (!r.passed)
                r.detail = "property returned false";
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
};

inline bool projector_properties(gen::Rng& rng) {
    for (int t = 0; t < 40; ++t) {
        const SurfaceDatum s = gen::random_surface(rng);
        validate(s);
        const std::size_t r = s.exceptional.size();
        const Projector proj = projector_p(s);
        if (proj.p * proj.p != proj.p)
            return false;
        const RatMatrix qp = s.form * proj.p;
        if (!qp.is_symmetric())
            return false;
        if (proj.p.rank() != r)
            return false;
        for (const RatVec& d : s.exceptional)
            if (proj.p * d != d)
                return false;
        const IhDecomposition ih = ih_decomposition(s);
        if (ih.ih2_basis.size() != s.b2() - r)
            return false;
        if (restricted_form(s, ih.ih2_basis).det() == 0)
            return false;
        // ker(P) + span(exceptional) exhausts H^2.
        std::vector<RatVec> all = ih.ih2_basis;
        all.insert(all.end(), s.exceptional.begin(), s.exceptional.end());
        if (RatMatrix::from_columns(all, s.b2()).rank() != s.b2())
            return false;
        // Kunneth dims are palindromic and leave the ends untouched.
        const KunnethSummary k = kunneth_betti(s);
        if (k.dims[0] != 1 || k.dims[4] != 1 || k.dims[1] != k.dims[3] ||
            k.dims[1] != s.h1_dim)
            return false;
    }
    return true;
}

inline bool blowup_invariance(gen::Rng& rng) {
    for (int t = 0; t < 15; ++t) {
        const SurfaceDatum s = gen::random_surface(rng, 6, 3);
        const IhDecomposition ih0 = ih_decomposition(s);
        const RatMatrix r0 = restricted_form(s, ih0.ih2_basis);
        SurfaceDatum cur = s;
        for (int step = 0; step < 2; ++step) {
            cur = blow_up(cur);
            validate(cur);
            const IhDecomposition ih = ih_decomposition(cur);
            if (ih.ih2_basis.size() != ih0.ih2_basis.size())
                return false;
            const RatMatrix r1 = restricted_form(cur, ih.ih2_basis);
            if (r1.det() != r0.det() || r1.signature() != r0.signature())
                return false;
            const KunnethSummary k0 = kunneth_betti(s);
            const KunnethSummary k1 = kunneth_betti(cur);
            if (k0.dims != k1.dims)
                return false;
        }
    }
    return true;
}

inline bool degree_functoriality(gen::Rng& rng) {
    const RatMatrix id1 = RatMatrix::identity(2);
    if (!degree_check(id1, id1, RatMatrix{{1, 0}, {0, -1}},
                      RatMatrix{{1, 0}, {0, -1}}, 1))
        return false;
    if (!degree_check(id1, Rational(2) * id1, RatMatrix{{2, 0}, {0, -2}},
                      RatMatrix{{1, 0}, {0, -1}}, 2))
        return false;
    if (degree_check(id1, id1, RatMatrix{{2, 0}, {0, -2}},
                     RatMatrix{{1, 0}, {0, -1}}, 1))
        return false;
    for (int t = 0; t < 10; ++t) {
        gen::AdjointPair p = gen::random_adjoint_pair(rng);
        if (!degree_check(p.fpull, p.fpush, p.qx, p.qy, p.n))
            return false;
        // A broken adjunction must fail.
        p.qx.at(0, 0) += 1;
        if (degree_check(p.fpull, p.fpush, p.qx, p.qy, p.n))
            return false;
    }
    return true;
}

inline bool murre_correction(gen::Rng& rng) {
    int skew_seen = 0;
    for (int t = 0; t < 25; ++t) {
        const gen::MurreInput in = gen::random_murre(rng, t % 2 == 0);
        if (in.skew)
            ++skew_seen;
        const auto pis = murre_correct(in.pi0, in.p1, in.p3, in.pi4, in.n);
        RatMatrix sum(in.n, in.n);
        for (const RatMatrix& pi : pis)
            sum = sum + pi;
        if (sum != RatMatrix::identity(in.n))
            return false;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                const RatMatrix prod = pis[i] * pis[j];
                if (i == j ? prod != pis[i] : !prod.is_zero())
                    return false;
            }
    }
    return skew_seen >= 10;
}

inline bool hard_lefschetz(gen::Rng& rng) {
    for (int t = 0; t < 25; ++t) {
        const gen::LefschetzInstance in = gen::random_lefschetz(rng);
        const HardLefschetzReport r =
            hard_lefschetz_check(in.surface, in.c, in.a);
        if (!r.h0_h4_isomorphism)
            return false;
        if (sign_of(r.l_self_intersection) <= 0)
            return false;
        if (r.l_self_intersection <
            r.c_self_intersection - r.correction_self)
            return false;
    }
    return true;
}

inline bool divisor_motive(gen::Rng& rng) {
    for (std::size_t r = 3; r <= 8; ++r) {
        const CurveConfiguration polygon = cycle_configuration(r);
        if (motive_dims(polygon).m1_dim != 1)
            return false;
        if (!cech_check(polygon).passed())
            return false;
    }
    // Trees have m1 = 0, and edge subdivision preserves m1.
    for (int t = 0; t < 20; ++t) {
        CurveConfiguration chain;
        const std::size_t n = 2 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i)
            chain.components.push_back({"T" + std::to_string(i), 0, true});
        for (std::size_t i = 0; i + 1 < n; ++i)
            chain.nodes.push_back({chain.components[i].id,
                                   ProjPoint::at(QuadElem(Rational(1))),
                                   chain.components[i + 1].id,
                                   ProjPoint::at(QuadElem(Rational(0)))});
        if (motive_dims(chain).m1_dim != 0)
            return false;
        const CurveConfiguration cfg = gen::random_multigraph(rng, 5, 6, true);
        const long m1 = motive_dims(cfg).m1_dim;
        if (!cech_check(cfg).passed())
            return false;
        if (!cfg.nodes.empty()) {
            const CurveConfiguration sub = subdivide_node(
                cfg, rng() % cfg.nodes.size(), "S" + std::to_string(t));
            if (motive_dims(sub).m1_dim != m1)
                return false;
        }
    }
    return true;
}

inline bool intersection_correction_residuals(gen::Rng& rng) {
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const RatMatrix g = gen::random_negative_definite(rng, n);
        RatVec iv(n);
        for (std::size_t i = 0; i < n; ++i)
            iv[i] = gen::small_rational(rng);
        const RatVec a = intersection_correction(g, iv);
        if (g * a != iv)
            return false;
        if (!mat_kernel(g).empty())
            return false;
    }
    return true;
}

inline bool holonomy_invariance(gen::Rng& rng) {
    for (int t = 0; t < 20; ++t) {
        gen::BundleInstance in = gen::random_bundle_instance(rng, t % 2 == 0);
        const KStarClass h = holonomy(in.config, in.bundle, in.cycle);
        // Base-point rotation and orientation reversal.
        const KStarClass rotated = holonomy(
            in.config, in.bundle,
            rotate_walk(in.cycle, 1 + rng() % (in.cycle.size() - 1)));
        if (!kstar_equal(h, rotated))
            return false;
        if (!kstar_equal(holonomy(in.config, in.bundle,
                                  reverse_walk(in.cycle)),
                         h.inverse()))
            return false;
        // Moebius change of coordinate on one component.
        {
            CurveConfiguration cfg = in.config;
            ConfigLineBundle bun = in.bundle;
            const std::string comp =
                cfg.components[rng() % cfg.components.size()].id;
            moebius_transform_component(cfg, bun, comp, QuadElem(Rational(2)),
                                        QuadElem(Rational(1)),
                                        QuadElem(Rational(1)),
                                        QuadElem(Rational(3)));
            if (!kstar_equal(holonomy(cfg, bun, in.cycle), h))
                return false;
        }
        // Coboundary rescalings (needs the integer-multiplicity cases).
        if (t % 2 == 0) {
            const ConfigLineBundle scalar =
                to_scalar_presentation(in.config, in.bundle);
            if (!kstar_equal(holonomy(in.config, scalar, in.cycle), h))
                return false;
            const ConfigLineBundle rescaled = coboundary_rescale(
                in.config, scalar,
                in.config.components[rng() % in.config.components.size()].id,
                QuadElem(make_rational(3, 7)));
            if (!kstar_equal(holonomy(in.config, rescaled, in.cycle), h))
                return false;
            const PicPrimeClass n1 = coboundary_reduce(in.config, scalar);
            const PicPrimeClass n2 = coboundary_reduce(in.config, rescaled);
            if (n1.nonforest_classes.size() != n2.nonforest_classes.size())
                return false;
            for (const auto& [e, cls] : n1.nonforest_classes)
                if (!kstar_equal(cls, n2.nonforest_classes.at(e)))
                    return false;
        }
        // Group law, against itself and against the inverse.
        if (!pic_group_law_check(in.config, in.bundle, in.bundle, in.cycle))
            return false;
        if (!pic_group_law_check(in.config, in.bundle,
                                 bundle_inverse(in.bundle), in.cycle))
            return false;
    }
    return true;
}

inline bool kce_linearity(gen::Rng& rng) {
    const Rational qs[] = {Rational(2), make_rational(1, 2), Rational(-1),
                           make_rational(3, 5)};
    for (int t = 0; t < 10; ++t) {
        const KCEInput in = gen::random_kce_input(rng);
        const KStarClass base = cl_kce(in).holonomy_class;
        for (const Rational& q : qs) {
            KCEInput scaled = in;
            for (Rational& x : scaled.intersection_vector)
                x *= q;
            for (auto& [id, entries] : scaled.restriction_points)
                for (auto& e : entries)
                    e.mult *= q;
            if (!kstar_equal(cl_kce(scaled).holonomy_class, base.pow(q)))
                return false;
        }
    }
    return true;
}

inline bool cusp_suite(gen::Rng&) {
    for (const long d : {2L, 3L, 5L, 6L, 7L, 13L, 17L}) {
        const CuspCycle cycle = cusp_cycle(d);
        bool has_big = false;
        for (const Integer& b : cycle.period) {
            if (b < 2)
                return false;
            has_big = has_big || b >= 3;
        }
        if (!has_big)
            return false;
        if (!cusp_gram(cycle.period).is_negative_definite())
            return false;
        if (motive_dims(cycle.config).m1_dim != 1)
            return false;
        if (!unit_period_check(cycle).passed())
            return false;
    }
    return true;
}

inline bool exact_core_props(gen::Rng& rng) {
    for (int t = 0; t < 15; ++t) {
        const std::size_t n = 1 + rng() % 4;
        RatMatrix a(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a.at(i, j) = gen::uniform(rng, -5, 5);
        } while (a.det() == 0);
        RatVec b(n);
        for (std::size_t i = 0; i < n; ++i)
            b[i] = gen::small_rational(rng);
        if (a * mat_solve(a, b) != b)
            return false;
    }
    gen::Rng rng2(rng());
    for (int t = 0; t < 15; ++t) {
        const KStarClass a = [&] {
            KStarClass c;
            for (int i = 0; i < 3; ++i)
                c *= KStarClass(QuadElem(Rational(gen::uniform(rng2, 1, 9))),
                                gen::small_rational(rng2));
            return c;
        }();
        if (!kstar_equal(a, a))
            return false;
        if (!kstar_equal(a * a.inverse(), KStarClass::one()))
            return false;
    }
    return true;
}

} // namespace selfcheck_detail

// The full invariant suite on built-in fixtures and seeded random inputs.
inline std::vector<PropertyResult> run_selfcheck(std::uint64_t seed) {
    std::vector<PropertyResult> out;
    selfcheck_detail::Runner runner{out, seed};
    runner.run("exact_core", selfcheck_detail::exact_core_props);
    runner.run("projector", selfcheck_detail::projector_properties);
    runner.run("blow_up_invariance", selfcheck_detail::blowup_invariance);
    runner.run("degree_functoriality", selfcheck_detail::degree_functoriality);
    runner.run("murre_correction", selfcheck_detail::murre_correction);
    runner.run("hard_lefschetz", selfcheck_detail::hard_lefschetz);
    runner.run("divisor_motive", selfcheck_detail::divisor_motive);
    runner.run("intersection_correction", selfcheck_detail::intersection_correction_residuals);
    runner.run("holonomy", selfcheck_detail::holonomy_invariance);
    runner.run("kce_linearity", selfcheck_detail::kce_linearity);
    runner.run("cusp_generator", selfcheck_detail::cusp_suite);
    return out;
}

} // namespace motivic
