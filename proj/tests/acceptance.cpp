// Acceptance suite: one exact, seeded, zero-tolerance check per criterion,
// one PASS/FAIL line each. Exit status 0 iff every criterion passes.
//
// Usage: acceptance [fixtures-dir]

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "motivic/commands.hpp"

using namespace motivic;

namespace {

std::string g_fixtures = "fixtures";

struct Criterion {
    int number;
    std::string title;
    std::function<void()> body; // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok)
        throw Failure(what);
}

// --- 1: projector identities ------------------------------------------------

void criterion_projector() {
    gen::Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        const SurfaceDatum s = gen::random_surface(rng, 8, 4);
        validate(s);
        const std::size_t r = s.exceptional.size();
        const Projector proj = projector_p(s);
        require(proj.p * proj.p == proj.p, "P^2 != P");
        const RatMatrix qp = s.form * proj.p;
        require(qp.transpose() == qp, "(QP)^T != QP");
        require(proj.p.rank() == r, "rank P != r");
        for (const RatVec& d : s.exceptional)
            require(proj.p * d == d, "P d != d");
        const IhDecomposition ih = ih_decomposition(s);
        require(ih.ih2_basis.size() == s.b2() - r, "dim ker P != b2 - r");
        require(restricted_form(s, ih.ih2_basis).det() != 0,
                "restricted form degenerate");
    }
}

// --- 2: blow-up invariance --------------------------------------------------

void criterion_blowup() {
    gen::Rng rng(202);
    for (int t = 0; t < 50; ++t) {
        const SurfaceDatum s = gen::random_surface(rng, 6, 3);
        const IhDecomposition ih0 = ih_decomposition(s);
        const RatMatrix r0 = restricted_form(s, ih0.ih2_basis);
        SurfaceDatum cur = s;
        for (int step = 0; step < 2; ++step) {
            cur = blow_up(cur);
            validate(cur);
            const IhDecomposition ih = ih_decomposition(cur);
            require(ih.ih2_basis.size() == ih0.ih2_basis.size(),
                    "IH^2 dimension changed under blow-up");
            const RatMatrix r1 = restricted_form(cur, ih.ih2_basis);
            require(r1.det() == r0.det(),
                    "restricted form determinant changed");
            require(r1.signature() == r0.signature(),
                    "restricted form signature changed");
        }
    }
}

// --- 3: degree functoriality ------------------------------------------------

void criterion_degree() {
    const RatMatrix id = RatMatrix::identity(2);
    const RatMatrix qy{{1, 0}, {0, -1}};
    require(degree_check(id, id, qy, qy, 1), "identity example failed");
    require(degree_check(id, Rational(2) * id, Rational(2) * qy, qy, 2),
            "degree-2 example failed");
    require(!degree_check(id, id, Rational(2) * qy, qy, 1),
            "broken adjunction accepted");
    gen::Rng rng(303);
    for (int t = 0; t < 20; ++t) {
        gen::AdjointPair p = gen::random_adjoint_pair(rng);
        require(degree_check(p.fpull, p.fpush, p.qx, p.qy, p.n),
                "generated adjoint pair failed");
        p.qx.at(0, 0) += 1;
        require(!degree_check(p.fpull, p.fpush, p.qx, p.qy, p.n),
                "deliberately broken adjunction accepted");
    }
}

// --- 4: Murre correction ----------------------------------------------------

void criterion_murre() {
    gen::Rng rng(404);
    int skew = 0;
    for (int t = 0; t < 100; ++t) {
        const gen::MurreInput in = gen::random_murre(rng, t % 2 == 0);
        if (in.skew)
            ++skew;
        const auto pis = murre_correct(in.pi0, in.p1, in.p3, in.pi4, in.n);
        RatMatrix sum(in.n, in.n);
        for (const RatMatrix& pi : pis) {
            require(pi * pi == pi, "corrected projector not idempotent");
            sum = sum + pi;
        }
        require(sum == RatMatrix::identity(in.n), "projectors do not sum to "
                                                  "the identity");
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                if (i != j)
                    require((pis[i] * pis[j]).is_zero(),
                            "projectors not mutually orthogonal");
    }
    require(skew >= 50, "fewer than half the tuples had p1 p3 != 0");
}

// --- 5: Hard Lefschetz inequality ---------------------------------------------

void criterion_lefschetz() {
    gen::Rng rng(505);
    for (int t = 0; t < 100; ++t) {
        const gen::LefschetzInstance in = gen::random_lefschetz(rng);
        const HardLefschetzReport r =
            hard_lefschetz_check(in.surface, in.c, in.a);
        require(sign_of(r.l_self_intersection) > 0, "l.l <= 0");
        require(r.l_self_intersection >=
                    r.c_self_intersection - r.correction_self,
                "l.l < c.c - (sum a_m d_m)^2");
    }
}

// --- 6: divisor motive --------------------------------------------------------

void criterion_divisor() {
    for (std::size_t r = 3; r <= 8; ++r) {
        require(motive_dims(cycle_configuration(r)).m1_dim == 1,
                "polygon m1 != 1");
        require(cech_check(cycle_configuration(r)).passed(),
                "polygon Cech check failed");
    }
    gen::Rng rng(606);
    for (int t = 0; t < 20; ++t) {
        // Random tree: attach each new vertex to an earlier one.
        CurveConfiguration tree;
        const std::size_t n = 2 + rng() % 5;
        for (std::size_t i = 0; i < n; ++i)
            tree.components.push_back({"T" + std::to_string(i), 0, false});
        for (std::size_t i = 1; i < n; ++i)
            tree.nodes.push_back(
                {tree.components[rng() % i].id,
                 ProjPoint::at(QuadElem(Rational(0))), tree.components[i].id,
                 ProjPoint::at(QuadElem(Rational(1)))});
        require(motive_dims(tree).m1_dim == 0, "tree m1 != 0");
    }
    for (int t = 0; t < 100; ++t) {
        const CurveConfiguration cfg = gen::random_multigraph(rng);
        const CechReport r = cech_check(cfg);
        require(r.euler_identity_ok, "V - E != m0 - b1");
        require(r.passed(), "Cech exactness failed");
        if (!cfg.nodes.empty()) {
            const CurveConfiguration sub = subdivide_node(
                cfg, rng() % cfg.nodes.size(), "S" + std::to_string(t));
            require(motive_dims(sub).m1_dim == motive_dims(cfg).m1_dim,
                    "edge subdivision changed m1");
        }
    }
}

// --- 7: intersection-correction residuals ----------------------------------

void criterion_correction() {
    gen::Rng rng(707);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 4;
        const RatMatrix g = gen::random_negative_definite(rng, n);
        RatVec iv(n);
        for (std::size_t i = 0; i < n; ++i)
            iv[i] = gen::small_rational(rng);
        const RatVec a = intersection_correction(g, iv);
        require(g * a == iv, "residual iv - G a != 0");
        require(mat_kernel(g).empty(), "solution not unique");
    }
}

// --- 8: holonomy well-definedness ------------------------------------------------

void criterion_holonomy() {
    gen::Rng rng(808);
    for (int t = 0; t < 100; ++t) {
        gen::BundleInstance in = gen::random_bundle_instance(rng, true);
        const KStarClass h = holonomy(in.config, in.bundle, in.cycle);

        // (a) coboundary rescaling, through the cocycle presentation.
        const ConfigLineBundle scalar =
            to_scalar_presentation(in.config, in.bundle);
        require(kstar_equal(holonomy(in.config, scalar, in.cycle), h),
                "scalar presentation changed the class");
        const std::string comp =
            in.config.components[rng() % in.config.components.size()].id;
        const QuadElem lambda(make_rational(gen::uniform(rng, 1, 9),
                                            gen::uniform(rng, 1, 4)));
        require(kstar_equal(holonomy(in.config,
                                     coboundary_rescale(in.config, scalar,
                                                        comp, lambda),
                                     in.cycle),
                            h),
                "coboundary rescaling changed the class");

        // (b) Moebius coordinate change on one component.
        CurveConfiguration cfg = in.config;
        ConfigLineBundle bun = in.bundle;
        moebius_transform_component(
            cfg, bun, in.config.components[rng() % cfg.components.size()].id,
            QuadElem(Rational(gen::uniform(rng, 1, 3))),
            QuadElem(Rational(gen::uniform(rng, -2, 2))),
            QuadElem(Rational(1)), QuadElem(Rational(gen::uniform(rng, 3, 5))));
        require(kstar_equal(holonomy(cfg, bun, in.cycle), h),
                "Moebius coordinate change changed the class");

        // (c) base-point rotation; orientation reversal; group law.
        require(kstar_equal(holonomy(in.config, in.bundle,
                                     rotate_walk(in.cycle,
                                                 1 + rng() % (in.cycle.size() -
                                                              1))),
                            h),
                "base-point rotation changed the class");
        require(kstar_equal(holonomy(in.config, in.bundle,
                                     reverse_walk(in.cycle)),
                            h.inverse()),
                "orientation reversal did not invert the class");
        require(pic_group_law_check(in.config, in.bundle, in.bundle,
                                    in.cycle),
                "group law failed (b (x) b)");
        require(pic_group_law_check(in.config, in.bundle,
                                    bundle_inverse(in.bundle), in.cycle),
                "group law failed (b (x) b^{-1})");
    }
}

// --- 9: cl_KCE linearity -----------------------------------------------------------

void criterion_kce_linearity() {
    gen::Rng rng(909);
    const Rational qs[] = {Rational(2), make_rational(1, 2), Rational(-1),
                           make_rational(3, 5)};
    for (int t = 0; t < 30; ++t) {
        const KCEInput in = gen::random_kce_input(rng);
        const KStarClass base = cl_kce(in).holonomy_class;
        for (const Rational& q : qs) {
            KCEInput scaled = in;
            for (Rational& x : scaled.intersection_vector)
                x *= q;
            for (auto& [id, entries] : scaled.restriction_points)
                for (auto& e : entries)
                    e.mult *= q;
            require(kstar_equal(cl_kce(scaled).holonomy_class, base.pow(q)),
                    "scaling by " + rational_to_string(q) +
                        " did not raise the class to the q-th power");
        }
    }
}

// --- 10: cusp generator ---------------------------------------------------------------

QuadElem pell_oracle(long d) {
    // Independent brute-force search over y up to 10^6.
    const bool half = d % 4 == 1;
    for (long y = 1; y <= 1000000L; ++y) {
        const Integer dy2 = Integer(d) * Integer(y) * Integer(y);
        for (const long c : {half ? -4L : -1L, half ? 4L : 1L}) {
            const Integer x2 = dy2 + c;
            if (x2 <= 0 || !is_perfect_square(x2))
                continue;
            const Integer x = isqrt(x2);
            QuadElem u = half ? QuadElem(make_rational(x, 2),
                                         make_rational(y, 2), d)
                              : QuadElem(Rational(x), Rational(y), d);
            if (!u.is_totally_positive())
                u = u * u;
            return u;
        }
    }
    throw Failure("pell oracle found no solution");
}

void criterion_cusp() {
    for (const long d : {2L, 3L, 5L, 6L, 7L, 13L, 17L}) {
        const CuspCycle cycle = cusp_cycle(d);
        bool big = false;
        for (const Integer& b : cycle.period) {
            require(b >= 2, "period digit < 2");
            big = big || b >= 3;
        }
        require(big, "no period digit >= 3");
        require(cusp_gram(cycle.period).is_negative_definite(),
                "cycle Gram not negative definite");
        require(motive_dims(cycle.config).m1_dim == 1,
                "emitted config has m1 != 1");
        const UnitPeriodReport r = unit_period_check(cycle);
        require(r.passed(), "unit period check failed for d = " +
                                std::to_string(d));
        require(r.exponent >= 1, "eigenvalue not a positive power");
        require(fundamental_unit(d) == pell_oracle(d),
                "fundamental unit disagrees with the Pell oracle");
    }
}

// --- 11: explicit values ------------------------------------------------------------------

void criterion_explicit() {
    const CuspCycle five = cusp_cycle(5);
    require(five.period.size() == 1 && five.period[0] == 3,
            "d = 5 period != [3]");
    require(fundamental_unit(5) ==
                QuadElem(make_rational(3, 2), make_rational(1, 2), 5),
            "epsilon(5) != (3+sqrt5)/2");

    CurveConfiguration square = cycle_configuration(4);
    std::map<std::string, std::vector<DivisorEntry>> div;
    for (const auto& comp : square.components)
        div[comp.id] = {
            {ProjPoint::at(QuadElem(Rational(2))), Rational(1)},
            {ProjPoint::at(QuadElem(Rational(3))), Rational(-1)}};
    const KStarClass h =
        holonomy(square, ConfigLineBundle::from_divisors(div),
                 Walk{{0, true}, {1, true}, {2, true}, {3, true}});
    require(kstar_equal(h, KStarClass(QuadElem(make_rational(81, 256)),
                                      Rational(1))),
            "square fixture holonomy != 81/256");
}

// --- 12: out-of-scope statement ------------------------------------------------------------

void criterion_out_of_scope() {
    // The headline Hilbert-modular value (the class of the modular line
    // bundles being the fundamental totally positive unit up to
    // orientation) needs transition data from an external construction
    // that this repository does not reproduce. The fixture slot documents
    // where that data goes; with its placeholder content the class is
    // trivial, and the property suites above stand in for the value.
    const InputDocument doc =
        load_document(g_fixtures + "/kce_d5_slot.json", "kce");
    require(doc.payload.contains("note") && doc.payload["note"].is_string(),
            "fixture slot is missing its documenting note");
    const SurfaceDatum s = surface_from_payload(
        io_detail::require(doc.payload, "surface", "kce"));
    const CurveConfiguration cfg = config_from_payload(
        io_detail::require(doc.payload, "config", "kce"));
    const json& bp = io_detail::require(doc.payload, "bundle", "kce");
    const KCEInput in = kce_from_parts(s, cfg, bundle_from_payload(bp), bp,
                                       Walk{});
    require(in.scalar_bundle.has_value(),
            "fixture slot must carry scalar transition data");
    const KCEResult r = cl_kce(in);
    require(kstar_equal(r.holonomy_class, KStarClass::one()),
            "placeholder slot should give the trivial class");
    std::cout << "       note: cl_KCE of the modular line bundles is NOT "
                 "reproduced here; the\n"
                 "       transition data must be supplied externally via "
                 "fixtures/kce_d5_slot.json.\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_fixtures = argv[1];
    const std::vector<Criterion> criteria = {
        {1, "projector identities on 200 seeded surfaces",
         criterion_projector},
        {2, "blow-up invariance of the IH^2 data (50 seeds, depth 2)",
         criterion_blowup},
        {3, "degree functoriality (worked examples + 20 adjoint pairs)",
         criterion_degree},
        {4, "Murre correction on 100 generated projector tuples",
         criterion_murre},
        {5, "Hard Lefschetz inequality on 100 generated classes",
         criterion_lefschetz},
        {6, "divisor motive dimensions and Cech identity", criterion_divisor},
        {7, "intersection-correction residuals on 100 seeded systems",
         criterion_correction},
        {8, "holonomy well-definedness on 100 seeded bundles",
         criterion_holonomy},
        {9, "cl_KCE linearity under q in {2, 1/2, -1, 3/5}",
         criterion_kce_linearity},
        {10, "cusp generator suite for d in {2,3,5,6,7,13,17}",
         criterion_cusp},
        {11, "explicit values: d = 5 and the 81/256 square fixture",
         criterion_explicit},
        {12, "out-of-scope statement and fixture slot",
         criterion_out_of_scope},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.body();
            std::cout << "PASS   criterion " << c.number << ": " << c.title
                      << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL   criterion " << c.number << ": " << c.title
                      << " -- " << e.what() << "\n";
        }
    }
    if (failures == 0)
        std::cout << "all 12 acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
