#pragma once

#include <random>

#include "motivic/cusp.hpp"
#include "motivic/picard.hpp"
#include "motivic/projector.hpp"

// Seeded random instances for the property suites. Everything is integral
// or small-rational so the exact checks stay fast.

namespace motivic::gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational small_rational(Rng& rng, long max_num = 6, long max_den = 3) {
    return make_rational(uniform(rng, -max_num, max_num),
                         uniform(rng, 1, max_den));
}

// Random unimodular U together with its inverse, as a product of integer
// shears. Conjugating by these roughs up block constructions without
// leaving exact arithmetic.
struct Unimodular {
    RatMatrix u;
    RatMatrix u_inv;
};

inline Unimodular random_unimodular(Rng& rng, std::size_t n,
                                    std::size_t shears = 0) {
    Unimodular out{RatMatrix::identity(n), RatMatrix::identity(n)};
    if (n < 2)
        return out;
    if (shears == 0)
        shears = 2 * n;
    for (std::size_t s = 0; s < shears; ++s) {
        const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, n - 1));
        std::size_t j = static_cast<std::size_t>(uniform(rng, 0, n - 2));
        if (j >= i)
            ++j;
        const Rational c(uniform(rng, -2, 2));
        if (c == 0)
            continue;
        // u <- E u with E = I + c e_ij ; u_inv <- u_inv E^{-1}.
        for (std::size_t k = 0; k < n; ++k)
            out.u.at(i, k) += c * out.u.at(j, k);
        for (std::size_t k = 0; k < n; ++k)
            out.u_inv.at(k, j) -= c * out.u_inv.at(k, i);
    }
    return out;
}

inline RatMatrix random_negative_definite(Rng& rng, std::size_t n) {
    // -(L L^T + I) with L lower triangular and unit-or-two diagonal.
    RatMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            l.at(i, j) = uniform(rng, -2, 2);
        l.at(i, i) = uniform(rng, 1, 2);
    }
    return Rational(-1) * (l * l.transpose() + RatMatrix::identity(n));
}

// SurfaceDatum with b2 <= max_b2, r <= max_r, Gram negative definite by
// construction, mixed up by a unimodular change of basis. The non-boundary
// block always contains at least one positive direction.
inline SurfaceDatum random_surface(Rng& rng, std::size_t max_b2 = 8,
                                   std::size_t max_r = 4) {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 0, max_r));
    const std::size_t extra =
        static_cast<std::size_t>(uniform(rng, 1, max_b2 - (r ? r : 1)));
    const std::size_t b2 = r + extra;

    RatMatrix q0(b2, b2);
    q0.at(0, 0) = uniform(rng, 1, 2); // a positive direction
    for (std::size_t i = 1; i < extra; ++i) {
        long v = uniform(rng, -2, 2);
        if (v == 0)
            v = -1;
        q0.at(i, i) = v;
    }
    const RatMatrix neg = random_negative_definite(rng, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            q0.at(extra + i, extra + j) = neg.at(i, j);

    const Unimodular t = random_unimodular(rng, b2);
    SurfaceDatum s;
    s.h1_dim = 2 * uniform(rng, 0, 2);
    s.form = t.u.transpose() * q0 * t.u;
    for (std::size_t m = 0; m < r; ++m) {
        RatVec e(b2, Rational(0));
        e[extra + m] = 1;
        s.exceptional.push_back(t.u_inv * e);
    }
    return s;
}

// (c, a) for the Hard Lefschetz inequality: a >= 0 random, l a multiple of
// a positive vector in the orthogonal complement, scaled until c.c > 0.
struct LefschetzInstance {
    SurfaceDatum surface;
    RatVec c;
    RatVec a;
};

inline LefschetzInstance random_lefschetz(Rng& rng) {
    for (;;) {
        SurfaceDatum s = random_surface(rng, 6, 3);
        const std::size_t b2 = s.b2();
        const std::size_t r = s.exceptional.size();
        // A vector of positive self-intersection orthogonal to the
        // exceptional classes: search the kernel basis of the projector.
        const auto kernel = projector_p(s).p.kernel();
        RatVec z;
        for (const RatVec& v : kernel)
            if (sign_of(pair(s.form, v, v)) > 0) {
                z = v;
                break;
            }
        if (z.empty())
            continue; // complement happened to be negative; reroll
        RatVec a(r);
        for (std::size_t m = 0; m < r; ++m)
            a[m] = make_rational(uniform(rng, 0, 3), uniform(rng, 1, 2));
        RatVec corr(b2, Rational(0));
        for (std::size_t m = 0; m < r; ++m)
            for (std::size_t i = 0; i < b2; ++i)
                corr[i] += a[m] * s.exceptional[m][i];
        // Scale z until (t z + corr)^2 > 0; t = 1 works unless corr is
        // large, since corr^2 <= 0 only helps when it vanishes.
        const Rational zz = pair(s.form, z, z);
        const Rational cc_corr = pair(s.form, corr, corr);
        long t = 1;
        while (Rational(t) * Rational(t) * zz + cc_corr <= 0)
            ++t;
        LefschetzInstance out;
        out.c.assign(b2, Rational(0));
        for (std::size_t i = 0; i < b2; ++i)
            out.c[i] = Rational(t) * z[i] + corr[i];
        out.surface = std::move(s);
        out.a = std::move(a);
        return out;
    }
}

// Adjoint pair for degree n: Fpull = U unimodular, QY = (1/n) U^T QX U,
// Fpush = n U^{-1}; both degree_check identities hold by construction.
struct AdjointPair {
    RatMatrix fpull, fpush, qx, qy;
    long n = 1;
};

inline AdjointPair random_adjoint_pair(Rng& rng) {
    const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 4));
    RatMatrix qx(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        long v = uniform(rng, -2, 2);
        if (v == 0)
            v = 1;
        qx.at(i, i) = v;
    }
    const Unimodular w = random_unimodular(rng, m);
    qx = w.u.transpose() * qx * w.u;

    AdjointPair out;
    out.n = uniform(rng, 1, 3);
    const Unimodular t = random_unimodular(rng, m);
    out.fpull = t.u;
    out.qx = qx;
    out.qy = make_rational(1, out.n) * (t.u.transpose() * qx * t.u);
    out.fpush = Rational(out.n) * t.u_inv;
    return out;
}

// Murre input built block-wise on coordinates [u | v | w | z0 | z4]:
// p1 = [I A 0; 0 0 0; ...], p3 = [0 0 0; 0 I B; ...], pi0 and pi4
// projections onto the z-blocks; then everything is conjugated by a random
// unimodular matrix. p3 p1 = 0 always; p1 p3 != 0 iff A != 0.
struct MurreInput {
    RatMatrix pi0, p1, p3, pi4;
    std::size_t n = 0;
    bool skew = false; // p1 p3 != 0
};

inline MurreInput random_murre(Rng& rng, bool force_skew) {
    const std::size_t n1 = static_cast<std::size_t>(uniform(rng, 1, 2));
    const std::size_t n3 = static_cast<std::size_t>(uniform(rng, 1, 2));
    const std::size_t nw = static_cast<std::size_t>(uniform(rng, 0, 1));
    const std::size_t n0 = static_cast<std::size_t>(uniform(rng, 0, 1));
    const std::size_t n4 = static_cast<std::size_t>(uniform(rng, 0, 1));
    const std::size_t n = n1 + n3 + nw + n0 + n4;

    MurreInput out;
    out.n = n;
    out.pi0 = RatMatrix(n, n);
    out.p1 = RatMatrix(n, n);
    out.p3 = RatMatrix(n, n);
    out.pi4 = RatMatrix(n, n);

    const std::size_t v0 = n1, w0 = n1 + n3, z0 = n1 + n3 + nw,
                      z4 = n1 + n3 + nw + n0;
    for (std::size_t i = 0; i < n1; ++i)
        out.p1.at(i, i) = 1;
    for (std::size_t i = 0; i < n3; ++i)
        out.p3.at(v0 + i, v0 + i) = 1;
    for (std::size_t i = 0; i < n0; ++i)
        out.pi0.at(z0 + i, z0 + i) = 1;
    for (std::size_t i = 0; i < n4; ++i)
        out.pi4.at(z4 + i, z4 + i) = 1;

    bool skew = false;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n3; ++j) {
            long a = uniform(rng, -2, 2);
            if (force_skew && !skew && i == 0 && j == 0 && a == 0)
                a = 1;
            if (a != 0)
                skew = true;
            out.p1.at(i, v0 + j) = a;
        }
    for (std::size_t i = 0; i < n3 && nw > 0; ++i)
        out.p3.at(v0 + i, w0) = uniform(rng, -2, 2);
    out.skew = skew;

    const Unimodular t = random_unimodular(rng, n);
    const auto conj = [&](const RatMatrix& m) {
        return t.u_inv * m * t.u;
    };
    out.pi0 = conj(out.pi0);
    out.p1 = conj(out.p1);
    out.p3 = conj(out.p3);
    out.pi4 = conj(out.pi4);
    return out;
}

// Polygon of rational curves with random distinct node coordinates and a
// random degree-zero divisor (support off the nodes) on every component.
struct BundleInstance {
    CurveConfiguration config;
    ConfigLineBundle bundle;
    Walk cycle;
};

inline BundleInstance random_bundle_instance(Rng& rng,
                                             bool integer_mults = false) {
    const std::size_t len = static_cast<std::size_t>(uniform(rng, 3, 6));
    BundleInstance out;
    std::vector<std::vector<Rational>> used(len);
    const auto fresh_point = [&](std::size_t comp) {
        for (;;) {
            const Rational v = small_rational(rng, 8, 2);
            bool clash = false;
            for (const Rational& u : used[comp])
                if (u == v)
                    clash = true;
            if (!clash) {
                used[comp].push_back(v);
                return v;
            }
        }
    };
    for (std::size_t k = 0; k < len; ++k)
        out.config.components.push_back({"K" + std::to_string(k), 0, true});
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t next = (k + 1) % len;
        out.config.nodes.push_back(
            {out.config.components[k].id,
             ProjPoint::at(QuadElem(fresh_point(k))),
             out.config.components[next].id,
             ProjPoint::at(QuadElem(fresh_point(next)))});
        out.cycle.push_back({k, true});
    }
    std::map<std::string, std::vector<DivisorEntry>> divisors;
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t supports = static_cast<std::size_t>(uniform(rng, 2, 3));
        std::vector<DivisorEntry> entries;
        Rational total(0);
        for (std::size_t i = 0; i + 1 < supports; ++i) {
            const Rational m = integer_mults
                                   ? Rational(uniform(rng, -3, 3))
                                   : small_rational(rng, 3, 2);
            entries.push_back({ProjPoint::at(QuadElem(fresh_point(k))), m});
            total += m;
        }
        entries.push_back({ProjPoint::at(QuadElem(fresh_point(k))), -total});
        divisors[out.config.components[k].id] = canonical_divisor(entries);
    }
    out.bundle = ConfigLineBundle::from_divisors(std::move(divisors));
    return out;
}

// Random multigraph configuration (loops and parallel edges allowed);
// coordinates disabled, so only the combinatorics matter.
inline CurveConfiguration random_multigraph(Rng& rng, std::size_t max_v = 6,
                                            std::size_t max_e = 8,
                                            bool genus_zero = false) {
    CurveConfiguration c;
    const std::size_t v = static_cast<std::size_t>(uniform(rng, 1, max_v));
    for (std::size_t i = 0; i < v; ++i)
        c.components.push_back({"G" + std::to_string(i),
                                genus_zero ? 0 : uniform(rng, 0, 2), false});
    const std::size_t e = static_cast<std::size_t>(uniform(rng, 0, max_e));
    for (std::size_t i = 0; i < e; ++i) {
        const std::size_t a = static_cast<std::size_t>(uniform(rng, 0, v - 1));
        const std::size_t b = static_cast<std::size_t>(uniform(rng, 0, v - 1));
        c.nodes.push_back({c.components[a].id,
                           ProjPoint::at(QuadElem(Rational(0))),
                           c.components[b].id,
                           ProjPoint::at(QuadElem(Rational(1)))});
    }
    return c;
}

// KCE input over a cycle with canonical 0/1 coordinates, cycle Gram matrix
// with all b_k >= 2 and one >= 3, and random intersection data. Length 1
// and 2 produce the loop and double-edge geometries of short cusp periods.
inline KCEInput random_kce_input(Rng& rng) {
    const std::size_t len = static_cast<std::size_t>(uniform(rng, 1, 5));
    std::vector<Integer> period;
    for (std::size_t k = 0; k < len; ++k)
        period.emplace_back(uniform(rng, 2, 4));
    period[static_cast<std::size_t>(uniform(rng, 0, len - 1))] =
        uniform(rng, 3, 4);

    KCEInput in;
    in.config = cycle_configuration(len);
    in.surface.h1_dim = 0;
    in.surface.form = cusp_gram(period);
    for (std::size_t m = 0; m < len; ++m) {
        RatVec e(len, Rational(0));
        e[m] = 1;
        in.surface.exceptional.push_back(std::move(e));
    }
    for (std::size_t m = 0; m < len; ++m) {
        const Rational iv = small_rational(rng, 3, 2);
        in.intersection_vector.push_back(iv);
        std::vector<DivisorEntry> entries;
        // Support away from the nodes {0, 1} and from infinity.
        const long base = 2 + static_cast<long>(m);
        const Rational first = small_rational(rng, 2, 2);
        entries.push_back({ProjPoint::at(QuadElem(Rational(base))), first});
        entries.push_back(
            {ProjPoint::at(QuadElem(Rational(base * 10 + 1))), iv - first});
        in.restriction_points[in.config.components[m].id] =
            canonical_divisor(entries);
    }
    for (std::size_t k = 0; k < len; ++k)
        in.distinguished_cycle.push_back({k, true});
    return in;
}

} // namespace motivic::gen
