#pragma once

#include <array>
#include <optional>
#include <tuple>

#include "motivic/surface.hpp"

namespace motivic {

// Idempotent on H^2 cutting out the span of the exceptional classes,
// self-adjoint for the intersection form (QP symmetric).
struct Projector {
    RatMatrix p;
    RatMatrix form;
};

// P = B G^{-1} B^T Q, with B the exceptional classes as columns and G their
// Gram matrix. Fixes every exceptional class; its kernel is the
// Q-orthogonal complement of their span.
inline Projector projector_p(const SurfaceDatum& s) {
    const std::size_t b2 = s.b2();
    if (s.exceptional.empty())
        return {RatMatrix(b2, b2), s.form};
    const RatMatrix b = exceptional_columns(s);
    const RatMatrix g = gram_matrix(s);
    if (g.det() == 0)
        throw DegenerateGram("exceptional Gram matrix is singular");
    return {b * g.inverse() * b.transpose() * s.form, s.form};
}

struct IhDecomposition {
    std::vector<RatVec> ih2_basis; // basis of ker(P)
    std::vector<RatVec> exc_basis; // the exceptional classes themselves
};

inline IhDecomposition ih_decomposition(const SurfaceDatum& s) {
    return {projector_p(s).p.kernel(), s.exceptional};
}

inline RatMatrix restricted_form(const SurfaceDatum& s,
                                 const std::vector<RatVec>& basis) {
    const std::size_t n = basis.size();
    RatMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r.at(i, j) = pair(s.form, basis[i], basis[j]);
    return r;
}

// Graded dimensions [h0, h1, h2, h3, h4] of the intersection realization;
// palindromic, with only the middle degree seeing the boundary classes.
struct KunnethSummary {
    std::array<long, 5> dims;
};

inline KunnethSummary kunneth_betti(const SurfaceDatum& s) {
    const long middle = static_cast<long>(s.b2()) -
                        static_cast<long>(s.exceptional.size());
    return {{1, s.h1_dim, middle, s.h1_dim, 1}};
}

// Orthogonal direct sum with one new (-1)-class, appended to the
// exceptional list; the complement of the exceptional span is untouched.
inline SurfaceDatum blow_up(const SurfaceDatum& s) {
    const std::size_t b2 = s.b2();
    SurfaceDatum out;
    out.h1_dim = s.h1_dim;
    out.form = RatMatrix(b2 + 1, b2 + 1);
    for (std::size_t i = 0; i < b2; ++i)
        for (std::size_t j = 0; j < b2; ++j)
            out.form.at(i, j) = s.form.at(i, j);
    out.form.at(b2, b2) = -1;
    for (const RatVec& d : s.exceptional) {
        RatVec v = d;
        v.emplace_back(0);
        out.exceptional.push_back(std::move(v));
    }
    RatVec e(b2 + 1, Rational(0));
    e[b2] = 1;
    out.exceptional.push_back(std::move(e));
    if (s.ample) {
        RatVec c = *s.ample;
        c.emplace_back(0);
        out.ample = std::move(c);
    }
    if (s.cup1) {
        std::vector<RatMatrix> t = *s.cup1;
        t.emplace_back(static_cast<std::size_t>(s.h1_dim),
                       static_cast<std::size_t>(s.h1_dim));
        out.cup1 = std::move(t);
    }
    return out;
}

// Checks that (Fpull, Fpush) is an adjoint pair for the two forms and that
// Fpush Fpull is multiplication by the degree n.
inline bool degree_check(const RatMatrix& fpull, const RatMatrix& fpush,
                         const RatMatrix& qx, const RatMatrix& qy, long n) {
    const std::size_t dim_x = qx.rows();
    const std::size_t dim_y = qy.rows();
    if (!qx.is_square() || !qy.is_square())
        throw ShapeMismatch("degree_check: forms must be square");
    if (fpull.rows() != dim_x || fpull.cols() != dim_y)
        throw ShapeMismatch("degree_check: Fpull must be dim H2(X) x dim "
                            "H2(Y), got " +
                            fpull.shape_str());
    if (fpush.rows() != dim_y || fpush.cols() != dim_x)
        throw ShapeMismatch("degree_check: Fpush must be dim H2(Y) x dim "
                            "H2(X), got " +
                            fpush.shape_str());
    if (n <= 0)
        throw ShapeMismatch("degree_check: degree must be positive");
    if (fpull.transpose() * qx != qy * fpush)
        return false;
    return fpush * fpull == Rational(n) * RatMatrix::identity(dim_y);
}

struct HardLefschetzReport {
    RatVec lefschetz_class;       // l = c - sum a_m d_m
    Rational l_self_intersection; // l . l
    Rational c_self_intersection; // c . c
    Rational correction_self;     // (sum a_m d_m) . (sum a_m d_m)
    bool h0_h4_isomorphism = false;
    std::optional<bool> h1_h3_isomorphism; // evaluated only with cup1 data
};

// The inequality behind the h0 -> h4 half: l.l >= c.c - (sum a_m d_m)^2 and
// l.l > 0 once l is orthogonal to every exceptional class. The h1 -> h3
// half needs cup-product data and is reported as "not evaluated" without it.
inline HardLefschetzReport hard_lefschetz_check(const SurfaceDatum& s,
                                                const RatVec& c,
                                                const RatVec& a) {
    const std::size_t r = s.exceptional.size();
    if (c.size() != s.b2())
        throw ShapeMismatch("hard_lefschetz_check: c has length " +
                            std::to_string(c.size()));
    if (a.size() != r)
        throw ShapeMismatch("hard_lefschetz_check: need one coefficient per "
                            "exceptional class");
    for (std::size_t m = 0; m < r; ++m)
        if (sign_of(a[m]) < 0)
            throw HypothesisViolated("coefficient a[" + std::to_string(m) +
                                     "] is negative");
    RatVec correction(s.b2(), Rational(0));
    for (std::size_t m = 0; m < r; ++m)
        for (std::size_t i = 0; i < s.b2(); ++i)
            correction[i] += a[m] * s.exceptional[m][i];
    RatVec l(s.b2());
    for (std::size_t i = 0; i < s.b2(); ++i)
        l[i] = c[i] - correction[i];

    for (std::size_t m = 0; m < r; ++m)
        if (pair(s.form, l, s.exceptional[m]) != 0)
            throw HypothesisViolated(
                "l is not orthogonal to exceptional class " +
                std::to_string(m));
    const Rational cc = pair(s.form, c, c);
    if (sign_of(cc) <= 0)
        throw HypothesisViolated("c.c must be strictly positive");

    HardLefschetzReport report;
    report.lefschetz_class = l;
    report.l_self_intersection = pair(s.form, l, l);
    report.c_self_intersection = cc;
    report.correction_self = pair(s.form, correction, correction);
    report.h0_h4_isomorphism =
        sign_of(report.l_self_intersection) > 0 &&
        report.l_self_intersection >= cc - report.correction_self;
    if (s.cup1) {
        const std::size_t h1 = static_cast<std::size_t>(s.h1_dim);
        RatMatrix cl(h1, h1);
        for (std::size_t i = 0; i < s.b2(); ++i)
            if (l[i] != 0)
                cl = cl + l[i] * (*s.cup1)[i];
        report.h1_h3_isomorphism = h1 == 0 || cl.det() != 0;
    }
    return report;
}

// Murre's corrected projectors: given pi0, p1, p3, pi4 with all
// orthogonality relations except that p1 p3 may be nonzero (p3 p1 = 0 is
// required), returns the full orthogonal set
//   pi1 = p1 - 1/2 p1 p3,  pi3 = p3 - 1/2 p1 p3,
//   pi2 = id - pi0 - pi1 - pi3 - pi4.
inline std::array<RatMatrix, 5> murre_correct(const RatMatrix& pi0,
                                              const RatMatrix& p1,
                                              const RatMatrix& p3,
                                              const RatMatrix& pi4,
                                              std::size_t n) {
    const auto square_n = [&](const RatMatrix& m, const char* name) {
        if (m.rows() != n || m.cols() != n)
            throw ShapeMismatch(std::string("murre_correct: ") + name +
                                " is " + m.shape_str() + ", expected " +
                                std::to_string(n) + "x" + std::to_string(n));
    };
    square_n(pi0, "pi0");
    square_n(p1, "p1");
    square_n(p3, "p3");
    square_n(pi4, "pi4");

    const auto idempotent = [&](const RatMatrix& m, const char* name) {
        if (m * m != m)
            throw PreconditionFailed(std::string(name) +
                                     " is not idempotent");
    };
    const auto orthogonal = [&](const RatMatrix& x, const RatMatrix& y,
                                const char* rel) {
        if (!(x * y).is_zero())
            throw PreconditionFailed(std::string(rel) + " != 0");
    };
    idempotent(pi0, "pi0");
    idempotent(p1, "p1");
    idempotent(p3, "p3");
    idempotent(pi4, "pi4");
    orthogonal(pi0, pi4, "pi0 pi4");
    orthogonal(pi4, pi0, "pi4 pi0");
    orthogonal(pi0, p1, "pi0 p1");
    orthogonal(p1, pi0, "p1 pi0");
    orthogonal(pi0, p3, "pi0 p3");
    orthogonal(p3, pi0, "p3 pi0");
    orthogonal(pi4, p1, "pi4 p1");
    orthogonal(p1, pi4, "p1 pi4");
    orthogonal(pi4, p3, "pi4 p3");
    orthogonal(p3, pi4, "p3 pi4");
    orthogonal(p3, p1, "p3 p1");

    const RatMatrix half_s = make_rational(1, 2) * (p1 * p3);
    const RatMatrix pi1 = p1 - half_s;
    const RatMatrix pi3 = p3 - half_s;
    const RatMatrix pi2 =
        RatMatrix::identity(n) - pi0 - pi1 - pi3 - pi4;
    return {pi0, pi1, pi2, pi3, pi4};
}

} // namespace motivic
