#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "motivic/divisor.hpp"
#include "motivic/quadratic.hpp"
#include "motivic/surface.hpp"

namespace motivic {

// (p + sqrt(d)) / q with q | d - p^2, the representation stable under the
// minus-continued-fraction step w -> 1/(ceil(w) - w).
struct QuadraticIrrational {
    Integer p;
    Integer q;
    long d = 0;
};

inline QuadraticIrrational make_quadratic_irrational(Integer p, Integer q,
                                                     long d) {
    if (q == 0)
        throw ValidationError("quadratic irrational: q = 0");
    if (d <= 1 || is_perfect_square(Integer(d)))
        throw NotIrrational("d = " + std::to_string(d) +
                            " is a perfect square or < 2");
    if ((Integer(d) - p * p) % q != 0)
        throw ValidationError("quadratic irrational: q must divide d - p^2");
    return {std::move(p), std::move(q), d};
}

inline QuadElem quad_value(const QuadraticIrrational& w) {
    return QuadElem(make_rational(w.p, w.q), make_rational(1, w.q), w.d);
}

struct MinusContinuedFraction {
    std::vector<Integer> preperiod;
    std::vector<Integer> period;
    QuadraticIrrational period_seed; // state at the start of the period
};

// floor((p + sqrt(d))/q), exact: no integer lies strictly between
// (p + floor(sqrt d))/q and (p + floor(sqrt d) + 1)/q.
inline Integer floor_state(const Integer& p, const Integer& q, long d) {
    const Integer s = isqrt(Integer(d));
    Integer t = p + s;
    if (q < 0)
        t += 1;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
    return f;
}

// Minus continued fraction w = b0 - 1/(b1 - 1/(...)), b = ceil(w). The
// (p, q) state space is finite for fixed d, so the expansion is detected
// periodic by state repetition.
inline MinusContinuedFraction minus_cf(const QuadraticIrrational& w0) {
    if (w0.d <= 1 || is_perfect_square(Integer(w0.d)))
        throw NotIrrational("d = " + std::to_string(w0.d) +
                            " is a perfect square or < 2");
    if (w0.q == 0 || (Integer(w0.d) - w0.p * w0.p) % w0.q != 0)
        throw ValidationError("minus_cf: representation invariant violated");

    MinusContinuedFraction out;
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::vector<Integer> digits;
    std::vector<QuadraticIrrational> states;
    QuadraticIrrational w = w0;
    constexpr std::size_t kMaxSteps = 1u << 20;
    for (std::size_t step = 0; step < kMaxSteps; ++step) {
        const auto key = std::make_pair(w.p, w.q);
        const auto it = seen.find(key);
        if (it != seen.end()) {
            const std::size_t start = it->second;
            out.preperiod.assign(digits.begin(), digits.begin() + start);
            out.period.assign(digits.begin() + start, digits.end());
            out.period_seed = states[start];
            return out;
        }
        seen.emplace(key, step);
        states.push_back(w);
        const Integer b = floor_state(w.p, w.q, w.d) + 1; // ceil, w irrational
        digits.push_back(b);
        // w' = 1/(b - w) = (P + sqrt d)/((P^2 - d)/q), P = b q - p.
        const Integer big_p = b * w.q - w.p;
        const Integer num = big_p * big_p - w.d;
        if (num % w.q != 0)
            throw ComputationError("minus_cf: divisibility invariant lost");
        w = {big_p, num / w.q, w.d};
    }
    throw ComputationError("minus_cf: no period found (corrupt state)");
}

// Polygon geometry generated from the resolution data: the period digits
// b_k are the negated self-intersections of a cycle of rational curves.
struct CuspCycle {
    long d = 0;
    std::vector<Integer> preperiod;
    std::vector<Integer> period;
    QuadraticIrrational seed;
    CurveConfiguration config;
};

// Cycle configuration with canonical coordinates: component k has its
// incoming node at 0 and its outgoing node at 1.
inline CurveConfiguration cycle_configuration(std::size_t length) {
    CurveConfiguration c;
    for (std::size_t k = 0; k < length; ++k)
        c.components.push_back({"E" + std::to_string(k), 0, true});
    for (std::size_t k = 0; k < length; ++k)
        c.nodes.push_back({c.components[k].id,
                           ProjPoint::at(QuadElem(Rational(1))),
                           c.components[(k + 1) % length].id,
                           ProjPoint::at(QuadElem(Rational(0)))});
    return c;
}

// Intersection matrix of the cycle: -b_k on the diagonal, 1 per adjacency.
// A period of length one is a component meeting itself in a node, so the
// loop convention gives self-pairing -b_1 + 2; length two gives a double
// edge, hence off-diagonal 2.
inline RatMatrix cusp_gram(const std::vector<Integer>& period) {
    const std::size_t r = period.size();
    RatMatrix g(r, r);
    for (std::size_t k = 0; k < r; ++k)
        g.at(k, k) = Rational(-period[k]);
    if (r == 1) {
        g.at(0, 0) += 2;
    } else {
        for (std::size_t k = 0; k < r; ++k) {
            const std::size_t next = (k + 1) % r;
            g.at(k, next) += 1;
            g.at(next, k) += 1;
        }
    }
    return g;
}

// Reduced seed generating the maximal order Z + Z w0 of Q(sqrt d):
// w0 > 1 > conjugate(w0) > 0. For d = 1 mod 4 this is (p + sqrt d)/2 with p
// the odd integer in (sqrt d, sqrt d + 2); otherwise floor(sqrt d)+1+sqrt d.
inline QuadraticIrrational cusp_seed(long d) {
    const Integer s = isqrt(Integer(d));
    if (d % 4 == 1) {
        Integer p = s + 1;
        if (mpz_even_p(p.get_mpz_t()))
            p += 1;
        return make_quadratic_irrational(p, 2, d);
    }
    return make_quadratic_irrational(s + 1, 1, d);
}

inline CuspCycle cusp_cycle(long d) {
    if (d <= 1 || !is_squarefree(d))
        throw NotSquarefree("d = " + std::to_string(d));
    const MinusContinuedFraction cf = minus_cf(cusp_seed(d));
    CuspCycle cycle;
    cycle.d = d;
    cycle.preperiod = cf.preperiod;
    cycle.period = cf.period;
    cycle.seed = cf.period_seed;
    cycle.config = cycle_configuration(cycle.period.size());
    if (!cusp_gram(cycle.period).is_negative_definite())
        throw ComputationError("cusp_cycle: generated Gram matrix is not "
                               "negative definite");
    return cycle;
}

// Surface realization carrying exactly the cycle classes: Q is the cycle
// Gram matrix and the exceptional classes are the standard basis.
inline SurfaceDatum cusp_surface(const CuspCycle& cycle) {
    const std::size_t r = cycle.period.size();
    SurfaceDatum s;
    s.h1_dim = 0;
    s.form = cusp_gram(cycle.period);
    for (std::size_t m = 0; m < r; ++m) {
        RatVec e(r, Rational(0));
        e[m] = 1;
        s.exceptional.push_back(std::move(e));
    }
    return s;
}

// Smallest totally positive unit > 1 of the maximal order, by direct search
// for the minimal solution of x^2 - d y^2 = +-4 (d = 1 mod 4) or +-1.
inline QuadElem fundamental_unit(long d) {
    if (d <= 1 || !is_squarefree(d))
        throw NotSquarefree("d = " + std::to_string(d));
    const bool half_integral = d % 4 == 1;
    const Integer four(half_integral ? 4 : 1);
    for (Integer y = 1;; ++y) {
        const Integer dy2 = Integer(d) * y * y;
        for (const int sign : {-1, +1}) {
            const Integer x2 = dy2 + sign * four;
            if (!is_perfect_square(x2))
                continue;
            const Integer x = isqrt(x2);
            if (x == 0)
                continue;
            QuadElem u = half_integral
                             ? QuadElem(make_rational(x, 2),
                                        make_rational(y, 2), d)
                             : QuadElem(Rational(x), Rational(y), d);
            if (!u.is_totally_positive())
                u = u * u;
            return u;
        }
    }
}

struct UnitPeriodReport {
    std::array<Integer, 4> monodromy{}; // row-major 2x2
    bool det_one = false;
    bool fixes_seed = false;
    bool eigenvalue_in_field = false;
    bool eigenvalue_is_unit = false;
    bool totally_positive = false;
    bool power_of_fundamental = false;
    long exponent = 0;
    QuadElem eigenvalue;
    QuadElem epsilon;

    bool passed() const {
        return det_one && fixes_seed && eigenvalue_in_field &&
               eigenvalue_is_unit && totally_positive &&
               power_of_fundamental;
    }
};

// M = prod_k [[b_k, -1], [1, 0]] over one period: det 1, fixes the seed
// under the Moebius action, and its larger eigenvalue is a totally positive
// unit, an integer power of the fundamental one.
inline UnitPeriodReport unit_period_check(const CuspCycle& cycle) {
    UnitPeriodReport report;
    Integer m00(1), m01(0), m10(0), m11(1);
    for (const Integer& b : cycle.period) {
        // right-multiply by [[b, -1], [1, 0]]
        const Integer n00 = m00 * b + m01;
        const Integer n01 = -m00;
        const Integer n10 = m10 * b + m11;
        const Integer n11 = -m10;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
    }
    report.monodromy = {m00, m01, m10, m11};
    report.det_one = m00 * m11 - m01 * m10 == 1;

    const QuadElem w = quad_value(cycle.seed);
    const QuadElem numer = QuadElem(Rational(m00)) * w + QuadElem(Rational(m01));
    const QuadElem denom = QuadElem(Rational(m10)) * w + QuadElem(Rational(m11));
    report.fixes_seed = !denom.is_zero() && numer / denom == w;

    const Integer trace = m00 + m11;
    const Integer disc = trace * trace - 4;
    report.eigenvalue_in_field =
        disc > 0 && disc % cycle.d == 0 && is_perfect_square(disc / cycle.d);
    if (!report.eigenvalue_in_field)
        return report;
    const Integer t = isqrt(disc / cycle.d);
    report.eigenvalue = QuadElem(make_rational(trace, 2),
                                 make_rational(t, 2), cycle.d);
    report.eigenvalue_is_unit = report.eigenvalue.norm() == 1 &&
                                is_integer(report.eigenvalue.trace());
    report.totally_positive = report.eigenvalue.is_totally_positive();

    report.epsilon = fundamental_unit(cycle.d);
    QuadElem x = report.eigenvalue;
    const QuadElem one(Rational(1));
    long k = 0;
    while (x > one && k < 256) {
        x = x / report.epsilon;
        ++k;
    }
    report.power_of_fundamental = x == one && k > 0;
    report.exponent = k;
    return report;
}

} // namespace motivic
