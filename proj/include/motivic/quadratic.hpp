#pragma once

#include <string>
#include <utility>

#include "motivic/rational.hpp"

namespace motivic {

// Trial division; the p <= d / p bound avoids overflow near LONG_MAX.
inline bool is_squarefree(long d) {
    if (d <= 0)
        return false;
    for (long p = 2; p <= d / p; ++p) {
        if (d % p != 0)
            continue;
        d /= p;
        if (d % p == 0)
            return false;
    }
    return true;
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Element a + b*sqrt(d) of Q or of the real quadratic field Q(sqrt(d)).
// A rational is stored with b = 0 and d = 0, so equality is structural;
// d > 1 squarefree is enforced whenever b != 0. All arithmetic is exact and
// closed in the field. Values are immutable in spirit: operations return
// fresh elements.
class QuadElem {
public:
    QuadElem() : a_(0), b_(0), d_(0) {}
    QuadElem(long value) : a_(value), b_(0), d_(0) {} // NOLINT(implicit)
    QuadElem(Rational value) : a_(std::move(value)), b_(0), d_(0) {}

    QuadElem(Rational a, Rational b, long d)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_ == 0) {
            d_ = 0;
        } else if (d_ <= 1 || !is_squarefree(d_)) {
            throw ValidationError("quadratic element: d = " +
                                  std::to_string(d) +
                                  " must be squarefree and > 1 when b != 0");
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElem conjugate() const {
        return is_rational() ? *this : QuadElem(a_, -b_, d_);
    }

    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    Rational trace() const { return 2 * a_; }

    // Exact sign of a + b*sqrt(d) via rational comparisons of a^2 and d*b^2.
    int sign() const {
        if (b_ == 0)
            return sign_of(a_);
        const int sa = sign_of(a_);
        const int sb = sign_of(b_);
        if (sa >= 0 && sb > 0)
            return 1;
        if (sa <= 0 && sb < 0)
            return -1;
        // a and b have strictly opposite signs here.
        const int cmp = sign_of(a_ * a_ - Rational(d_) * b_ * b_);
        if (cmp == 0)
            return 0; // unreachable: a^2 = d b^2 has no solution for squarefree d > 1
        return sa > 0 ? cmp : -cmp;
    }

    bool is_totally_positive() const {
        return sign() > 0 && conjugate().sign() > 0;
    }

    QuadElem inverse() const {
        if (is_zero())
            throw ComputationError("quadratic element: inverse of zero");
        if (is_rational())
            return QuadElem(Rational(1) / a_);
        const Rational n = norm(); // nonzero: d squarefree, element nonzero
        return QuadElem(a_ / n, -b_ / n, d_);
    }

    friend QuadElem operator-(const QuadElem& x) {
        return x.is_rational() ? QuadElem(-x.a_) : QuadElem(-x.a_, -x.b_, x.d_);
    }

    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        const long d = common_field(x, y, "+");
        return make(x.a_ + y.a_, x.b_ + y.b_, d);
    }

    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        const long d = common_field(x, y, "-");
        return make(x.a_ - y.a_, x.b_ - y.b_, d);
    }

    friend QuadElem operator*(const QuadElem& x, const QuadElem& y) {
        const long d = common_field(x, y, "*");
        return make(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_,
                    x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) {
        return x * y.inverse();
    }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_)
            return false;
        return x.b_ == 0 || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadElem& x, const QuadElem& y) {
        return !(x == y);
    }

    // Exact order comparison under the real embedding sqrt(d) > 0.
    friend bool operator<(const QuadElem& x, const QuadElem& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator>(const QuadElem& x, const QuadElem& y) {
        return (x - y).sign() > 0;
    }

    QuadElem pow(const Integer& e) const {
        QuadElem base = *this;
        Integer n = e;
        if (n < 0) {
            base = base.inverse();
            n = -n;
        }
        QuadElem acc(Rational(1));
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t()))
                acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        if (is_rational())
            return rational_to_string(a_);
        std::string s = rational_to_string(a_);
        if (sign_of(b_) >= 0)
            s += "+";
        s += rational_to_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
        return s;
    }

private:
    static QuadElem make(Rational a, Rational b, long d) {
        if (b == 0)
            return QuadElem(std::move(a));
        return QuadElem(std::move(a), std::move(b), d);
    }

    static long common_field(const QuadElem& x, const QuadElem& y,
                             const char* op) {
        if (x.b_ == 0)
            return y.d_;
        if (y.b_ == 0)
            return x.d_;
        if (x.d_ != y.d_)
            throw FieldMismatch(std::string("operands of '") + op +
                                "' live in Q(sqrt(" + std::to_string(x.d_) +
                                ")) and Q(sqrt(" + std::to_string(y.d_) +
                                "))");
        return x.d_;
    }

    Rational a_;
    Rational b_;
    long d_;
};

inline QuadElem conjugate(const QuadElem& x) { return x.conjugate(); }

} // namespace motivic
