#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/quadratic.hpp"

namespace motivic {

// Element of k* tensor Q, k = Q or a real quadratic field: a formal product
// of nonzero field elements with rational exponents. Torsion in such k is
// {+-1}, which makes equality decidable by clearing denominators
// (kstar_equal below). Kept factored; normalization merges equal bases and
// drops exponent 0.
class KStarClass {
public:
    struct Factor {
        QuadElem base;
        Rational exponent;
    };

    KStarClass() = default;

    KStarClass(const QuadElem& base, const Rational& exponent) {
        push(base, exponent);
        normalize();
    }

    static KStarClass one() { return KStarClass(); }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one_syntactically() const { return factors_.empty(); }

    KStarClass& operator*=(const KStarClass& other) {
        for (const Factor& f : other.factors_)
            push(f.base, f.exponent);
        normalize();
        return *this;
    }

    friend KStarClass operator*(KStarClass a, const KStarClass& b) {
        a *= b;
        return a;
    }

    KStarClass inverse() const { return pow(Rational(-1)); }

    KStarClass pow(const Rational& q) const {
        KStarClass r;
        if (q == 0)
            return r;
        for (const Factor& f : factors_)
            r.push(f.base, f.exponent * q);
        r.normalize();
        return r;
    }

    // The d of the quadratic field all bases live in, or 0 when every base
    // is rational. Mixed fields are rejected.
    long field_d() const {
        long d = 0;
        for (const Factor& f : factors_) {
            if (f.base.is_rational())
                continue;
            if (d == 0)
                d = f.base.d();
            else if (d != f.base.d())
                throw FieldMismatch("k* class mixes Q(sqrt(" +
                                    std::to_string(d) + ")) and Q(sqrt(" +
                                    std::to_string(f.base.d()) + "))");
        }
        return d;
    }

    std::string to_string() const {
        if (factors_.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i)
                s += " * ";
            s += "(" + factors_[i].base.to_string() + ")^(" +
                 rational_to_string(factors_[i].exponent) + ")";
        }
        return s;
    }

private:
    void push(const QuadElem& base, const Rational& exponent) {
        if (base.is_zero())
            throw ZeroBase("k* class factors must be nonzero");
        if (exponent == 0)
            return;
        factors_.push_back({base, exponent});
    }

    void normalize() {
        std::vector<Factor> merged;
        for (const Factor& f : factors_) {
            bool found = false;
            for (Factor& m : merged)
                if (m.base == f.base) {
                    m.exponent += f.exponent;
                    found = true;
                    break;
                }
            if (!found)
                merged.push_back(f);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Factor& f) {
                                        return f.exponent == 0 ||
                                               f.base == QuadElem(Rational(1));
                                    }),
                     merged.end());
        factors_ = std::move(merged);
    }

    std::vector<Factor> factors_;
};

// Collapses a class with integral exponents to the field element it
// represents; classes with genuinely fractional exponents stay formal.
inline std::optional<QuadElem> kstar_collapse(const KStarClass& c) {
    QuadElem v(Rational(1));
    for (const auto& f : c.factors()) {
        if (!is_integer(f.exponent))
            return std::nullopt;
        v = v * f.base.pow(f.exponent.get_num());
    }
    return v;
}

// Decides u = v in k* tensor Q: clear exponent denominators in u/v with
// N = lcm of them, collapse to the single field element w = prod
// base^(N*exponent), and test w = +-1.
inline bool kstar_equal(const KStarClass& u, const KStarClass& v) {
    const KStarClass q = u * v.inverse();
    // Same-field precondition; also validates each class on its own.
    (void)q.field_d();
    if (q.factors().empty())
        return true;
    Integer n(1);
    for (const auto& f : q.factors())
        n = lcm(n, f.exponent.get_den());
    QuadElem w(Rational(1));
    for (const auto& f : q.factors()) {
        const Rational scaled = f.exponent * Rational(n);
        w = w * f.base.pow(scaled.get_num());
    }
    return w == QuadElem(Rational(1)) || w == QuadElem(Rational(-1));
}

} // namespace motivic
