#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

// Exact rationals are GMP's mpq_class: always reduced, denominator > 0.
// Everything downstream relies on that canonical form for equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0)
        throw ValidationError("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Accepts "p" or "p/q" in base 10, optionally negative. Anything else is a
// ParseError; a field name can be passed for error context.
inline Rational parse_rational(const std::string& text,
                               const std::string& field = "rational") {
    const auto bad = [&](const char* why) -> ParseError {
        return ParseError(field + ": '" + text + "' " + why);
    };
    if (text.empty())
        throw bad("is empty");
    std::size_t i = 0;
    if (text[i] == '-')
        ++i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        ++i;
        ++digits;
    }
    if (digits == 0)
        throw bad("has no numerator digits");
    if (i != text.size()) {
        if (text[i] != '/')
            throw bad("is not of the form p or p/q");
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != text.size())
            throw bad("is not of the form p or p/q");
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw bad("is not a valid rational");
    if (r.get_den() == 0)
        throw bad("has zero denominator");
    r.canonicalize();
    return r;
}

// Canonical serialized form: "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline int sign_of(const Rational& r) { return sgn(r); }

using RatVec = std::vector<Rational>;

inline RatVec rat_vec(std::initializer_list<long> values) {
    RatVec v;
    v.reserve(values.size());
    for (long x : values)
        v.emplace_back(x);
    return v;
}

} // namespace motivic
