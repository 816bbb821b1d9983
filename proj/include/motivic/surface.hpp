#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motivic/matrix.hpp"

namespace motivic {

// Realization data of a desingularized proper surface: H^2 with its
// intersection form, the classes of the exceptional curves, and optionally
// an ample class and the cup-product action H^1 -> H^3 of the H^2 basis
// (one h1 x h1 matrix per basis class).
struct SurfaceDatum {
    long h1_dim = 0;
    RatMatrix form; // the intersection form Q on H^2
    std::vector<RatVec> exceptional;
    std::optional<RatVec> ample;
    std::optional<std::vector<RatMatrix>> cup1;

    std::size_t b2() const { return form.rows(); }
    std::size_t exceptional_count() const { return exceptional.size(); }
};

inline RatMatrix exceptional_columns(const SurfaceDatum& s) {
    return RatMatrix::from_columns(s.exceptional, s.b2());
}

// chi of the surface: 1 - 2q + b2 - 2q + 1.
inline long euler_characteristic(const SurfaceDatum& s) {
    return 2 - 2 * s.h1_dim + static_cast<long>(s.b2());
}

// Pairwise intersection numbers of the exceptional classes.
inline RatMatrix gram_matrix(const SurfaceDatum& s) {
    const std::size_t r = s.exceptional.size();
    RatMatrix g(r, r);
    for (std::size_t n = 0; n < r; ++n)
        for (std::size_t m = 0; m < r; ++m)
            g.at(n, m) = pair(s.form, s.exceptional[n], s.exceptional[m]);
    return g;
}

// Load-time checks. Negative definiteness of the Gram matrix already forces
// linear independence; both are verified so errors name the precise failure.
inline void validate(const SurfaceDatum& s) {
    if (s.form.rows() == 0)
        throw ValidationError("surface.Q: intersection form must be nonempty");
    if (!s.form.is_symmetric())
        throw NotSymmetric("surface.Q: intersection form");
    if (s.form.det() == 0)
        throw ValidationError("surface.Q: intersection form is degenerate");
    if (s.h1_dim < 0 || s.h1_dim % 2 != 0)
        throw ValidationError("surface.h1_dim: must be even and >= 0, got " +
                              std::to_string(s.h1_dim));
    const std::size_t b2 = s.b2();
    for (std::size_t m = 0; m < s.exceptional.size(); ++m)
        if (s.exceptional[m].size() != b2)
            throw ValidationError("surface.exceptional[" + std::to_string(m) +
                                  "]: length != b2");
    if (!s.exceptional.empty()) {
        if (exceptional_columns(s).rank() != s.exceptional.size())
            throw ValidationError(
                "surface.exceptional: classes are linearly dependent");
        if (!gram_matrix(s).is_negative_definite())
            throw ValidationError(
                "surface.exceptional: Gram matrix is not negative definite");
    }
    if (s.ample) {
        if (s.ample->size() != b2)
            throw ValidationError("surface.ample: length != b2");
        if (sign_of(pair(s.form, *s.ample, *s.ample)) <= 0)
            throw ValidationError(
                "surface.ample: self-intersection must be > 0");
    }
    if (s.cup1) {
        if (s.cup1->size() != b2)
            throw ValidationError("surface.cup1: need one matrix per H^2 "
                                  "basis class");
        for (std::size_t i = 0; i < s.cup1->size(); ++i) {
            const RatMatrix& t = (*s.cup1)[i];
            if (t.rows() != static_cast<std::size_t>(s.h1_dim) ||
                t.cols() != static_cast<std::size_t>(s.h1_dim))
                throw ValidationError("surface.cup1[" + std::to_string(i) +
                                      "]: shape != h1_dim x h1_dim");
        }
    }
}

} // namespace motivic
