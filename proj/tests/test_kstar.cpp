#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "motivic/kstar.hpp"

using namespace motivic;

namespace {

KStarClass random_class(std::mt19937_64& rng, long d) {
    KStarClass c;
    const std::size_t n = rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
        QuadElem base(make_rational(static_cast<long>(rng() % 9) - 4,
                                    static_cast<long>(rng() % 3) + 1),
                      make_rational(static_cast<long>(rng() % 5) - 2,
                                    static_cast<long>(rng() % 3) + 1),
                      d);
        if (base.is_zero())
            base = QuadElem(Rational(2));
        const Rational e = make_rational(static_cast<long>(rng() % 7) - 3,
                                         static_cast<long>(rng() % 3) + 1);
        c *= KStarClass(base, e);
    }
    return c;
}

} // namespace

TEST_CASE("kstar_equal on the worked examples") {
    // 2^1 vs 4^(1/2)
    CHECK(kstar_equal(KStarClass(QuadElem(2), Rational(1)),
                      KStarClass(QuadElem(4), make_rational(1, 2))));
    // torsion: (-1)^1 vs empty class
    CHECK(kstar_equal(KStarClass(QuadElem(-1), Rational(1)),
                      KStarClass::one()));
    // 2 vs 3
    CHECK_FALSE(kstar_equal(KStarClass(QuadElem(2), Rational(1)),
                            KStarClass(QuadElem(3), Rational(1))));
}

TEST_CASE("zero bases are rejected") {
    CHECK_THROWS_AS(KStarClass(QuadElem(0), Rational(1)), ZeroBase);
}

TEST_CASE("exponent zero factors normalize away") {
    CHECK(KStarClass(QuadElem(5), Rational(0)).is_one_syntactically());
    const KStarClass c =
        KStarClass(QuadElem(5), Rational(2)) *
        KStarClass(QuadElem(5), Rational(-2));
    CHECK(c.is_one_syntactically());
}

TEST_CASE("kstar_equal is an equivalence relation compatible with products") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        const KStarClass a = random_class(rng, 5);
        const KStarClass b = random_class(rng, 5);
        const KStarClass c = random_class(rng, 5);
        CHECK(kstar_equal(a, a));
        if (kstar_equal(a, b)) {
            CHECK(kstar_equal(b, a));
            CHECK(kstar_equal(a * c, b * c));
        }
        if (kstar_equal(a, b) && kstar_equal(b, c))
            CHECK(kstar_equal(a, c));
        // Multiplying both sides by the same class preserves equivalence.
        CHECK(kstar_equal(a * c, a * c));
        CHECK(kstar_equal(a.pow(Rational(2)), a * a));
        CHECK(kstar_equal(a * a.inverse(), KStarClass::one()));
    }
}

TEST_CASE("square roots of torsion are detected") {
    // (-1)^(1/2) differs from 1 by a torsion check after clearing
    // denominators: ((-1)^(1/2))^2 = -1, so the classes are equal in
    // k* tensor Q (torsion dies).
    CHECK(kstar_equal(KStarClass(QuadElem(-1), make_rational(1, 2)),
                      KStarClass::one()));
    // but 2^(1/2) is not 1
    CHECK_FALSE(kstar_equal(KStarClass(QuadElem(2), make_rational(1, 2)),
                            KStarClass::one()));
}

TEST_CASE("quadratic bases participate") {
    const QuadElem eps(make_rational(3, 2), make_rational(1, 2), 5);
    const QuadElem eps2 = eps * eps;
    CHECK(kstar_equal(KStarClass(eps2, make_rational(1, 2)),
                      KStarClass(eps, Rational(1))));
    CHECK_THROWS_AS(kstar_equal(KStarClass(eps, Rational(1)),
                                KStarClass(QuadElem(Rational(1), Rational(1), 2),
                                           Rational(1))),
                    FieldMismatch);
}
