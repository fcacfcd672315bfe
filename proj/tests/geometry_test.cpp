#include <doctest.h>

#include <cmath>

#include "cxvec/geometry.hpp"
#include "cxvec/rng.hpp"

using namespace cxvec;

namespace {

using CQ = Complex<Rational>;
using VQ = CVector<Rational>;
using CD = Complex<double>;
using VD = CVector<double>;

Rational q(long num, long den = 1) {
    return scalar_field<Rational>::from_ratio(num, den);
}

// Expansion oracle for the dim-3 cross product, written out component by
// component so the library formula is checked against independent algebra.
template <typename R>
CVector<R> cross_oracle(const CVector<R>& u, const CVector<R>& v) {
    CVector<R> out = cvector_zero<R>(3);
    out(1) = u(2) * v(3) - u(3) * v(2);
    out(2) = u(3) * v(1) - u(1) * v(3);
    out(3) = u(1) * v(2) - u(2) * v(1);
    return out;
}

VQ random_orthogonal_to(Xoshiro256& rng, const VQ& x) {
    // Project a random vector against x: y0 - cnj(<x,y0>/<x,x>) % x.
    for (;;) {
        VQ y0 = random_cvector<Rational>(rng, x.dim());
        CQ coeff = cnj(cdot(x, y0) / cdot(x, x));
        VQ y = cvector_sub(y0, cvector_smul(coeff, x));
        if (y != cvector_zero<Rational>(x.dim())) {
            return y;
        }
    }
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("ccross on canonical and complex inputs") {
    VD e1{cx(1.0), cx(0.0), cx(0.0)};
    VD e2{cx(0.0), cx(1.0), cx(0.0)};
    VD e3{cx(0.0), cx(0.0), cx(1.0)};
    CHECK(ccross(e1, e2) == e3);

    VD u{CD{0.0, 1.0}, cx(0.0), cx(0.0)};
    VD expect{cx(0.0), cx(0.0), CD{0.0, 1.0}};
    CHECK(ccross(u, e2) == cross_oracle(u, e2));
    CHECK(ccross(u, e2) == expect);

    CHECK(ccross(u, u) == cvector_zero<double>(3));
    CHECK_THROWS_AS(ccross(VD{cx(1.0), cx(2.0)}, e1), DimensionError);
}

TEST_CASE("cdot examples") {
    VD x{CD{1.0, 1.0}, cx(0.0)};
    // (1+i) * cnj(1+i) = (1+i)(1-i) = 2
    CHECK(cdot(x, x) == cx(2.0));
    CHECK(cdot(x, cvector_zero<double>(2)) == CD{});
    CHECK_THROWS_AS(cdot(x, cvector_zero<double>(3)), DimensionError);

    Xoshiro256 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 8;
        VQ u = random_cvector<Rational>(rng, n);
        VQ v = random_cvector<Rational>(rng, n);
        CHECK(cdot(u, v) == cnj(cdot(v, u)));
    }
}

TEST_CASE("norms") {
    CHECK(cnorm(cbasis<double>(1, 3)) == 1.0);
    // |(3, 4i)| = sqrt(3*3 + 4*4) = 5 by expansion
    VD v{cx(3.0), CD{0.0, 4.0}};
    CHECK(cnorm2(v) == 25.0);
    CHECK(cnorm(v) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(cnorm2(cvector_zero<Rational>(4)) == q(0));
}

TEST_CASE("corthogonal") {
    CHECK(corthogonal(cbasis<Rational>(1, 3), cbasis<Rational>(2, 3)));
    // 1*cnj(i) + i*cnj(1) = -i + i = 0
    VQ u{CQ{q(1), q(0)}, CQ{q(0), q(1)}};
    VQ v{CQ{q(0), q(1)}, CQ{q(1), q(0)}};
    CHECK(corthogonal(u, v));

    Xoshiro256 rng(4);
    VQ x = random_nonzero_cvector<Rational>(rng, 4);
    CHECK_FALSE(corthogonal(x, x));

    VD a{cx(1.0), cx(0.0)};
    VD b{cx(1e-14), cx(1.0)};
    CHECK(corthogonal(a, b, 1e-12));
    CHECK_FALSE(corthogonal(a, a, 1e-12));
}

TEST_CASE("collinear_cvectors") {
    Xoshiro256 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 6;
        VQ v = random_cvector<Rational>(rng, n);
        CQ a = random_scalar<Rational>(rng);
        CHECK(collinear_cvectors(v, cvector_smul(a, v)));
        CHECK(collinear_cvectors(cvector_zero<Rational>(n), v));
    }
    CHECK_FALSE(collinear_cvectors(cbasis<Rational>(1, 3), cbasis<Rational>(2, 3)));

    VD v{cx(1.0), CD{2.0, 1.0}, cx(-0.5)};
    VD w = cvector_smul(CD{2.0, 1.0}, v);
    CHECK(collinear_cvectors(v, w, 1e-12));
    CHECK_FALSE(collinear_cvectors(cbasis<double>(1, 3), cbasis<double>(2, 3), 1e-12));
}

TEST_CASE("cvector_angle") {
    const double pi = std::acos(-1.0);
    VD x{cx(1.0), cx(0.0), cx(0.0)};
    CHECK(cvector_angle(x, cvector_zero<double>(3)) == cx(pi / 2.0));
    CHECK(cvector_angle(cvector_zero<double>(3), x) == cx(pi / 2.0));
    CHECK(modulus(cvector_angle(x, x)) < 1e-7); // cacs(1) at the branch point
    CHECK(modulus(cvector_angle(cbasis<double>(1, 3), cbasis<double>(2, 3))
                  - cx(pi / 2.0)) < 1e-15);

    // Real-collinear inputs get a real angle: 0 for positive multiples,
    // pi for negative ones.
    VD v{cx(0.3), cx(-1.7), cx(2.2)};
    CHECK(cvector_angle(v, cvector_smul(cx(2.0), v)).im == 0.0);
    CHECK(cvector_angle(v, cvector_smul(cx(-2.0), v)).re
          == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("cbasis") {
    VQ e1 = cbasis<Rational>(1, 4);
    CHECK(e1 == VQ{cx(q(1)), CQ{}, CQ{}, CQ{}});
    for (std::size_t j = 1; j <= 4; ++j) {
        for (std::size_t k = 1; k <= 4; ++k) {
            CHECK(cdot(cbasis<Rational>(j, 4), cbasis<Rational>(k, 4))
                  == (j == k ? cx(q(1)) : CQ{}));
        }
    }
    CHECK_THROWS_AS(cbasis<Rational>(5, 3), IndexError);
    CHECK_THROWS_AS(cbasis<Rational>(0, 3), IndexError);
}

TEST_CASE("cross product properties hold exactly (randomized)") {
    Xoshiro256 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        VQ u = random_cvector<Rational>(rng, 3);
        VQ v = random_cvector<Rational>(rng, 3);
        VQ w = random_cvector<Rational>(rng, 3);
        CQ a = random_scalar<Rational>(rng);
        VQ zero = cvector_zero<Rational>(3);

        CHECK(ccross(zero, u) == zero);
        CHECK(ccross(u, zero) == zero);
        CHECK(ccross(u, u) == zero);
        CHECK(cvector_neg(ccross(u, v)) == ccross(v, u));
        CHECK(ccross(cvector_add(u, v), w)
              == cvector_add(ccross(u, w), ccross(v, w)));
        CHECK(ccross(u, cvector_add(v, w))
              == cvector_add(ccross(u, v), ccross(u, w)));
        CHECK(ccross(cvector_smul(a, u), v) == cvector_smul(a, ccross(u, v)));
        CHECK(ccross(u, cvector_smul(a, v)) == cvector_smul(a, ccross(u, v)));
        CHECK(ccross(u, v) == cross_oracle(u, v));
    }
}

TEST_CASE("inner product space properties (randomized)") {
    Xoshiro256 rng(10);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 8;
        VQ x = random_cvector<Rational>(rng, n);
        VQ y = random_cvector<Rational>(rng, n);
        VQ z = random_cvector<Rational>(rng, n);
        CQ c = random_scalar<Rational>(rng);

        CHECK(cdot(x, y) == cnj(cdot(y, x)));
        CHECK(cdot(cvector_smul(c, x), y) == c * cdot(x, y));
        CHECK(cdot(cvector_add(x, y), z) == cdot(x, z) + cdot(y, z));
        CHECK(cdot(x, x).im == q(0));
        CHECK(cdot(x, x).re >= q(0));
        if (x != cvector_zero<Rational>(n)) {
            CHECK(cdot(x, x) != CQ{});
        }
    }
}

TEST_CASE("cross product vanishes exactly on collinear pairs and only there") {
    Xoshiro256 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        VQ x = random_cvector<Rational>(rng, 3);
        CQ a = random_scalar<Rational>(rng);
        CHECK(ccross(x, cvector_smul(a, x)) == cvector_zero<Rational>(3));

        VQ y = random_cvector<Rational>(rng, 3);
        if (!collinear_cvectors(x, y)) {
            CHECK(ccross(x, y) != cvector_zero<Rational>(3));
        }
    }
}

TEST_CASE("Cauchy-Schwarz and triangle inequalities (floating)") {
    Xoshiro256 rng(14);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + trial % 8;
        VD x = random_cvector<double>(rng, n);
        VD y = random_cvector<double>(rng, n);
        double nx = cnorm(x);
        double ny = cnorm(y);
        CHECK(modulus(cdot(x, y)) <= nx * ny * (1.0 + 1e-12));
        CHECK(cnorm(cvector_add(x, y)) <= (nx + ny) * (1.0 + 1e-12));
    }
}

TEST_CASE("Cauchy-Schwarz equality on collinear pairs") {
    Xoshiro256 rng(15);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 8;
        VD x = random_nonzero_cvector<double>(rng, n);
        VD y = cvector_smul(random_nonzero_scalar<double>(rng), x);
        double nn = cnorm(x) * cnorm(y);
        CHECK(std::fabs(modulus(cdot(x, y)) - nn) <= 1e-9 * (1.0 + nn));
        CHECK(collinear_cvectors(x, y, 1e-12));
    }
}

TEST_CASE("Pythagorean theorem on constructed orthogonal pairs (exact)") {
    Xoshiro256 rng(16);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + trial % 7;
        VQ x = random_nonzero_cvector<Rational>(rng, n);
        VQ y = random_orthogonal_to(rng, x);
        CHECK(corthogonal(x, y));
        CHECK(cnorm2(cvector_add(x, y)) == cnorm2(x) + cnorm2(y));
    }
}

TEST_CASE("dot product equals norm product times cosine of the angle") {
    Xoshiro256 rng(18);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 8;
        VD x = random_nonzero_cvector<double>(rng, n);
        VD y = random_nonzero_cvector<double>(rng, n);
        CD lhs = cdot(x, y);
        CD rhs = cx(cnorm(x) * cnorm(y)) * ccos(cvector_angle(x, y));
        CHECK(modulus(lhs - rhs) <= 1e-9 * std::max(1.0, modulus(lhs)));
    }
}

TEST_CASE("angle range on non-collinear pairs") {
    const double pi = std::acos(-1.0);
    Xoshiro256 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + trial % 7;
        VD x = random_nonzero_cvector<double>(rng, n);
        VD y = random_nonzero_cvector<double>(rng, n);
        if (collinear_cvectors(x, y, 1e-9)) {
            continue;
        }
        CD angle = cvector_angle(x, y);
        CHECK(angle.re > 0.0);
        CHECK(angle.re < pi);
    }
}

TEST_CASE("real 3-vector helpers") {
    RVector<double> a{1.0, 0.0, 0.0};
    RVector<double> b{0.0, 1.0, 0.0};
    CHECK(dot(a, b) == 0.0);
    CHECK(cross(a, b) == RVector<double>{0.0, 0.0, 1.0});
    CHECK(norm(RVector<double>{3.0, 4.0, 0.0}) == doctest::Approx(5.0));
}

} // TEST_SUITE
