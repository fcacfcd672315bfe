#include <doctest.h>

#include "cxvec/rng.hpp"
#include "cxvec/vector.hpp"

using namespace cxvec;

namespace {

using CQ = Complex<Rational>;
using VQ = CVector<Rational>;
using RQ = RVector<Rational>;
using CD = Complex<double>;
using VD = CVector<double>;

Rational q(long num, long den = 1) {
    return scalar_field<Rational>::from_ratio(num, den);
}

} // namespace

TEST_SUITE("vector_core") {

TEST_CASE("vector_const") {
    CD k{2.0, 1.0};
    VD v = vector_const(k, 3);
    CHECK(v.dim() == 3);
    for (std::size_t i = 1; i <= 3; ++i) {
        CHECK(v(i) == k);
    }
    CHECK(vector_const(CD{}, 4) == cvector_zero<double>(4));
    CHECK_THROWS_AS(vector_const(k, 0), DimensionError);
}

TEST_CASE("vector_map component law") {
    VD v{CD{1.0, 1.0}, CD{2.0, -1.0}};
    CHECK(vector_map([](const CD& z) { return z; }, v) == v);
    VD conj = vector_map([](const CD& z) { return cnj(z); }, v);
    CHECK(conj == VD{CD{1.0, -1.0}, CD{2.0, 1.0}});
    for (std::size_t i = 1; i <= v.dim(); ++i) {
        CHECK(conj(i) == cnj(v(i)));
    }
}

TEST_CASE("vector_map2") {
    VD u{cx(1.0), cx(2.0)};
    VD v{cx(3.0), cx(4.0)};
    auto add = [](const CD& a, const CD& b) { return a + b; };
    CHECK(vector_map2(add, u, v) == VD{cx(4.0), cx(6.0)});

    auto mul = [](const CD& a, const CD& b) { return a * b; };
    CHECK(vector_map2(mul, u, vector_const(cx(1.0), 2)) == u);

    VD w{cx(1.0), cx(2.0), cx(3.0)};
    CHECK_THROWS_AS(vector_map2(add, u, w), DimensionError);
}

TEST_CASE("vector arithmetic unit laws") {
    Xoshiro256 rng(1);
    VQ u = random_cvector<Rational>(rng, 5);
    CHECK(cvector_add(u, cvector_zero<Rational>(5)) == u);
    CHECK(cvector_add(u, cvector_neg(u)) == cvector_zero<Rational>(5));
    CHECK(cvector_smul(cx(q(1)), u) == u);
    CHECK(cvector_sub(u, u) == cvector_zero<Rational>(5));
}

TEST_CASE("real and imaginary parts") {
    VD v{CD{1.0, 2.0}, cx(3.0)};
    CHECK(cvector_re(v) == RVector<double>{1.0, 3.0});
    CHECK(cvector_im(v) == RVector<double>{2.0, 0.0});

    RVector<double> r{0.0, 0.0, 1.0};
    CHECK(cvector_im(vector_to_cvector(r)) == rvector_zero<double>(3));
    CHECK(vector_to_cvector(r) == VD{cx(0.0), cx(0.0), cx(1.0)});
}

TEST_CASE("complex_vector recomposition") {
    CHECK(complex_vector(RVector<double>{1.0, 3.0}, RVector<double>{2.0, 0.0})
          == VD{CD{1.0, 2.0}, cx(3.0)});
    CHECK_THROWS_AS(complex_vector(RVector<double>{1.0}, RVector<double>{1.0, 2.0}),
                    DimensionError);

    Xoshiro256 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 8;
        VQ v = random_cvector<Rational>(rng, n);
        CHECK(complex_vector(cvector_re(v), cvector_im(v)) == v);

        // componentwise this is the map2 of x, y |-> cx(x) + ii * cx(y)
        RQ re = random_rvector<Rational>(rng, n);
        RQ im = random_rvector<Rational>(rng, n);
        VQ via_map2 = vector_map2(
            [](const Rational& x, const Rational& y) {
                return cx(x) + imaginary_unit<Rational>() * cx(y);
            },
            re, im);
        CHECK(complex_vector(re, im) == via_map2);
    }
}

TEST_CASE("flatten layout: real parts then imaginary parts") {
    VD v{CD{1.0, 2.0}, CD{3.0, 4.0}};
    CHECK(flatten(v) == RVector<double>{1.0, 3.0, 2.0, 4.0});
    CHECK(unflatten(RVector<double>{1.0, 3.0, 2.0, 4.0}) == v);
    CHECK(flatten(cvector_zero<double>(3)) == rvector_zero<double>(6));
    CHECK_THROWS_AS(unflatten(RVector<double>{1.0, 2.0, 3.0}), DimensionError);
}

TEST_CASE("flatten/unflatten are mutually inverse (randomized)") {
    Xoshiro256 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 8;
        VQ v = random_cvector<Rational>(rng, n);
        CHECK(unflatten(flatten(v)) == v);
        RQ r = random_rvector<Rational>(rng, 2 * n);
        CHECK(flatten(unflatten(r)) == r);
    }
}

TEST_CASE("flatten transports maps and map2 (randomized)") {
    Xoshiro256 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 8;
        VQ u = random_cvector<Rational>(rng, n);
        VQ v = random_cvector<Rational>(rng, n);

        // negation transports to real negation
        CHECK(flatten(cvector_neg(u)) == rvector_neg(flatten(u)));
        // addition transports to real addition
        CHECK(flatten(cvector_add(u, v)) == rvector_add(flatten(u), flatten(v)));
        // conjugation transports to (identity on the first half, negation on
        // the second)
        RQ fu = flatten(u);
        RQ expect = fu;
        for (std::size_t i = n + 1; i <= 2 * n; ++i) {
            expect(i) = q(-1) * fu(i);
        }
        CHECK(flatten(cvector_cnj(u)) == expect);
    }
}

TEST_CASE("eight vector-space axioms hold exactly (randomized)") {
    Xoshiro256 rng(42);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 1 + trial % 8;
        VQ u = random_cvector<Rational>(rng, n);
        VQ v = random_cvector<Rational>(rng, n);
        VQ w = random_cvector<Rational>(rng, n);
        CQ a = random_scalar<Rational>(rng);
        CQ b = random_scalar<Rational>(rng);

        CHECK(cvector_add(u, cvector_add(v, w)) == cvector_add(cvector_add(u, v), w));
        CHECK(cvector_add(u, v) == cvector_add(v, u));
        CHECK(cvector_add(u, cvector_zero<Rational>(n)) == u);
        CHECK(cvector_add(u, cvector_neg(u)) == cvector_zero<Rational>(n));
        CHECK(cvector_smul(a, cvector_add(u, v))
              == cvector_add(cvector_smul(a, u), cvector_smul(a, v)));
        CHECK(cvector_smul(a + b, u)
              == cvector_add(cvector_smul(a, u), cvector_smul(b, u)));
        CHECK(cvector_smul(a, cvector_smul(b, u)) == cvector_smul(a * b, u));
        CHECK(cvector_smul(cx(q(1)), u) == u);
    }
}

TEST_CASE("map2 component law for add, mul, sub (randomized)") {
    Xoshiro256 rng(17);
    auto ops = {+[](const CQ& a, const CQ& b) -> CQ { return a + b; },
                +[](const CQ& a, const CQ& b) -> CQ { return a * b; },
                +[](const CQ& a, const CQ& b) -> CQ { return a - b; }};
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 8;
        VQ u = random_cvector<Rational>(rng, n);
        VQ v = random_cvector<Rational>(rng, n);
        for (auto f : ops) {
            VQ r = vector_map2(f, u, v);
            for (std::size_t i = 1; i <= n; ++i) {
                CHECK(r(i) == f(u(i), v(i)));
            }
        }
    }
}

TEST_CASE("index access is 1-based and checked") {
    VD v{cx(1.0), cx(2.0)};
    CHECK(v(1) == cx(1.0));
    CHECK(v(2) == cx(2.0));
    CHECK_THROWS_AS(v(0), IndexError);
    CHECK_THROWS_AS(v(3), IndexError);
}

} // TEST_SUITE
