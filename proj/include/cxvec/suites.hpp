#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cxvec/geometry.hpp"
#include "cxvec/matrix.hpp"
#include "cxvec/rng.hpp"
#include "cxvec/scalar.hpp"
#include "cxvec/series.hpp"
#include "cxvec/vector.hpp"

// Randomized property suites mirroring the library's theorem tables:
//   table1  flatten/unflatten bijection and transport
//   table2  the eight vector-space axioms
//   table3  cross-product algebra
//   table4  inner-product algebra
//   table5  norm, angle and collinearity analytics
//   table6  matrix arithmetic
//   table7  summability, infinite sums and linearity
// Exact-backend properties must hold with zero residual; floating ones carry
// their tolerances inline. Trial t draws its generator from seed + t, so any
// counterexample is reproducible from the reported seed alone.

namespace cxvec::suites {

struct PropertyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst_residual = 0.0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::size_t dim_lo = 1;
    std::size_t dim_hi = 8;
};

namespace detail {

struct TrialOutcome {
    bool ok = true;
    double residual = 0.0;
    std::string detail;
};

template <typename Fn>
PropertyResult run_property(std::string name, const SuiteConfig& cfg,
                            std::size_t trials, Fn&& trial_fn) {
    PropertyResult result;
    result.name = std::move(name);
    result.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = cfg.seed + t;
        Xoshiro256 rng(trial_seed);
        TrialOutcome out = trial_fn(rng);
        result.worst_residual = std::max(result.worst_residual, out.residual);
        if (!out.ok) {
            ++result.failures;
            if (result.first_counterexample.empty()) {
                result.first_counterexample =
                    "trial " + std::to_string(t) + " (seed "
                    + std::to_string(trial_seed) + "): " + out.detail;
            }
        }
    }
    return result;
}

inline std::size_t pick_dim(Xoshiro256& rng, const SuiteConfig& cfg) {
    std::size_t lo = std::max<std::size_t>(1, cfg.dim_lo);
    std::size_t hi = std::max(lo, cfg.dim_hi);
    return static_cast<std::size_t>(rng.integer(static_cast<long>(lo),
                                                static_cast<long>(hi)));
}

template <typename T>
TrialOutcome exact_eq(const T& lhs, const T& rhs, const std::string& context) {
    if (lhs == rhs) {
        return {};
    }
    return {false, 1.0, context};
}

} // namespace detail

// --- Table 1: the bivector bijection -----------------------------------------

inline std::vector<PropertyResult> run_table1(const SuiteConfig& cfg) {
    using detail::TrialOutcome;
    using Q = Rational;
    std::vector<PropertyResult> out;

    out.push_back(detail::run_property(
        "unflatten_flatten_identity", cfg, cfg.trials, [&](Xoshiro256& rng) {
            CVector<Q> v = random_cvector<Q>(rng, detail::pick_dim(rng, cfg));
            return detail::exact_eq(unflatten(flatten(v)), v, "v=" + to_string(v));
        }));

    out.push_back(detail::run_property(
        "flatten_unflatten_identity", cfg, cfg.trials, [&](Xoshiro256& rng) {
            RVector<Q> r = random_rvector<Q>(rng, 2 * detail::pick_dim(rng, cfg));
            return detail::exact_eq(flatten(unflatten(r)), r, "r=" + to_string(r));
        }));

    out.push_back(detail::run_property(
        "flatten_map_negation", cfg, cfg.trials, [&](Xoshiro256& rng) {
            CVector<Q> v = random_cvector<Q>(rng, detail::pick_dim(rng, cfg));
            return detail::exact_eq(flatten(cvector_neg(v)), rvector_neg(flatten(v)),
                                    "v=" + to_string(v));
        }));

    out.push_back(detail::run_property(
        "flatten_map_conjugation", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            CVector<Q> v = random_cvector<Q>(rng, n);
            RVector<Q> expect = flatten(v);
            for (std::size_t i = n + 1; i <= 2 * n; ++i) {
                expect(i) = Q(-expect(i));
            }
            return detail::exact_eq(flatten(cvector_cnj(v)), expect,
                                    "v=" + to_string(v));
        }));

    out.push_back(detail::run_property(
        "flatten_map2_addition", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            CVector<Q> u = random_cvector<Q>(rng, n);
            CVector<Q> v = random_cvector<Q>(rng, n);
            return detail::exact_eq(flatten(cvector_add(u, v)),
                                    rvector_add(flatten(u), flatten(v)),
                                    "u=" + to_string(u) + " v=" + to_string(v));
        }));

    return out;
}

// --- Table 2: vector-space axioms ---------------------------------------------

inline std::vector<PropertyResult> run_table2(const SuiteConfig& cfg) {
    using Q = Rational;
    using V = CVector<Q>;
    struct Axiom {
        const char* name;
        std::function<bool(Xoshiro256&, std::size_t)> holds;
    };

    const std::vector<Axiom> axioms = {
        {"add_associativity",
         [](Xoshiro256& rng, std::size_t n) {
             V u = random_cvector<Q>(rng, n);
             V v = random_cvector<Q>(rng, n);
             V w = random_cvector<Q>(rng, n);
             return cvector_add(u, cvector_add(v, w))
                    == cvector_add(cvector_add(u, v), w);
         }},
        {"add_commutativity",
         [](Xoshiro256& rng, std::size_t n) {
             V u = random_cvector<Q>(rng, n);
             V v = random_cvector<Q>(rng, n);
             return cvector_add(u, v) == cvector_add(v, u);
         }},
        {"add_unit",
         [](Xoshiro256& rng, std::size_t n) {
             V u = random_cvector<Q>(rng, n);
             return cvector_add(u, cvector_zero<Q>(n)) == u;
         }},
        {"add_inverse",
         [](Xoshiro256& rng, std::size_t n) {
             V u = random_cvector<Q>(rng, n);
             return cvector_add(u, cvector_neg(u)) == cvector_zero<Q>(n);
         }},
        {"vector_distributivity",
         [](Xoshiro256& rng, std::size_t n) {
             Complex<Q> a = random_scalar<Q>(rng);
             V u = random_cvector<Q>(rng, n);
             V v = random_cvector<Q>(rng, n);
             return cvector_smul(a, cvector_add(u, v))
                    == cvector_add(cvector_smul(a, u), cvector_smul(a, v));
         }},
        {"scalar_distributivity",
         [](Xoshiro256& rng, std::size_t n) {
             Complex<Q> a = random_scalar<Q>(rng);
             Complex<Q> b = random_scalar<Q>(rng);
             V u = random_cvector<Q>(rng, n);
             return cvector_smul(a + b, u)
                    == cvector_add(cvector_smul(a, u), cvector_smul(b, u));
         }},
        {"mul_associativity",
         [](Xoshiro256& rng, std::size_t n) {
             Complex<Q> a = random_scalar<Q>(rng);
             Complex<Q> b = random_scalar<Q>(rng);
             V u = random_cvector<Q>(rng, n);
             return cvector_smul(a, cvector_smul(b, u)) == cvector_smul(a * b, u);
         }},
        {"scalar_unit",
         [](Xoshiro256& rng, std::size_t n) {
             V u = random_cvector<Q>(rng, n);
             return cvector_smul(cx(scalar_field<Q>::one()), u) == u;
         }},
    };

    std::vector<PropertyResult> out;
    for (const auto& axiom : axioms) {
        out.push_back(detail::run_property(
            axiom.name, cfg, cfg.trials, [&](Xoshiro256& rng) {
                std::size_t n = detail::pick_dim(rng, cfg);
                bool ok = axiom.holds(rng, n);
                return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                            ok ? "" : "dim=" + std::to_string(n)};
            }));
    }
    return out;
}

// --- Table 3: cross-product algebra -------------------------------------------

inline std::vector<PropertyResult> run_table3(const SuiteConfig& cfg) {
    using Q = Rational;
    using V = CVector<Q>;
    struct Law {
        const char* name;
        std::function<bool(Xoshiro256&)> holds;
    };
    auto zero = []() { return cvector_zero<Q>(3); };

    const std::vector<Law> laws = {
        {"left_zero",
         [zero](Xoshiro256& rng) {
             V u = random_cvector<Q>(rng, 3);
             return ccross(zero(), u) == zero();
         }},
        {"right_zero",
         [zero](Xoshiro256& rng) {
             V u = random_cvector<Q>(rng, 3);
             return ccross(u, zero()) == zero();
         }},
        {"irreflexivity",
         [zero](Xoshiro256& rng) {
             V u = random_cvector<Q>(rng, 3);
             return ccross(u, u) == zero();
         }},
        {"asymmetry",
         [](Xoshiro256& rng) {
             V u = random_cvector<Q>(rng, 3);
             V v = random_cvector<Q>(rng, 3);
             return cvector_neg(ccross(u, v)) == ccross(v, u);
         }},
        {"left_distributivity_add",
         [](Xoshiro256& rng) {
             V u = random_cvector<Q>(rng, 3);
             V v = random_cvector<Q>(rng, 3);
             V w = random_cvector<Q>(rng, 3);
             return ccross(cvector_add(u, v), w)
                    == cvector_add(ccross(u, w), ccross(v, w));
         }},
        {"right_distributivity_add",
         [](Xoshiro256& rng) {
             V u = random_cvector<Q>(rng, 3);
             V v = random_cvector<Q>(rng, 3);
             V w = random_cvector<Q>(rng, 3);
             return ccross(u, cvector_add(v, w))
                    == cvector_add(ccross(u, v), ccross(u, w));
         }},
        {"left_distributivity_smul",
         [](Xoshiro256& rng) {
             Complex<Q> a = random_scalar<Q>(rng);
             V u = random_cvector<Q>(rng, 3);
             V v = random_cvector<Q>(rng, 3);
             return ccross(cvector_smul(a, u), v) == cvector_smul(a, ccross(u, v));
         }},
        {"right_distributivity_smul",
         [](Xoshiro256& rng) {
             Complex<Q> a = random_scalar<Q>(rng);
             V u = random_cvector<Q>(rng, 3);
             V v = random_cvector<Q>(rng, 3);
             return ccross(u, cvector_smul(a, v)) == cvector_smul(a, ccross(u, v));
         }},
    };

    std::vector<PropertyResult> out;
    for (const auto& law : laws) {
        out.push_back(detail::run_property(
            law.name, cfg, cfg.trials, [&](Xoshiro256& rng) {
                bool ok = law.holds(rng);
                return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, ok ? "" : "dim=3"};
            }));
    }
    return out;
}

// --- Table 4: inner-product algebra -------------------------------------------

inline std::vector<PropertyResult> run_table4(const SuiteConfig& cfg) {
    using Q = Rational;
    using V = CVector<Q>;
    std::vector<PropertyResult> out;

    out.push_back(detail::run_property(
        "conjugate_symmetry", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            V x = random_cvector<Q>(rng, n);
            V y = random_cvector<Q>(rng, n);
            bool ok = cdot(x, y) == cnj(cdot(y, x));
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                        "x=" + to_string(x) + " y=" + to_string(y)};
        }));

    out.push_back(detail::run_property(
        "linearity_smul", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            Complex<Q> c = random_scalar<Q>(rng);
            V x = random_cvector<Q>(rng, n);
            V y = random_cvector<Q>(rng, n);
            bool ok = cdot(cvector_smul(c, x), y) == c * cdot(x, y);
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "c=" + to_string(c)};
        }));

    out.push_back(detail::run_property(
        "linearity_add", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            V x = random_cvector<Q>(rng, n);
            V y = random_cvector<Q>(rng, n);
            V z = random_cvector<Q>(rng, n);
            bool ok = cdot(cvector_add(x, y), z) == cdot(x, z) + cdot(y, z);
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "x=" + to_string(x)};
        }));

    out.push_back(detail::run_property(
        "zero_length_iff_zero", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            V zero = cvector_zero<Q>(n);
            if (cdot(zero, zero) != Complex<Q>{}) {
                return detail::TrialOutcome{false, 1.0, "zero vector, dim=" + std::to_string(n)};
            }
            V x = random_nonzero_cvector<Q>(rng, n);
            bool ok = cdot(x, x) != Complex<Q>{};
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "x=" + to_string(x)};
        }));

    out.push_back(detail::run_property(
        "positive_definiteness", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            V x = random_cvector<Q>(rng, n);
            Complex<Q> xx = cdot(x, x);
            bool ok = xx.im == scalar_field<Q>::zero()
                      && xx.re >= scalar_field<Q>::zero();
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "x=" + to_string(x)};
        }));

    return out;
}

// --- Table 5: norm and angle analytics -----------------------------------------

inline std::vector<PropertyResult> run_table5(const SuiteConfig& cfg) {
    using Q = Rational;
    std::vector<PropertyResult> out;
    const double pi = std::acos(-1.0);

    out.push_back(detail::run_property(
        "cauchy_schwarz", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            CVector<double> x = random_cvector<double>(rng, n);
            CVector<double> y = random_cvector<double>(rng, n);
            double bound = cnorm(x) * cnorm(y);
            double excess = modulus(cdot(x, y)) - bound;
            double residual = excess <= 0.0 ? 0.0 : excess / std::max(1.0, bound);
            bool ok = residual <= 1e-12;
            return detail::TrialOutcome{ok, residual,
                                        "x=" + to_string(x) + " y=" + to_string(y)};
        }));

    out.push_back(detail::run_property(
        "cauchy_schwarz_equality_collinear", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            CVector<double> x = random_nonzero_cvector<double>(rng, n);
            CVector<double> y = cvector_smul(random_nonzero_scalar<double>(rng), x);
            double nn = cnorm(x) * cnorm(y);
            double residual = std::fabs(modulus(cdot(x, y)) - nn) / (1.0 + nn);
            bool ok = residual <= 1e-9;
            return detail::TrialOutcome{ok, residual, "x=" + to_string(x)};
        }));

    out.push_back(detail::run_property(
        "triangle_inequality", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            CVector<double> x = random_cvector<double>(rng, n);
            CVector<double> y = random_cvector<double>(rng, n);
            double bound = cnorm(x) + cnorm(y);
            double excess = cnorm(cvector_add(x, y)) - bound;
            double residual = excess <= 0.0 ? 0.0 : excess / std::max(1.0, bound);
            bool ok = residual <= 1e-12;
            return detail::TrialOutcome{ok, residual, "x=" + to_string(x)};
        }));

    out.push_back(detail::run_property(
        "pythagorean_constructed_orthogonal", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = std::max<std::size_t>(2, detail::pick_dim(rng, cfg));
            CVector<Q> x = random_nonzero_cvector<Q>(rng, n);
            CVector<Q> y0 = random_cvector<Q>(rng, n);
            Complex<Q> coeff = cnj(cdot(x, y0) / cdot(x, x));
            CVector<Q> y = cvector_sub(y0, cvector_smul(coeff, x));
            bool ok = corthogonal(x, y)
                      && cnorm2(cvector_add(x, y)) == cnorm2(x) + cnorm2(y);
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                        "x=" + to_string(x) + " y=" + to_string(y)};
        }));

    out.push_back(detail::run_property(
        "pythagorean_reverse", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            CVector<Q> x = random_cvector<Q>(rng, n);
            CVector<Q> y = random_cvector<Q>(rng, n);
            if (cnorm2(cvector_add(x, y)) != cnorm2(x) + cnorm2(y)) {
                return detail::TrialOutcome{}; // equality absent, nothing to imply
            }
            bool ok = cdot(x, y).re == scalar_field<Q>::zero();
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                        "x=" + to_string(x) + " y=" + to_string(y)};
        }));

    out.push_back(detail::run_property(
        "dot_product_angle_identity", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            CVector<double> x = random_nonzero_cvector<double>(rng, n);
            CVector<double> y = random_nonzero_cvector<double>(rng, n);
            Complex<double> lhs = cdot(x, y);
            Complex<double> rhs =
                cx(cnorm(x) * cnorm(y)) * ccos(cvector_angle(x, y));
            double residual = modulus(lhs - rhs) / std::max(1.0, modulus(lhs));
            bool ok = residual <= 1e-9;
            return detail::TrialOutcome{ok, residual, "x=" + to_string(x)};
        }));

    out.push_back(detail::run_property(
        "angle_range_non_collinear", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t n = std::max<std::size_t>(2, detail::pick_dim(rng, cfg));
            CVector<double> x = random_nonzero_cvector<double>(rng, n);
            CVector<double> y = random_nonzero_cvector<double>(rng, n);
            if (collinear_cvectors(x, y, 1e-9)) {
                return detail::TrialOutcome{};
            }
            double re = cvector_angle(x, y).re;
            bool ok = re > 0.0 && re < pi;
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                        "x=" + to_string(x) + " y=" + to_string(y)};
        }));

    out.push_back(detail::run_property(
        "cross_zero_iff_collinear", cfg, cfg.trials, [&](Xoshiro256& rng) {
            CVector<Q> x = random_cvector<Q>(rng, 3);
            Complex<Q> a = random_scalar<Q>(rng);
            if (ccross(x, cvector_smul(a, x)) != cvector_zero<Q>(3)) {
                return detail::TrialOutcome{false, 1.0,
                                            "collinear pair with nonzero cross, x="
                                                + to_string(x)};
            }
            CVector<Q> y = random_cvector<Q>(rng, 3);
            bool collinear = collinear_cvectors(x, y);
            bool cross_zero = ccross(x, y) == cvector_zero<Q>(3);
            bool ok = collinear == cross_zero;
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                        "x=" + to_string(x) + " y=" + to_string(y)};
        }));

    return out;
}

// --- Table 6: matrix arithmetic -------------------------------------------------

inline std::vector<PropertyResult> run_table6(const SuiteConfig& cfg) {
    using Q = Rational;
    using M = CMatrix<Q>;
    std::vector<PropertyResult> out;
    auto shape = [](Xoshiro256& rng, long hi) {
        return static_cast<std::size_t>(rng.integer(1, hi));
    };

    out.push_back(detail::run_property(
        "entrywise_group_laws", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t r = shape(rng, 5);
            std::size_t c = shape(rng, 5);
            M m = random_cmatrix<Q>(rng, r, c);
            bool ok = cmatrix_add(m, cmatrix_neg(m)) == cmatrix_zero<Q>(r, c)
                      && cmatrix_cnj(cmatrix_cnj(m)) == m
                      && cmatrix_smul(cx(scalar_field<Q>::one()), m) == m;
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                        std::to_string(r) + "x" + std::to_string(c)};
        }));

    out.push_back(detail::run_property(
        "mul_matches_naive_oracle", cfg, std::max<std::size_t>(1, cfg.trials / 2),
        [&](Xoshiro256& rng) {
            std::size_t m = shape(rng, 5);
            std::size_t n = shape(rng, 5);
            std::size_t p = shape(rng, 5);
            M a = random_cmatrix<Q>(rng, m, n);
            M b = random_cmatrix<Q>(rng, n, p);
            M prod = cmatrix_mul(a, b);
            // independent naive triple loop
            bool ok = true;
            for (std::size_t i = 1; i <= m && ok; ++i) {
                for (std::size_t j = 1; j <= p && ok; ++j) {
                    Complex<Q> sum{};
                    for (std::size_t k = 1; k <= n; ++k) {
                        sum = sum + a(i, k) * b(k, j);
                    }
                    ok = prod(i, j) == sum;
                }
            }
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0,
                                        std::to_string(m) + "x" + std::to_string(n)
                                            + "x" + std::to_string(p)};
        }));

    out.push_back(detail::run_property(
        "mul_associativity", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t m = shape(rng, 4);
            std::size_t n = shape(rng, 4);
            std::size_t p = shape(rng, 4);
            std::size_t q2 = shape(rng, 4);
            M a = random_cmatrix<Q>(rng, m, n);
            M b = random_cmatrix<Q>(rng, n, p);
            M c = random_cmatrix<Q>(rng, p, q2);
            bool ok = cmatrix_mul(cmatrix_mul(a, b), c)
                      == cmatrix_mul(a, cmatrix_mul(b, c));
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, ""};
        }));

    out.push_back(detail::run_property(
        "mul_distributivity", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t m = shape(rng, 4);
            std::size_t n = shape(rng, 4);
            std::size_t p = shape(rng, 4);
            M a = random_cmatrix<Q>(rng, m, n);
            M b1 = random_cmatrix<Q>(rng, n, p);
            M b2 = random_cmatrix<Q>(rng, n, p);
            M c = random_cmatrix<Q>(rng, p, m);
            bool ok = cmatrix_mul(a, cmatrix_add(b1, b2))
                          == cmatrix_add(cmatrix_mul(a, b1), cmatrix_mul(a, b2))
                      && cmatrix_mul(cmatrix_add(b1, b2), c)
                             == cmatrix_add(cmatrix_mul(b1, c), cmatrix_mul(b2, c));
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, ""};
        }));

    out.push_back(detail::run_property(
        "cnj_multiplicative", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t m = shape(rng, 4);
            std::size_t n = shape(rng, 4);
            std::size_t p = shape(rng, 4);
            M a = random_cmatrix<Q>(rng, m, n);
            M b = random_cmatrix<Q>(rng, n, p);
            bool ok = cmatrix_cnj(cmatrix_mul(a, b))
                      == cmatrix_mul(cmatrix_cnj(a), cmatrix_cnj(b));
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, ""};
        }));

    out.push_back(detail::run_property(
        "matvec_is_column_mul", cfg, cfg.trials, [&](Xoshiro256& rng) {
            std::size_t m = shape(rng, 5);
            std::size_t n = shape(rng, 5);
            M a = random_cmatrix<Q>(rng, m, n);
            CVector<Q> x = random_cvector<Q>(rng, n);
            std::vector<CVector<Q>> column;
            for (std::size_t k = 1; k <= n; ++k) {
                column.push_back(CVector<Q>{x(k)});
            }
            M prod = cmatrix_mul(a, M::from_rows(column));
            CVector<Q> applied = cmatrix_cvector_mul(a, x);
            bool ok = true;
            for (std::size_t i = 1; i <= m; ++i) {
                ok = ok && applied(i) == prod(i, 1);
            }
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, ""};
        }));

    return out;
}

// --- Table 7: summability, infinite sums, linearity ------------------------------

inline std::vector<PropertyResult> run_table7(const SuiteConfig& cfg) {
    std::vector<PropertyResult> out;
    using VD = CVector<double>;
    auto geometric = [](double ratio, const VD& v) {
        return VectorSequence<double>{
            v.dim(),
            [ratio, v](std::uint64_t n2) {
                return cvector_smul(cx(std::pow(ratio, static_cast<double>(n2))), v);
            },
            IndexSet::from(0)};
    };
    std::size_t sampled = std::min<std::size_t>(cfg.trials, 50);

    out.push_back(detail::run_property(
        "geometric_closed_form", cfg, sampled, [&](Xoshiro256& rng) {
            VD v{cx(1.0), Complex<double>{0.0, 1.0}};
            double ratio = 0.5;
            if (rng.uniform01() > 0.3) { // keep the pinned (1/2)(1,i) case in the mix
                ratio = rng.uniform(0.1, 0.8);
                v = random_cvector<double>(rng, detail::pick_dim(rng, cfg));
            }
            SumOutcome<double> s = cinfsum(geometric(ratio, v), 1e-12, 2000);
            if (!s.converged) {
                return detail::TrialOutcome{false, 1.0, "failed to converge"};
            }
            VD expect = cvector_smul(cx(1.0 / (1.0 - ratio)), v);
            double residual = 0.0;
            for (std::size_t c = 1; c <= v.dim(); ++c) {
                residual = std::max(residual, modulus(s.value(c) - expect(c))
                                                  / std::max(1.0, modulus(expect(c))));
            }
            bool ok = residual <= 1e-10;
            return detail::TrialOutcome{ok, residual, "ratio=" + std::to_string(ratio)};
        }));

    out.push_back(detail::run_property(
        "flatten_path_equals_componentwise", cfg, sampled, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            VD v = random_cvector<double>(rng, n);
            double ratio = rng.uniform(0.1, 0.8);
            SumOutcome<double> s = cinfsum(geometric(ratio, v), 1e-13, 2000);
            if (!s.converged) {
                return detail::TrialOutcome{false, 1.0, "failed to converge"};
            }
            double residual = 0.0;
            for (std::size_t c = 1; c <= n; ++c) {
                Complex<double> direct{};
                Complex<double> scale = cx(1.0);
                for (int k = 0; k < 500; ++k) {
                    direct = direct + scale * v(c);
                    scale = scale * cx(ratio);
                }
                residual = std::max(residual, modulus(s.value(c) - direct)
                                                  / std::max(1.0, modulus(direct)));
            }
            bool ok = residual <= 1e-12;
            return detail::TrialOutcome{ok, residual, "ratio=" + std::to_string(ratio)};
        }));

    out.push_back(detail::run_property(
        "csummable_geometric_and_divergent", cfg, sampled, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            VD v = random_nonzero_cvector<double>(rng, n);
            bool geo = csummable(geometric(rng.uniform(0.1, 0.8), v), 1e-10, 1000);
            VectorSequence<double> constant{n, [v](std::uint64_t) { return v; },
                                            IndexSet::from(0)};
            bool divergent = csummable(constant, 1e-10, 500);
            VectorSequence<double> finite{n, [v](std::uint64_t) { return v; },
                                          IndexSet::finite({0, 1, 2})};
            bool fin = csummable(finite, 1e-10, 500);
            bool ok = geo && !divergent && fin;
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "dim=" + std::to_string(n)};
        }));

    out.push_back(detail::run_property(
        "harmonic_rejected", cfg, 1, [&](Xoshiro256&) {
            VD v{cx(1.0), Complex<double>{0.0, 1.0}};
            VectorSequence<double> harmonic{
                2,
                [v](std::uint64_t n2) {
                    return cvector_smul(cx(1.0 / static_cast<double>(n2)), v);
                },
                IndexSet::from(1)};
            bool ok = !csummable(harmonic, 1e-6, 3000);
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "harmonic series"};
        }));

    out.push_back(detail::run_property(
        "cinfsum_linearity", cfg, sampled, [&](Xoshiro256& rng) {
            std::size_t n = detail::pick_dim(rng, cfg);
            VD vf = random_cvector<double>(rng, n);
            VD vg = random_cvector<double>(rng, n);
            Complex<double> a = random_scalar<double>(rng);
            double tol = 1e-12;
            auto f = geometric(0.4, vf);
            auto g = geometric(0.7, vg);
            VectorSequence<double> combined{
                n,
                [&f, &g, a](std::uint64_t k) {
                    return cvector_add(cvector_smul(a, f.term(k)), g.term(k));
                },
                IndexSet::from(0)};
            SumOutcome<double> sf = cinfsum(f, tol, 2000);
            SumOutcome<double> sg = cinfsum(g, tol, 2000);
            SumOutcome<double> sc = cinfsum(combined, tol, 2000);
            if (!sf.converged || !sg.converged || !sc.converged) {
                return detail::TrialOutcome{false, 1.0, "failed to converge"};
            }
            VD expect = cvector_add(cvector_smul(a, sf.value), sg.value);
            double residual = 0.0;
            for (std::size_t c = 1; c <= n; ++c) {
                residual = std::max(residual,
                                    modulus(sc.value(c) - expect(c))
                                        / std::max(1.0, modulus(expect(c))));
            }
            bool ok = residual <= 2.0 * tol + 1e-9;
            return detail::TrialOutcome{ok, residual, "a=" + to_string(a)};
        }));

    out.push_back(detail::run_property(
        "clinear_matrix_passes", cfg, 1, [&](Xoshiro256& rng) {
            CMatrix<double> m = random_cmatrix<double>(rng, 3, 4);
            auto f = [&m](const VD& v) { return cmatrix_cvector_mul(m, v); };
            LinearityReport rep = check_clinear<double>(f, 4, 3, 200, 1e-9, cfg.seed);
            bool ok = rep.passed();
            return detail::TrialOutcome{ok, rep.worst_residual, "matrix map"};
        }));

    out.push_back(detail::run_property(
        "clinear_conjugation_fails_homogeneity", cfg, 1, [&](Xoshiro256&) {
            auto f = [](const VD& v) { return cvector_cnj(v); };
            LinearityReport rep = check_clinear<double>(f, 3, 3, 200, 1e-9, cfg.seed);
            bool ok = !rep.complex_linear() && rep.homogeneity_failures > 0
                      && rep.additivity_failures == 0 && rep.transport_failures == 0;
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "conjugation map"};
        }));

    out.push_back(detail::run_property(
        "clinear_affine_fails_additivity", cfg, 1, [&](Xoshiro256& rng) {
            VD c = random_nonzero_cvector<double>(rng, 3);
            auto f = [&c](const VD& v) { return cvector_add(v, c); };
            LinearityReport rep = check_clinear<double>(f, 3, 3, 100, 1e-9, cfg.seed);
            bool ok = !rep.passed() && rep.additivity_failures > 0;
            return detail::TrialOutcome{ok, ok ? 0.0 : 1.0, "affine map"};
        }));

    return out;
}

// --- Dispatch -------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "table1", "table2", "table3", "table4", "table5", "table6", "table7"};
    return names;
}

inline std::vector<PropertyResult> run_suite(std::string_view name,
                                             const SuiteConfig& cfg) {
    if (name == "table1") return run_table1(cfg);
    if (name == "table2") return run_table2(cfg);
    if (name == "table3") return run_table3(cfg);
    if (name == "table4") return run_table4(cfg);
    if (name == "table5") return run_table5(cfg);
    if (name == "table6") return run_table6(cfg);
    if (name == "table7") return run_table7(cfg);
    if (name == "all") {
        std::vector<PropertyResult> all;
        for (const auto& suite : suite_names()) {
            auto part = run_suite(suite, cfg);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw UsageError("unknown suite '" + std::string(name)
                     + "' (expected table1..table7 or all)");
}

} // namespace cxvec::suites
