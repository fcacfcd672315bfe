#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cxvec/errors.hpp"
#include "cxvec/rng.hpp"
#include "cxvec/scalar.hpp"
#include "cxvec/vector.hpp"

namespace cxvec {

/// The index sets summation ranges over: every index from a start upward,
/// or an explicit finite set.
class IndexSet {
public:
    static IndexSet from(std::uint64_t start) {
        IndexSet s;
        s.finite_ = false;
        s.start_ = start;
        return s;
    }

    static IndexSet finite(std::vector<std::uint64_t> elems) {
        IndexSet s;
        s.finite_ = true;
        s.elems_ = std::move(elems);
        return s;
    }

    bool is_finite() const { return finite_; }
    std::uint64_t start() const { return start_; }
    const std::vector<std::uint64_t>& elements() const { return elems_; }

private:
    IndexSet() = default;
    bool finite_ = false;
    std::uint64_t start_ = 0;
    std::vector<std::uint64_t> elems_;
};

/// A complex-vector-valued sequence; the term function must be a pure
/// function of the index and always produce vectors of dimension dim.
template <typename R>
struct VectorSequence {
    std::size_t dim = 0;
    std::function<CVector<R>(std::uint64_t)> term;
    IndexSet indices = IndexSet::from(0);
};

template <typename R>
struct SumOutcome {
    bool converged = false;
    CVector<R> value;       // meaningful when converged
    std::size_t terms_used = 0;
    R residual{};           // window spread achieved at stop
};

namespace detail {

/// Partial-sum driver over a real-vector sequence. Convergence is a
/// windowed Cauchy test: once W = max(10, max_terms/10) partial sums
/// exist, the sequence converges when the per-component spread
/// (max - min over the window, the sup of |S_m - S_n|) is <= tol before
/// max_terms terms. The window grows with the budget, so slowly divergent
/// series (harmonic) keep failing as the budget increases.
template <typename R>
struct RealSumOutcome {
    bool converged = false;
    RVector<R> sum;
    std::size_t terms_used = 0;
    R residual{};
};

template <typename R, typename TermFn>
RealSumOutcome<R> sum_real_sequence(std::size_t dim, TermFn&& term,
                                    const IndexSet& indices, const R& tol,
                                    std::size_t max_terms) {
    if (max_terms < 1) {
        throw UsageError("summation: max_terms must be >= 1");
    }
    RealSumOutcome<R> out{false, rvector_zero<R>(dim), 0, scalar_field<R>::zero()};

    if (indices.is_finite()) {
        for (std::uint64_t idx : indices.elements()) {
            out.sum = rvector_add(out.sum, term(idx));
            ++out.terms_used;
        }
        out.converged = true;
        return out;
    }

    const std::size_t window = std::max<std::size_t>(10, max_terms / 10);
    std::deque<RVector<R>> recent;
    std::uint64_t idx = indices.start();
    for (std::size_t n = 0; n < max_terms; ++n, ++idx) {
        out.sum = rvector_add(out.sum, term(idx));
        ++out.terms_used;
        recent.push_back(out.sum);
        if (recent.size() > window) {
            recent.pop_front();
        }
        if (recent.size() == window) {
            R spread = scalar_field<R>::zero();
            for (std::size_t c = 1; c <= dim; ++c) {
                R lo = recent.front()(c);
                R hi = lo;
                for (const auto& s : recent) {
                    lo = std::min<R>(lo, s(c));
                    hi = std::max<R>(hi, s(c));
                }
                spread = std::max<R>(spread, R(hi - lo));
            }
            out.residual = spread;
            if (spread <= tol) {
                out.converged = true;
                return out;
            }
        }
    }
    return out;
}

} // namespace detail

/// csummable s f <=> summable s (cvector_re o f) and summable s
/// (cvector_im o f), decided numerically by the windowed Cauchy test.
/// Non-convergence within the budget reports false.
template <typename R>
bool csummable(const VectorSequence<R>& seq, const R& tol, std::size_t max_terms) {
    auto re_part = detail::sum_real_sequence<R>(
        seq.dim, [&seq](std::uint64_t i) { return cvector_re(seq.term(i)); },
        seq.indices, tol, max_terms);
    if (!re_part.converged) {
        return false;
    }
    auto im_part = detail::sum_real_sequence<R>(
        seq.dim, [&seq](std::uint64_t i) { return cvector_im(seq.term(i)); },
        seq.indices, tol, max_terms);
    return im_part.converged;
}

/// cinfsum s f = unflatten(infsum s (flatten o f)): the partial sums run
/// over the flattened real sequence of dimension 2N and the limit is
/// unflattened back.
template <typename R>
SumOutcome<R> cinfsum(const VectorSequence<R>& seq, const R& tol,
                      std::size_t max_terms) {
    auto flat = detail::sum_real_sequence<R>(
        2 * seq.dim, [&seq](std::uint64_t i) { return flatten(seq.term(i)); },
        seq.indices, tol, max_terms);
    SumOutcome<R> out{flat.converged, unflatten(flat.sum), flat.terms_used,
                      flat.residual};
    return out;
}

// --- Randomized linearity checker -------------------------------------------

struct LinearityCounterexample {
    std::string law;       // "additivity", "homogeneity", "real_transport"
    std::string operands;
    double residual = 0.0;
};

struct LinearityReport {
    std::size_t trials = 0;
    std::size_t additivity_failures = 0;
    std::size_t homogeneity_failures = 0;   // complex scalars
    std::size_t transport_failures = 0;     // flatten o f o unflatten, real scalars
    double worst_residual = 0.0;
    std::vector<LinearityCounterexample> counterexamples; // first few only

    /// Complex-linear: additive and homogeneous over complex scalars.
    bool complex_linear() const {
        return additivity_failures == 0 && homogeneity_failures == 0;
    }
    bool passed() const { return complex_linear() && transport_failures == 0; }
};

namespace detail {

template <typename R>
double rel_residual(const CVector<R>& a, const CVector<R>& b) {
    double worst = 0.0;
    double scale = 1.0;
    for (std::size_t i = 1; i <= a.dim(); ++i) {
        Complex<R> d = a(i) - b(i);
        worst = std::max(worst, scalar_field<R>::to_double(scalar_field<R>::abs(d.re)));
        worst = std::max(worst, scalar_field<R>::to_double(scalar_field<R>::abs(d.im)));
        scale = std::max({scale,
                          std::fabs(scalar_field<R>::to_double(a(i).re)),
                          std::fabs(scalar_field<R>::to_double(a(i).im)),
                          std::fabs(scalar_field<R>::to_double(b(i).re)),
                          std::fabs(scalar_field<R>::to_double(b(i).im))});
    }
    return worst / scale;
}

} // namespace detail

/// Randomized falsification of linearity for f : complex^in -> complex^out.
/// Checks additivity f(u+v) = f(u) + f(v), complex homogeneity
/// f(a % u) = a % f(u), and real-linearity of the flattened transport
/// flatten o f o unflatten. A conjugation map passes the transported form
/// but fails complex homogeneity (witness a = i).
template <typename R, typename F>
LinearityReport check_clinear(F&& f, std::size_t in_dim, std::size_t out_dim,
                              std::size_t trials, const R& tol,
                              std::uint64_t rng_seed) {
    if (trials < 1) {
        throw UsageError("check_clinear: trials must be >= 1");
    }
    LinearityReport report;
    report.trials = trials;
    Xoshiro256 rng(rng_seed);

    auto record = [&report](const char* law, const std::string& operands,
                            double residual, std::size_t& counter) {
        ++counter;
        report.worst_residual = std::max(report.worst_residual, residual);
        if (report.counterexamples.size() < 5) {
            report.counterexamples.push_back({law, operands, residual});
        }
    };
    auto check_out_dim = [out_dim](const CVector<R>& w) {
        if (w.dim() != out_dim) {
            throw DimensionError("check_clinear: map produced dimension "
                                 + std::to_string(w.dim()) + ", expected "
                                 + std::to_string(out_dim));
        }
    };

    double tol_d = scalar_field<R>::to_double(tol);
    for (std::size_t t = 0; t < trials; ++t) {
        CVector<R> u = random_cvector<R>(rng, in_dim);
        CVector<R> v = random_cvector<R>(rng, in_dim);
        Complex<R> a = random_scalar<R>(rng);

        CVector<R> fu = f(u);
        CVector<R> fv = f(v);
        check_out_dim(fu);

        double res_add = detail::rel_residual(f(cvector_add(u, v)),
                                              cvector_add(fu, fv));
        if (res_add > tol_d) {
            record("additivity", "u=" + to_string(u) + " v=" + to_string(v),
                   res_add, report.additivity_failures);
        } else {
            report.worst_residual = std::max(report.worst_residual, res_add);
        }

        double res_hom = detail::rel_residual(f(cvector_smul(a, u)),
                                              cvector_smul(a, fu));
        if (res_hom > tol_d) {
            record("homogeneity", "a=" + to_string(a) + " u=" + to_string(u),
                   res_hom, report.homogeneity_failures);
        } else {
            report.worst_residual = std::max(report.worst_residual, res_hom);
        }

        // Real-linearity of g = flatten o f o unflatten on real^{2 in_dim}.
        RVector<R> r1 = random_rvector<R>(rng, 2 * in_dim);
        RVector<R> r2 = random_rvector<R>(rng, 2 * in_dim);
        R c = random_real<R>(rng);
        auto g = [&f](const RVector<R>& r) { return flatten(f(unflatten(r))); };
        double res_tr = std::max(
            detail::rel_residual(unflatten(g(rvector_add(r1, r2))),
                                 unflatten(rvector_add(g(r1), g(r2)))),
            detail::rel_residual(unflatten(g(rvector_smul(c, r1))),
                                 unflatten(rvector_smul(c, g(r1)))));
        if (res_tr > tol_d) {
            record("real_transport", "c=" + scalar_field<R>::to_string(c)
                       + " r=" + to_string(r1),
                   res_tr, report.transport_failures);
        } else {
            report.worst_residual = std::max(report.worst_residual, res_tr);
        }
    }
    return report;
}

} // namespace cxvec
