#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "cxvec/errors.hpp"
#include "cxvec/scalar.hpp"
#include "cxvec/vector.hpp"

namespace cxvec {

namespace detail {

inline void require_dim3(std::size_t d, const char* who) {
    if (d != 3) {
        throw DimensionError(std::string(who) + ": dimension must be 3, got "
                             + std::to_string(d));
    }
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* who) {
    if (a != b) {
        throw DimensionError(std::string(who) + ": dimensions "
                             + std::to_string(a) + " and " + std::to_string(b)
                             + " differ");
    }
}

} // namespace detail

/// Cross product of two complex 3-vectors:
/// (u2 v3 - u3 v2, u3 v1 - u1 v3, u1 v2 - u2 v1).
template <typename R>
CVector<R> ccross(const CVector<R>& u, const CVector<R>& v) {
    detail::require_dim3(u.dim(), "ccross");
    detail::require_dim3(v.dim(), "ccross");
    return CVector<R>{u(2) * v(3) - u(3) * v(2),
                      u(3) * v(1) - u(1) * v(3),
                      u(1) * v(2) - u(2) * v(1)};
}

/// Inner product sum_i u$i * cnj(v$i); conjugate-linear in the second slot.
template <typename R>
Complex<R> cdot(const CVector<R>& u, const CVector<R>& v) {
    detail::require_same_dim(u.dim(), v.dim(), "cdot");
    Complex<R> acc{};
    for (std::size_t i = 1; i <= u.dim(); ++i) {
        acc = acc + u(i) * cnj(v(i));
    }
    return acc;
}

/// Squared norm: the real part of v . v, which has zero imaginary part by
/// the symmetry of the sum, so no tolerance check is needed.
template <typename R>
R cnorm2(const CVector<R>& v) {
    return cdot(v, v).re;
}

/// Norm = sqrt(cnorm2). Floating backend only.
inline double cnorm(const CVector<double>& v) {
    return std::sqrt(cnorm2(v));
}

/// Exact orthogonality: u . v is exactly zero.
template <typename R>
bool corthogonal(const CVector<R>& u, const CVector<R>& v) {
    return cdot(u, v) == Complex<R>{};
}

/// Tolerance orthogonality: |u . v| <= tol * max(1, |u| |v|).
inline bool corthogonal(const CVector<double>& u, const CVector<double>& v,
                        double tol) {
    double scale = std::max(1.0, cnorm(u) * cnorm(v));
    return modulus(cdot(u, v)) <= tol * scale;
}

/// Exact collinearity: one vector is a complex multiple of the other, which
/// for vectors over a field is the vanishing of every 2x2 minor.
template <typename R>
bool collinear_cvectors(const CVector<R>& u, const CVector<R>& v) {
    detail::require_same_dim(u.dim(), v.dim(), "collinear_cvectors");
    for (std::size_t i = 1; i <= u.dim(); ++i) {
        for (std::size_t j = i + 1; j <= u.dim(); ++j) {
            if (u(i) * v(j) - u(j) * v(i) != Complex<R>{}) {
                return false;
            }
        }
    }
    return true;
}

/// Tolerance collinearity, decided through the Cauchy-Schwarz equality
/// residual: | |u . v| - |u| |v| | <= tol * (1 + |u| |v|).
inline bool collinear_cvectors(const CVector<double>& u,
                               const CVector<double>& v, double tol) {
    detail::require_same_dim(u.dim(), v.dim(), "collinear_cvectors");
    double nn = cnorm(u) * cnorm(v);
    return std::fabs(modulus(cdot(u, v)) - nn) <= tol * (1.0 + nn);
}

/// Angle between complex vectors:
///   pi/2 when either input is the zero vector,
///   cacs((x . y) / (|x| |y|)) otherwise.
/// Cauchy-Schwarz bounds the cacs argument by modulus 1; any excess is
/// rounding and is pulled back onto the unit circle so that real-collinear
/// inputs get a real angle.
inline Complex<double> cvector_angle(const CVector<double>& x,
                                     const CVector<double>& y) {
    detail::require_same_dim(x.dim(), y.dim(), "cvector_angle");
    if (x == cvector_zero<double>(x.dim()) || y == cvector_zero<double>(y.dim())) {
        return cx(std::acos(-1.0) / 2.0);
    }
    Complex<double> q = cdot(x, y) / cx(cnorm(x) * cnorm(y));
    double m = modulus(q);
    if (m > 1.0) {
        q = q / cx(m);
    }
    return cacs(q);
}

/// cbasis k = vector_to_cvector(basis k): component k is 1, the rest 0.
template <typename R>
CVector<R> cbasis(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw IndexError("cbasis: index " + std::to_string(k) + " outside 1.."
                         + std::to_string(n));
    }
    CVector<R> v = cvector_zero<R>(n);
    v(k) = cx(scalar_field<R>::one());
    return v;
}

// --- Real 3-vector companions (wavevector geometry) --------------------------

template <typename R>
R dot(const RVector<R>& u, const RVector<R>& v) {
    detail::require_same_dim(u.dim(), v.dim(), "dot");
    R acc = scalar_field<R>::zero();
    for (std::size_t i = 1; i <= u.dim(); ++i) {
        acc = R(acc + u(i) * v(i));
    }
    return acc;
}

template <typename R>
RVector<R> cross(const RVector<R>& u, const RVector<R>& v) {
    detail::require_dim3(u.dim(), "cross");
    detail::require_dim3(v.dim(), "cross");
    return RVector<R>{R(u(2) * v(3) - u(3) * v(2)),
                      R(u(3) * v(1) - u(1) * v(3)),
                      R(u(1) * v(2) - u(2) * v(1))};
}

inline double norm(const RVector<double>& v) {
    return std::sqrt(dot(v, v));
}

} // namespace cxvec
