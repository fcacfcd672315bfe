#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "cxvec/errors.hpp"

namespace cxvec {

/// Exact scalar backend: arbitrary-precision rationals kept in canonical
/// form (reduced fraction, positive denominator) by GMP.
using Rational = mpq_class;

/// Backend traits. A backend is either exact (identities are checked with
/// zero residual) or floating (binary64, identities hold up to tolerance).
template <typename R>
struct scalar_field;

template <>
struct scalar_field<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long n) { return static_cast<double>(n); }
    static double from_ratio(long num, long den) {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double abs(double x) { return std::fabs(x); }
    static double to_double(double x) { return x; }
    static std::string to_string(double x) {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    }
};

template <>
struct scalar_field<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static Rational from_ratio(long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    static Rational abs(const Rational& x) { return ::abs(x); }
    static double to_double(const Rational& x) { return x.get_d(); }
    static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <typename R>
inline constexpr bool is_exact_backend_v = scalar_field<R>::exact;

/// A complex number over the scalar backend R. Both parts share one
/// backend; mixing backends is unrepresentable by construction.
template <typename R>
struct Complex {
    R re{};
    R im{};

    Complex() = default;
    Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Complex& a, const Complex& b) {
        return !(a == b);
    }
};

/// Embedding of the reals: cx(r) = r + 0i.
template <typename R>
Complex<R> cx(R r) {
    return Complex<R>(std::move(r), scalar_field<R>::zero());
}

template <typename R>
Complex<R> imaginary_unit() {
    return Complex<R>(scalar_field<R>::zero(), scalar_field<R>::one());
}

template <typename R>
Complex<R> operator+(const Complex<R>& a, const Complex<R>& b) {
    return Complex<R>(R(a.re + b.re), R(a.im + b.im));
}

template <typename R>
Complex<R> operator-(const Complex<R>& a, const Complex<R>& b) {
    return Complex<R>(R(a.re - b.re), R(a.im - b.im));
}

template <typename R>
Complex<R> operator-(const Complex<R>& a) {
    return Complex<R>(R(-a.re), R(-a.im));
}

template <typename R>
Complex<R> operator*(const Complex<R>& a, const Complex<R>& b) {
    return Complex<R>(R(a.re * b.re - a.im * b.im),
                      R(a.re * b.im + a.im * b.re));
}

template <typename R>
Complex<R> operator/(const Complex<R>& a, const Complex<R>& b) {
    R d(b.re * b.re + b.im * b.im);
    return Complex<R>(R((a.re * b.re + a.im * b.im) / d),
                      R((a.im * b.re - a.re * b.im) / d));
}

template <typename R>
Complex<R> cnj(const Complex<R>& z) {
    return Complex<R>(z.re, R(-z.im));
}

/// |z| = sqrt(re^2 + im^2). Floating backend only: the exact backend has
/// no square root.
inline double modulus(const Complex<double>& z) {
    return std::hypot(z.re, z.im);
}

/// Reads a complex number known to be real back as a real. The imaginary
/// part must not exceed tol (tol = 0 on the exact backend).
template <typename R>
R real_of_complex(const Complex<R>& z, const R& tol) {
    R mag = scalar_field<R>::abs(z.im);
    if (mag > tol) {
        throw NotRealError("real_of_complex: imaginary part "
                               + scalar_field<R>::to_string(z.im)
                               + " exceeds tolerance "
                               + scalar_field<R>::to_string(tol),
                           scalar_field<R>::to_double(mag));
    }
    return z.re;
}

inline std::complex<double> to_std(const Complex<double>& z) {
    return {z.re, z.im};
}

inline Complex<double> from_std(const std::complex<double>& z) {
    return {z.real(), z.imag()};
}

/// cos(a+bi) = cos a cosh b - i sin a sinh b. Floating backend only.
inline Complex<double> ccos(const Complex<double>& z) {
    Complex<double> w = from_std(std::cos(to_std(z)));
    if (!std::isfinite(w.re) || !std::isfinite(w.im)) {
        throw OverflowError("ccos: result not finite (|Im z| too large)");
    }
    return w;
}

/// Principal-branch complex arccosine: acos(z) = pi/2 + i ln(iz + sqrt(1-z^2))
/// with principal square root and logarithm. For real z in [-1,1] the result
/// is real in [0, pi]. Floating backend only.
inline Complex<double> cacs(const Complex<double>& z) {
    return from_std(std::acos(to_std(z)));
}

/// Unit phase factor: cis(theta) = cos theta + i sin theta.
inline Complex<double> cis(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

template <typename R>
std::string to_string(const Complex<R>& z) {
    return scalar_field<R>::to_string(z.re) + (z.im < scalar_field<R>::zero() ? "-" : "+")
           + scalar_field<R>::to_string(scalar_field<R>::abs(z.im)) + "i";
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Complex<R>& z) {
    return os << to_string(z);
}

} // namespace cxvec
