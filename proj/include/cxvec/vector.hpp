#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cxvec/errors.hpp"
#include "cxvec/scalar.hpp"

namespace cxvec {

/// A finite, 1-indexed sequence of T with runtime dimension >= 1.
/// Components are addressed v(1) .. v(dim()), matching the textbook v$i.
template <typename T>
class Vec {
public:
    using value_type = T;

    explicit Vec(std::size_t dim) : xs_(checked_dim(dim)) {}

    Vec(std::initializer_list<T> xs) : xs_(xs) {
        checked_dim(xs_.size());
    }

    static Vec from(std::vector<T> xs) {
        Vec v;
        checked_dim(xs.size());
        v.xs_ = std::move(xs);
        return v;
    }

    std::size_t dim() const { return xs_.size(); }

    const T& operator()(std::size_t i) const {
        check_index(i);
        return xs_[i - 1];
    }
    T& operator()(std::size_t i) {
        check_index(i);
        return xs_[i - 1];
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.xs_ == b.xs_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

private:
    Vec() = default;

    static std::size_t checked_dim(std::size_t n) {
        if (n == 0) {
            throw DimensionError("vector dimension must be >= 1");
        }
        return n;
    }

    void check_index(std::size_t i) const {
        if (i < 1 || i > xs_.size()) {
            throw IndexError("component index " + std::to_string(i)
                             + " outside 1.." + std::to_string(xs_.size()));
        }
    }

    std::vector<T> xs_;
};

template <typename R>
using CVector = Vec<Complex<R>>;

template <typename R>
using RVector = Vec<R>;

// --- Componentwise operator combinators ------------------------------------

/// vector_const k = lambda i. k
template <typename T>
Vec<T> vector_const(const T& k, std::size_t n) {
    if (n == 0) {
        throw DimensionError("vector_const: dimension must be >= 1");
    }
    return Vec<T>::from(std::vector<T>(n, k));
}

/// vector_map f v = lambda i. f(v$i)
template <typename F, typename T>
auto vector_map(F&& f, const Vec<T>& v) {
    using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<U> xs;
    xs.reserve(v.dim());
    for (std::size_t i = 1; i <= v.dim(); ++i) {
        xs.push_back(f(v(i)));
    }
    return Vec<U>::from(std::move(xs));
}

/// vector_map2 f u v = lambda i. f(u$i)(v$i)
template <typename F, typename T, typename S>
auto vector_map2(F&& f, const Vec<T>& u, const Vec<S>& v) {
    if (u.dim() != v.dim()) {
        throw DimensionError("vector_map2: dimensions " + std::to_string(u.dim())
                             + " and " + std::to_string(v.dim()) + " differ");
    }
    using U = std::decay_t<std::invoke_result_t<F&, const T&, const S&>>;
    std::vector<U> xs;
    xs.reserve(u.dim());
    for (std::size_t i = 1; i <= u.dim(); ++i) {
        xs.push_back(f(u(i), v(i)));
    }
    return Vec<U>::from(std::move(xs));
}

// --- Complex vector arithmetic ----------------------------------------------

template <typename R>
CVector<R> cvector_zero(std::size_t n) {
    return vector_const(Complex<R>{}, n);
}

template <typename R>
CVector<R> cvector_add(const CVector<R>& u, const CVector<R>& v) {
    return vector_map2([](const Complex<R>& a, const Complex<R>& b) { return a + b; }, u, v);
}

template <typename R>
CVector<R> cvector_neg(const CVector<R>& v) {
    return vector_map([](const Complex<R>& a) { return -a; }, v);
}

template <typename R>
CVector<R> cvector_sub(const CVector<R>& u, const CVector<R>& v) {
    return cvector_add(u, cvector_neg(v));
}

/// Scalar multiplication, written a % v in the usual notation.
template <typename R>
CVector<R> cvector_smul(const Complex<R>& a, const CVector<R>& v) {
    return vector_map([&a](const Complex<R>& z) { return a * z; }, v);
}

template <typename R>
CVector<R> cvector_cnj(const CVector<R>& v) {
    return vector_map([](const Complex<R>& z) { return cnj(z); }, v);
}

template <typename R>
CVector<R> operator+(const CVector<R>& u, const CVector<R>& v) {
    return cvector_add(u, v);
}
template <typename R>
CVector<R> operator-(const CVector<R>& u, const CVector<R>& v) {
    return cvector_sub(u, v);
}
template <typename R>
CVector<R> operator-(const CVector<R>& v) {
    return cvector_neg(v);
}
template <typename R>
CVector<R> operator*(const Complex<R>& a, const CVector<R>& v) {
    return cvector_smul(a, v);
}

// --- Real/imaginary decomposition and the bivector bijection ----------------

template <typename R>
RVector<R> cvector_re(const CVector<R>& v) {
    return vector_map([](const Complex<R>& z) -> R { return z.re; }, v);
}

template <typename R>
RVector<R> cvector_im(const CVector<R>& v) {
    return vector_map([](const Complex<R>& z) -> R { return z.im; }, v);
}

template <typename R>
CVector<R> complex_vector(const RVector<R>& re, const RVector<R>& im) {
    return vector_map2([](const R& x, const R& y) { return Complex<R>(x, y); }, re, im);
}

template <typename R>
CVector<R> vector_to_cvector(const RVector<R>& r) {
    return vector_map([](const R& x) { return cx(x); }, r);
}

/// flatten v : real^{2N} lists all real parts, then all imaginary parts.
template <typename R>
RVector<R> flatten(const CVector<R>& v) {
    std::vector<R> xs;
    xs.reserve(2 * v.dim());
    for (std::size_t i = 1; i <= v.dim(); ++i) {
        xs.push_back(v(i).re);
    }
    for (std::size_t i = 1; i <= v.dim(); ++i) {
        xs.push_back(v(i).im);
    }
    return RVector<R>::from(std::move(xs));
}

/// unflatten r : complex^N for r of even dimension 2N; inverse of flatten.
template <typename R>
CVector<R> unflatten(const RVector<R>& r) {
    if (r.dim() % 2 != 0) {
        throw DimensionError("unflatten: dimension " + std::to_string(r.dim())
                             + " is odd");
    }
    std::size_t n = r.dim() / 2;
    std::vector<Complex<R>> xs;
    xs.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        xs.emplace_back(r(i), r(n + i));
    }
    return CVector<R>::from(std::move(xs));
}

// --- Real vector arithmetic (flatten targets, wavevectors) ------------------

template <typename R>
RVector<R> rvector_add(const RVector<R>& u, const RVector<R>& v) {
    return vector_map2([](const R& a, const R& b) -> R { return R(a + b); }, u, v);
}

template <typename R>
RVector<R> rvector_sub(const RVector<R>& u, const RVector<R>& v) {
    return vector_map2([](const R& a, const R& b) -> R { return R(a - b); }, u, v);
}

template <typename R>
RVector<R> rvector_neg(const RVector<R>& v) {
    return vector_map([](const R& a) -> R { return R(-a); }, v);
}

template <typename R>
RVector<R> rvector_smul(const R& a, const RVector<R>& v) {
    return vector_map([&a](const R& x) -> R { return R(a * x); }, v);
}

template <typename R>
RVector<R> rvector_zero(std::size_t n) {
    return vector_const(scalar_field<R>::zero(), n);
}

template <typename T>
std::string to_string(const Vec<T>& v) {
    std::string s = "(";
    for (std::size_t i = 1; i <= v.dim(); ++i) {
        if (i > 1) {
            s += ", ";
        }
        using cxvec::to_string;
        if constexpr (std::is_same_v<T, double> || std::is_same_v<T, Rational>) {
            s += scalar_field<T>::to_string(v(i));
        } else {
            s += to_string(v(i));
        }
    }
    return s + ")";
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Vec<T>& v) {
    return os << to_string(v);
}

} // namespace cxvec
