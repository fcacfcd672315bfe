#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

#include "cxvec/scalar.hpp"
#include "cxvec/vector.hpp"
#include "cxvec/matrix.hpp"

namespace cxvec {

/// splitmix64, used to expand a 64-bit seed into generator state:
///   z = (s += 0x9E3779B97F4A7C15)
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256**, the xorshift-family generator behind every randomized
/// suite. Update equations (rotl(x,k) is a 64-bit left rotation):
///   result = rotl(s1 * 5, 7) * 9
///   t = s1 << 17
///   s2 ^= s0;  s3 ^= s1;  s1 ^= s2;  s0 ^= s3;  s2 ^= t
///   s3 = rotl(s3, 45)
/// State is seeded from splitmix64 so that any 64-bit seed is usable.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& s : state_) {
            s = sm.next();
        }
    }

    std::uint64_t next() {
        std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [lo, hi], inclusive.
    long integer(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

/// Random scalar draw for property trials. Exact backend: small fractions
/// (numerator in [-12, 12], denominator in [1, 12]) so products of a few
/// operands stay small. Floating backend: uniform in [-4, 4].
template <typename R>
R random_real(Xoshiro256& rng) {
    if constexpr (is_exact_backend_v<R>) {
        return scalar_field<R>::from_ratio(rng.integer(-12, 12), rng.integer(1, 12));
    } else {
        return rng.uniform(-4.0, 4.0);
    }
}

template <typename R>
Complex<R> random_scalar(Xoshiro256& rng) {
    return Complex<R>(random_real<R>(rng), random_real<R>(rng));
}

template <typename R>
Complex<R> random_nonzero_scalar(Xoshiro256& rng) {
    for (;;) {
        Complex<R> z = random_scalar<R>(rng);
        if (z != Complex<R>{}) {
            return z;
        }
    }
}

template <typename R>
CVector<R> random_cvector(Xoshiro256& rng, std::size_t dim) {
    CVector<R> v = cvector_zero<R>(dim);
    for (std::size_t i = 1; i <= dim; ++i) {
        v(i) = random_scalar<R>(rng);
    }
    return v;
}

template <typename R>
CVector<R> random_nonzero_cvector(Xoshiro256& rng, std::size_t dim) {
    for (;;) {
        CVector<R> v = random_cvector<R>(rng, dim);
        if (v != cvector_zero<R>(dim)) {
            return v;
        }
    }
}

template <typename R>
RVector<R> random_rvector(Xoshiro256& rng, std::size_t dim) {
    RVector<R> v = rvector_zero<R>(dim);
    for (std::size_t i = 1; i <= dim; ++i) {
        v(i) = random_real<R>(rng);
    }
    return v;
}

template <typename R>
CMatrix<R> random_cmatrix(Xoshiro256& rng, std::size_t rows, std::size_t cols) {
    CMatrix<R> m(rows, cols);
    for (std::size_t i = 1; i <= rows; ++i) {
        for (std::size_t j = 1; j <= cols; ++j) {
            m(i, j) = random_scalar<R>(rng);
        }
    }
    return m;
}

} // namespace cxvec
