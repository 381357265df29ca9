#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace cmax::fft {

using Complex = std::complex<double>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

// Iterative radix-2 Cooley-Tukey; n must be a power of two.
inline void radix2(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const Complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex u = a[i + j];
                const Complex t = a[i + j + len / 2] * w;
                a[i + j] = u + t;
                a[i + j + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
}

// O(n^2) fallback for non-power-of-two sizes; grids here are small.
inline void naive_dft(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            acc += a[j] * std::polar(1.0, sign * 2.0 * M_PI *
                                              static_cast<double>(k * j % n) /
                                              static_cast<double>(n));
        out[k] = acc;
    }
    a = std::move(out);
}

} // namespace detail

/// In-place discrete Fourier transform with the physics sign convention
/// (forward uses exp(-ikx)). The inverse includes the 1/n normalization.
inline void transform_inplace(std::vector<Complex>& a, bool inverse) {
    if (a.size() < 2) return;
    if (is_power_of_two(a.size()))
        detail::radix2(a, inverse);
    else
        detail::naive_dft(a, inverse);
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(a.size());
        for (Complex& c : a) c *= scale;
    }
}

/// Signed wavenumber of bin j on a periodic domain of the given length:
/// k_j = 2 pi m / length with m in [-n/2, n/2).
inline double bin_wavenumber(std::size_t n, std::size_t j, double length) {
    const auto half = n / 2;
    const double m = (j <= half) ? static_cast<double>(j)
                                 : static_cast<double>(j) - static_cast<double>(n);
    return 2.0 * M_PI * m / length;
}

/// d/dx on the periodic grid by Fourier multiplication with ik. The Nyquist
/// bin is zeroed: an odd-order derivative has no consistent sign there.
inline std::vector<Complex> spectral_derivative(const std::vector<Complex>& f,
                                                double length) {
    std::vector<Complex> a = f;
    const std::size_t n = a.size();
    transform_inplace(a, false);
    for (std::size_t j = 0; j < n; ++j) {
        if (n % 2 == 0 && j == n / 2) {
            a[j] = Complex{0.0, 0.0};
            continue;
        }
        a[j] *= Complex{0.0, bin_wavenumber(n, j, length)};
    }
    transform_inplace(a, true);
    return a;
}

} // namespace cmax::fft
