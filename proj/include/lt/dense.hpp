#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lt/rng.hpp"

// Minimal dense helpers for the small matrices showing up in trial-family
// construction (Gram factorizations, random mixings). Row-major storage.

namespace lt::dense {

using cd = std::complex<double>;

/// Cholesky factor L (lower) of a real symmetric positive definite matrix.
/// Throws if a pivot drops below `pivot_tol` times the largest diagonal.
inline std::vector<double> cholesky_lower(const std::vector<double>& a, int n,
                                          double pivot_tol = 1e-10) {
    double dmax = 0.0;
    for (int i = 0; i < n; ++i) dmax = std::max(dmax, std::abs(a[i * n + i]));
    std::vector<double> L(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[i * n + j];
            for (int k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
            if (i == j) {
                if (s <= pivot_tol * dmax)
                    throw std::runtime_error("cholesky_lower: matrix not positive definite");
                L[i * n + i] = std::sqrt(s);
            } else {
                L[i * n + j] = s / L[j * n + j];
            }
        }
    }
    return L;
}

/// Inverse of a lower-triangular matrix by forward substitution.
inline std::vector<double> invert_lower(const std::vector<double>& L, int n) {
    std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
    for (int c = 0; c < n; ++c) {
        inv[c * n + c] = 1.0 / L[c * n + c];
        for (int r = c + 1; r < n; ++r) {
            double s = 0.0;
            for (int k = c; k < r; ++k) s += L[r * n + k] * inv[k * n + c];
            inv[r * n + c] = -s / L[r * n + r];
        }
    }
    return inv;
}

/// Haar-like random unitary (or real orthogonal) matrix from counter-based
/// Gaussian entries followed by modified Gram-Schmidt.
inline std::vector<cd> random_unitary(int n, std::uint64_t seed, std::uint64_t stream,
                                      bool real_only) {
    std::vector<cd> q(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            std::uint64_t ctr = static_cast<std::uint64_t>(r) * n + c;
            double re = rng::gaussian(seed, 2 * stream, ctr);
            double im = real_only ? 0.0 : rng::gaussian(seed, 2 * stream + 1, ctr);
            q[r * n + c] = cd{re, im};
        }
    for (int r = 0; r < n; ++r) {
        for (int prev = 0; prev < r; ++prev) {
            cd proj{0.0, 0.0};
            for (int c = 0; c < n; ++c) proj += q[r * n + c] * std::conj(q[prev * n + c]);
            for (int c = 0; c < n; ++c) q[r * n + c] -= proj * q[prev * n + c];
        }
        double norm = 0.0;
        for (int c = 0; c < n; ++c) norm += std::norm(q[r * n + c]);
        norm = std::sqrt(norm);
        if (norm < 1e-8) throw std::runtime_error("random_unitary: degenerate sample");
        for (int c = 0; c < n; ++c) q[r * n + c] /= norm;
    }
    return q;
}

}  // namespace lt::dense
