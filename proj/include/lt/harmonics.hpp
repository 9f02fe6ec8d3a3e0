#pragma once

#include <complex>
#include <vector>

namespace lt::harmonics {

/// Point on S^{m-1} as a Cartesian unit vector (|x| = 1 within 1e-12).
struct SpherePoint {
    std::vector<double> x;
};

/// Point on SO(3) in z-y-z Euler angles, phi/psi in [0, 2pi), theta in [0, pi].
struct SO3Point {
    double phi = 0.0;
    double theta = 0.0;
    double psi = 0.0;

    bool chart_singular() const { return theta <= 0.0 || theta >= 3.14159265358979323846; }
};

/// Gegenbauer polynomial C_n^(alpha)(t) by the three-term recurrence,
/// C_0 = 1, C_1 = 2 alpha t. Requires alpha > -1/2 and |t| <= 1.
double gegenbauer(double alpha, int n, double t);

/// C_n^(alpha)(1) = binom(n + 2 alpha - 1, n).
double gegenbauer_at_one(double alpha, int n);

/// Zonal (reproducing) kernel of the degree-n eigenspace on S^{m-1} as a
/// function of cos of the geodesic angle:
/// Z_n(t) = (k_{mn}/sigma_m) C_n^{(m-2)/2}(t) / C_n^{(m-2)/2}(1).
/// The circle m = 2 uses the cosine kernel cos(n theta)/pi.
double zonal_kernel_cos(int m, int n, double t);
double zonal_kernel(int m, int n, const SpherePoint& x, const SpherePoint& y);

/// Real orthonormal spherical harmonic of degree n on S^2, normalized with
/// respect to the surface measure. idx runs 1..2n+1: idx = n+1 is the zonal
/// member, lower indices are sin-type orders, higher are cos-type.
double sphere_basis_S2(int n, int idx, const SpherePoint& p);

/// Real orthonormal hyperspherical harmonic of degree n on S^3 (surface
/// measure). idx runs 1..(n+1)^2, grouped by the S^2 degree l = 0..n with
/// 2l+1 members each.
double sphere_basis_S3(int n, int idx, const SpherePoint& p);

/// Wigner little-d matrix d^l(theta), (2l+1)x(2l+1), rows and columns in
/// i, j = -l..l order. Boundary rows/columns use the closed single-term
/// product form; the interior is filled by the three-term recurrence in l.
/// Convention anchor: d^1_{00} = cos(theta), d^1_{10} = -sin(theta)/sqrt(2),
/// d^l_{ll} = cos^{2l}(theta/2), and d^l_{ij} = (-1)^{i-j} d^l_{ji}.
std::vector<double> wigner_d_matrix(int l, double theta);

double wigner_little_d(int l, int i, int j, double theta);

/// Wigner D-matrix coefficient, z-y-z convention:
/// D^l_{ij}(phi, theta, psi) = exp(-i i phi) d^l_{ij}(theta) exp(-i j psi).
std::complex<double> wigner_D(int l, int i, int j, const SO3Point& g);

/// Spectral gradient energy of an orthonormal family expanded over
/// eigenfunction modes: sum over functions and modes of
/// eigenvalue * |coefficient|^2 (Green's identity, no differentiation).
double gradient_energy(const std::vector<double>& mode_eigenvalues,
                       const std::vector<std::vector<std::complex<double>>>& coefficients);

}  // namespace lt::harmonics
