#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lt/harmonics.hpp"
#include "lt/spectra.hpp"

namespace lt::quadrature {

using spectra::ManifoldId;

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2q-1.
GaussRule gauss_legendre(int q);

/// Gauss-Chebyshev rule of the second kind: integrates f(t) sqrt(1-t^2) dt
/// over [-1, 1] exactly for polynomial f of degree 2q-1.
GaussRule gauss_chebyshev2(int q);

/// Deterministic product rule on S^2, S^3 (= SU(2)) or SO(3). Weights sum to
/// the measure volume. Polynomial integrands (restricted harmonics and their
/// products) up to the requested degree integrate exactly:
///   S^2   : Gauss-Legendre in cos(theta) x uniform phi
///   S^3   : Gauss-Chebyshev-2 in cos(theta1) (absorbing the sin^2 area
///           factor) x Gauss-Legendre in cos(theta2) x uniform phi
///   SO(3) : Gauss-Legendre in cos(theta) x uniform phi, psi with the Haar
///           normalization
/// Nodes are interior, so Euler-chart singularities never appear.
struct QuadratureRule {
    ManifoldId manifold;
    std::vector<harmonics::SpherePoint> sphere_nodes;  // spheres / SU(2)
    std::vector<harmonics::SO3Point> so3_nodes;        // SO(3)
    std::vector<double> weights;
    int exactness_degree = 0;

    std::size_t size() const { return weights.size(); }
};

QuadratureRule build_rule(const ManifoldId& manifold, int degree);

double integrate(const QuadratureRule& rule,
                 const std::function<double(const harmonics::SpherePoint&)>& f);
double integrate(const QuadratureRule& rule,
                 const std::function<double(const harmonics::SO3Point&)>& f);

struct McResult {
    double value = 0.0;
    double stderr_est = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo surface integral over S^{m-1} (geometric measure): uniform
/// points via normalized Gaussian vectors from the counter-based generator,
/// estimate sigma_m * mean(f) with its standard error. Intended for m >= 5
/// where no deterministic rule is built.
McResult monte_carlo_sphere(int m, long samples, std::uint64_t seed,
                            const std::function<double(const harmonics::SpherePoint&)>& f);

/// Pairwise (cascade) summation; deterministic regardless of chunking.
double pairwise_sum(std::span<const double> values);

}  // namespace lt::quadrature
