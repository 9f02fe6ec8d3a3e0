#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lt/bigint.hpp"

namespace lt::spectra {

enum class Measure { Normalized, Geometric };

enum class ManifoldKind { Sphere, SU2, SO3 };

/// Identifies one of the supported compact manifolds together with the
/// measure convention. Spheres are indexed by the ambient dimension m,
/// so Sphere(3) is the ordinary 2-sphere (manifold dimension m-1).
struct ManifoldId {
    ManifoldKind kind = ManifoldKind::Sphere;
    int ambient = 3;  // only meaningful for Sphere
    Measure measure = Measure::Geometric;

    static ManifoldId sphere(int m, Measure mu = Measure::Geometric);
    static ManifoldId su2(Measure mu = Measure::Geometric);
    static ManifoldId so3(Measure mu = Measure::Normalized);

    /// Manifold dimension n (m-1 for spheres, 3 for SU(2) and SO(3)).
    int dim() const;

    /// Total mass of the manifold under the chosen measure.
    /// Geometric: surface area sigma_m, vol(SU(2)) = 2 pi^2, vol(SO(3)) = pi^2.
    double volume() const;

    std::string name() const;  // "sphere:m", "su2", "so3"

    bool same_geometry(const ManifoldId& other) const;
};

struct EigenLevel {
    int index;           // level number n (spheres) or l (SO(3))
    double eigenvalue;   // n(n+m-2) or l(l+1); integer-valued
    double multiplicity; // exact while below 2^53
};

/// All nonzero Laplace-Beltrami eigenvalues up to a cutoff, with exact
/// multiplicities. The zero eigenvalue of constants is always excluded.
struct Spectrum {
    ManifoldId manifold;
    double cutoff = 0.0;
    std::vector<EigenLevel> levels;       // sorted by eigenvalue, ascending
    std::vector<double> cumulative;       // cumulative[i] = sum of multiplicities 0..i
    int dim = 0;
    double volume = 0.0;

    double lambda1() const { return levels.front().eigenvalue; }
    double total_count() const { return cumulative.back(); }
};

/// Laplacian eigenvalue on S^{m-1}: n(n+m-2). Exact (integer-valued).
double sphere_eigenvalue(int m, int n);

/// Multiplicity k_{mn} = (2n+m-2) (n+m-3)! / ((m-2)! n!) as an exact integer.
BigUint sphere_multiplicity_exact(int m, int n);
double sphere_multiplicity(int m, int n);

/// Cumulative count of nonzero eigenvalues through level n:
/// m (m+2n-1) (m+n-2)! / (m! n!) - 1. Equals the sum of k_{ml} for l = 1..n.
BigUint sphere_cumulative_count_exact(int m, int n);
double sphere_cumulative_count(int m, int n);

/// SO(3) cumulative count through level n: (4n^3 + 12n^2 + 11n) / 3,
/// the sum of (2l+1)^2 for l = 1..n.
BigUint so3_cumulative_count_exact(int n);
double so3_cumulative_count(int n);

/// All nonzero eigenvalues <= cutoff with exact multiplicities.
/// SU(2) is spectrally identical to Sphere(4); SO(3) has eigenvalues l(l+1)
/// with multiplicity (2l+1)^2. Throws if the cutoff excludes every level.
Spectrum build_spectrum(const ManifoldId& manifold, double cutoff);

/// Evaluable eigenvalue counting function in one of three forms:
///   ExactStep - scale * #{lambda_j < E} over a concrete Spectrum (strict
///               inequality, matching the spectral projection P_E);
///   Envelope  - scale * E^exponent;
///   PaperC    - scale * E^exponent above a threshold, 0 at or below it.
/// `scale` defaults to 1; it carries the envelope coefficient K and, for
/// step functions, the density normalization 1/vol.
struct CountingFunction {
    enum class Form { ExactStep, Envelope, PaperC };

    Form form = Form::Envelope;
    std::shared_ptr<const Spectrum> spectrum;  // ExactStep only
    double scale = 1.0;
    double exponent = 1.0;
    double threshold = 0.0;  // PaperC only
    int domain_dim = 0;

    static CountingFunction exact_step(std::shared_ptr<const Spectrum> s, double scale = 1.0);
    static CountingFunction envelope(double K, double exponent, int domain_dim);
    static CountingFunction paper_c(double threshold, double exponent, int domain_dim,
                                    double scale = 1.0);
};

/// Value of the counting function at E. ExactStep uses strict inequality
/// lambda_j < E and refuses E beyond the spectrum cutoff rather than
/// silently truncating.
double counting_value(const CountingFunction& c, double E);

}  // namespace lt::spectra
