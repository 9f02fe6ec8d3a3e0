#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lt/constants.hpp"
#include "lt/harmonics.hpp"
#include "lt/spectra.hpp"

namespace lt::verify {

using spectra::ManifoldId;
using spectra::Measure;
using cd = std::complex<double>;

enum class FamilyKind { FullShells, SingleHarmonic, RandomMixture };

/// One orthonormal eigenfunction mode: its level and eigenvalue always, a
/// pointwise evaluator when the manifold has an explicit basis (S^2, S^3,
/// SO(3)) or a zonal frame (higher spheres).
struct BasisMode {
    int level = 0;
    double eigenvalue = 0.0;
    std::function<cd(const harmonics::SpherePoint&)> sphere_eval;
    std::function<cd(const harmonics::SO3Point&)> so3_eval;
};

/// Orthonormal zero-mean trial family given by coefficients over orthonormal
/// eigenfunction modes. Modes never include the constant function, so every
/// family is orthogonal to constants by construction.
struct TrialFamily {
    ManifoldId manifold;
    FamilyKind kind = FamilyKind::FullShells;
    std::string descriptor;
    std::vector<BasisMode> modes;
    std::vector<std::vector<cd>> coeffs;  // row j = expansion of psi_j
    bool pointwise_evaluable = false;
    bool rho_constant = false;
    double rho_value = 0.0;  // meaningful when rho_constant

    std::size_t size() const { return coeffs.size(); }

    /// Spectral gradient energy: sum of eigenvalue * |coefficient|^2.
    double gradient_energy() const;

    /// Largest deviation of the family Gram matrix from the identity.
    double gram_deviation() const;

    double rho(const harmonics::SpherePoint& p) const;
    double rho(const harmonics::SO3Point& p) const;
};

/// All eigenfunctions of levels 1..n_max. rho is constant (the addition
/// identity), equal to the cumulative count over the measure volume.
TrialFamily full_shell_family(const ManifoldId& manifold, int n_max);

/// A single eigenfunction from the given level. For S^2/S^3 the index picks
/// a basis member, for SO(3) a matrix coefficient; for m >= 5 the normalized
/// zonal function about a fixed pole.
TrialFamily single_harmonic_family(const ManifoldId& manifold, int level, int index);

/// Seeded random orthonormal mixing of the spanned eigenfunctions, keeping
/// the first `size` members. Exactly orthonormal by construction.
TrialFamily random_mixture_family(const ManifoldId& manifold,
                                  const std::vector<int>& span_levels, int size,
                                  std::uint64_t seed);

struct InequalityReport {
    std::string family;
    double lhs = 0.0;         // integral of rho^p
    double rhs_energy = 0.0;  // sum of gradient norms
    constants::ConstantReport constant_used;
    double ratio = 0.0;
    bool certified = false;
    double empirical_lower_bound = 0.0;
    double mc_stderr = 0.0;  // 0 for deterministic evaluations
};

struct EvalOptions {
    long mc_samples = 1000000;
    std::uint64_t mc_seed = 8713052274539201ull;
    int quad_degree = 0;  // 0 = choose from the family content
};

/// Evaluates both sides of the inequality. Constant-rho families use the
/// closed form, pointwise families quadrature (S^2, S^3, SO(3)) or Monte
/// Carlo (higher spheres, stderr folded into the certification tolerance).
InequalityReport evaluate_inequality(const TrialFamily& family,
                                     const constants::ConstantReport& constant,
                                     const EvalOptions& opts = {});

/// lhs routes exposed separately so closed form and quadrature can be
/// cross-checked against each other.
double lhs_closed_form(const TrialFamily& family);
double lhs_quadrature(const TrialFamily& family, int degree = 0);

enum class ConstantSource { Analytic, NumericInfimum };

struct SweepResult {
    std::vector<InequalityReport> reports;
    double max_ratio = 0.0;
    std::string max_ratio_family;
    bool all_certified = false;
};

/// Evaluates every family against the selected constant. An uncertified
/// family aborts with a diagnostic: that would contradict the proven bound.
SweepResult sweep(const ManifoldId& manifold, const std::vector<TrialFamily>& families,
                  ConstantSource source, const EvalOptions& opts = {});

/// The default family set: shells, single harmonics and seeded random
/// mixtures sized to the manifold.
std::vector<TrialFamily> default_families(const ManifoldId& manifold,
                                          const std::vector<std::uint64_t>& seeds = {101, 202,
                                                                                     303});

}  // namespace lt::verify
