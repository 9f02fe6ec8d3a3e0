#pragma once

#include <string>
#include <vector>

#include "lt/spectra.hpp"

namespace lt::constants {

using spectra::ManifoldId;
using spectra::Measure;

enum class Source { Analytic, NumericInfimum };

/// A derived inequality constant with provenance. `value` is the double
/// rounding of an internal quad-precision evaluation; `exact_form` is the
/// closed radical expression it came from.
struct ConstantReport {
    ManifoldId manifold;
    std::string name;
    double value = 0.0;
    std::string exact_form;
    Measure measure = Measure::Geometric;
    Source source = Source::Analytic;
};

/// Closed-form majorant K * E^exponent of a counting function, zero at or
/// below the threshold.
struct EnvelopeBound {
    double K = 0.0;
    double exponent = 0.0;
    double threshold = 0.0;
};

/// Surface area of S^{m-1}: sigma_m = 2 pi^{m/2} / Gamma(m/2).
double sphere_area(int m);

/// Envelope of the surface-density counting function on S^{m-1}:
/// K_m = (m+1)(m-1)^{(m-3)/2} / (sigma_m (m-1)!), exponent (m-1)/2,
/// vanishing for E <= m-1.
EnvelopeBound envelope_Km(int m);

/// Envelope of the measure-density counting function (count / volume) for
/// any supported manifold; for geometric spheres this is envelope_Km, for
/// SO(3) the coefficient is 9 sqrt(2)/4 divided by the measure volume.
EnvelopeBound density_envelope(const ManifoldId& manifold);

/// Upper bound for the best constant k_{S^{m-1}} (geometric measure):
/// (m+3) / (sigma_m (m-1)!)^{2/(m-1)} * ((m+1)/(m-1))^{(m+1)/(m-1)}.
ConstantReport theorem1_constant(int m);

/// SU(2) constant 35/18 * cbrt(25 / (6 pi^4)) for the non-normalized Haar
/// measure; identical to theorem1_constant(4).
ConstantReport su2_constant();

struct So3Constants {
    ConstantReport normalized;  // 35 / (2 * 3^{2/3})
    ConstantReport geometric;   // 35 / (2 * 3^{2/3} * pi^{4/3})
};
So3Constants so3_constants();

/// Classical sharp constant L^cl_{gamma,n} =
/// Gamma(gamma+1) / (2^n pi^{n/2} Gamma(gamma + n/2 + 1)).
double classical_L(double gamma, int n);

/// k_n = (2/n) (1 + n/2)^{(n+2)/n} L_{1,n}^{2/n}.
double kn_from_L1n(int n, double L1n);

/// The ratio functional J(rho, m) whose infimum over
/// rho > (m-1)^{(m-1)/2} is (m-1)^2 / ((m+1)(m+3)).
double J(double rho, int m);

/// Limit of J(rho, m) as rho -> infinity.
double J_limit(int m);

/// One row of the comparison table for k_{S^{m-1}}: our bound plus
/// literature values kept as static annotations (never recomputed here).
struct Table1Row {
    int m;
    ConstantReport theorem1;
    std::string ilyin;
    std::string ilyin_laptev;
    std::string pan;
    std::string note;
};

/// Rows m = 3..6. The m = 3 entry carries a note: the commonly printed
/// value 0.956 rounds 3/pi = 0.95493 upward at the third decimal.
std::vector<Table1Row> table1();

/// Retrieves the constant appropriate for certifying the inequality on the
/// given manifold and measure (Theorem 1 for spheres, the SU(2) corollary,
/// or the SO(3) constants).
ConstantReport constant_for(const ManifoldId& manifold);

}  // namespace lt::constants
