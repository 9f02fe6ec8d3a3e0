#include "lt/constants.hpp"

#include <cmath>
#include <quadmath.h>
#include <stdexcept>

// All closed forms are evaluated in binary128 and rounded to double once, at
// the API boundary. Exact-form strings use ^ for powers and pi for the circle
// constant.

namespace lt::constants {

namespace {

using quad = __float128;

const quad kPiQ = M_PIq;

quad q_pow(quad b, quad e) { return powq(b, e); }
quad q_sigma(int m) { return 2.0Q * q_pow(kPiQ, quad(m) / 2) / tgammaq(quad(m) / 2); }
quad q_factorial(int k) { return tgammaq(quad(k + 1)); }

quad q_Km(int m) {
    return quad(m + 1) * q_pow(quad(m - 1), quad(m - 3) / 2) / (q_sigma(m) * q_factorial(m - 1));
}

quad q_theorem1(int m) {
    return quad(m + 3) / q_pow(q_sigma(m) * q_factorial(m - 1), 2.0Q / (m - 1)) *
           q_pow(quad(m + 1) / (m - 1), quad(m + 1) / (m - 1));
}

quad q_so3_normalized() { return 35.0Q / (2.0Q * q_pow(3.0Q, 2.0Q / 3.0Q)); }

std::string sigma_form(int m) {
    return "2*pi^(" + std::to_string(m) + "/2)/Gamma(" + std::to_string(m) + "/2)";
}

std::string theorem1_form(int m) {
    switch (m) {
        case 3: return "3/pi";
        case 4: return "(35/18)*(25/(6*pi^4))^(1/3)";
        case 5: return "3*sqrt(3/2)/(2*pi)";
        case 6: return "(21/10)*(3^3*7^2/(2*5^4*pi^6))^(1/5)";
        default:
            return "(" + std::to_string(m + 3) + ")/(" + sigma_form(m) + "*" +
                   std::to_string(m - 1) + "!)^(2/" + std::to_string(m - 1) + ")*((" +
                   std::to_string(m + 1) + "/" + std::to_string(m - 1) + ")^(" +
                   std::to_string(m + 1) + "/" + std::to_string(m - 1) + "))";
    }
}

}  // namespace

double sphere_area(int m) {
    if (m < 2) throw std::invalid_argument("sphere_area: m must be >= 2");
    return static_cast<double>(q_sigma(m));
}

EnvelopeBound envelope_Km(int m) {
    if (m < 3) throw std::invalid_argument("envelope_Km: m must be >= 3");
    EnvelopeBound b;
    b.K = static_cast<double>(q_Km(m));
    b.exponent = 0.5 * (m - 1);
    b.threshold = static_cast<double>(m - 1);
    return b;
}

EnvelopeBound density_envelope(const ManifoldId& manifold) {
    using spectra::ManifoldKind;
    EnvelopeBound b;
    if (manifold.kind == ManifoldKind::SO3) {
        quad vol = manifold.measure == Measure::Geometric ? kPiQ * kPiQ : 1.0Q;
        b.K = static_cast<double>(9.0Q * sqrtq(2.0Q) / (4.0Q * vol));
        b.exponent = 1.5;
        b.threshold = 2.0;
        return b;
    }
    int m = manifold.kind == ManifoldKind::SU2 ? 4 : manifold.ambient;
    if (m < 3) throw std::invalid_argument("density_envelope: sphere requires m >= 3");
    quad vol = manifold.measure == Measure::Geometric ? q_sigma(m) : 1.0Q;
    // raw-count envelope sigma_m * K_m, then divided by the measure volume
    b.K = static_cast<double>(q_sigma(m) * q_Km(m) / vol);
    b.exponent = 0.5 * (m - 1);
    b.threshold = static_cast<double>(m - 1);
    return b;
}

ConstantReport theorem1_constant(int m) {
    if (m < 3) throw std::invalid_argument("theorem1_constant: m must be >= 3");
    ConstantReport r;
    r.manifold = ManifoldId::sphere(m, Measure::Geometric);
    r.name = "k_sphere:" + std::to_string(m);
    r.value = static_cast<double>(q_theorem1(m));
    r.exact_form = theorem1_form(m);
    r.measure = Measure::Geometric;
    r.source = Source::Analytic;
    return r;
}

ConstantReport su2_constant() {
    ConstantReport r;
    r.manifold = ManifoldId::su2(Measure::Geometric);
    r.name = "k_su2";
    r.value = static_cast<double>(35.0Q / 18.0Q * cbrtq(25.0Q / (6.0Q * q_pow(kPiQ, 4.0Q))));
    r.exact_form = "(35/18)*(25/(6*pi^4))^(1/3)";
    r.measure = Measure::Geometric;
    r.source = Source::Analytic;
    return r;
}

So3Constants so3_constants() {
    So3Constants c;
    c.normalized.manifold = ManifoldId::so3(Measure::Normalized);
    c.normalized.name = "k_so3";
    c.normalized.value = static_cast<double>(q_so3_normalized());
    c.normalized.exact_form = "35/(2*3^(2/3))";
    c.normalized.measure = Measure::Normalized;
    c.normalized.source = Source::Analytic;

    c.geometric.manifold = ManifoldId::so3(Measure::Geometric);
    c.geometric.name = "k_so3";
    c.geometric.value = static_cast<double>(q_so3_normalized() / q_pow(kPiQ, 4.0Q / 3.0Q));
    c.geometric.exact_form = "35/(2*3^(2/3)*pi^(4/3))";
    c.geometric.measure = Measure::Geometric;
    c.geometric.source = Source::Analytic;
    return c;
}

double classical_L(double gamma, int n) {
    if (gamma < 0 || n < 1) throw std::invalid_argument("classical_L: gamma >= 0, n >= 1");
    quad g = gamma;
    quad num = lgammaq(g + 1);
    quad den = quad(n) * logq(2.0Q) + quad(n) / 2 * logq(kPiQ) + lgammaq(g + quad(n) / 2 + 1);
    return static_cast<double>(expq(num - den));
}

double kn_from_L1n(int n, double L1n) {
    if (n < 1 || L1n <= 0) throw std::invalid_argument("kn_from_L1n: n >= 1, L1n > 0");
    quad nn = n;
    return static_cast<double>(2.0Q / nn * q_pow(1.0Q + nn / 2, (nn + 2) / nn) *
                               q_pow(quad(L1n), 2.0Q / nn));
}

double J(double rho, int m) {
    if (m < 3) throw std::invalid_argument("J: m must be >= 3");
    double lower = std::pow(static_cast<double>(m - 1), 0.5 * (m - 1));
    if (rho <= lower)
        throw std::domain_error("J: rho must exceed (m-1)^((m-1)/2)");
    quad r = rho;
    quad p = quad(m + 1) / (m - 1);
    quad rp = q_pow(r, p);
    quad num = quad(m - 1) * (m - 1) * rp +
               8.0Q * quad(m + 1) * q_pow(quad(m - 1), quad(m + 3) / 4) * sqrtq(r) -
               2.0Q * quad(m + 3) * q_pow(quad(m - 1), quad(m + 1) / 2);
    return static_cast<double>(num / (rp * quad(m + 1) * quad(m + 3)));
}

double J_limit(int m) {
    if (m < 3) throw std::invalid_argument("J_limit: m must be >= 3");
    return static_cast<double>(quad(m - 1) * (m - 1) / (quad(m + 1) * quad(m + 3)));
}

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    rows.push_back({3, theorem1_constant(3), "~1.777", "3*pi/32 ~ 0.2945", "-",
                    "3/pi = 0.95493; often printed rounded up as 0.956"});
    rows.push_back({4, theorem1_constant(4), "~1.645", "-", "-", ""});
    rows.push_back({5, theorem1_constant(5), "~1.755", "-", "0.1728", ""});
    rows.push_back({6, theorem1_constant(6), "~2.009", "-", "-", ""});
    return rows;
}

ConstantReport constant_for(const ManifoldId& manifold) {
    using spectra::ManifoldKind;
    switch (manifold.kind) {
        case ManifoldKind::SO3: {
            auto c = so3_constants();
            return manifold.measure == Measure::Normalized ? c.normalized : c.geometric;
        }
        case ManifoldKind::SU2: {
            if (manifold.measure == Measure::Normalized)
                throw std::invalid_argument(
                    "constant_for: only the geometric-measure SU(2) constant is available");
            return su2_constant();
        }
        case ManifoldKind::Sphere: {
            if (manifold.measure == Measure::Normalized)
                throw std::invalid_argument(
                    "constant_for: sphere constants use the geometric measure");
            return theorem1_constant(manifold.ambient);
        }
    }
    throw std::logic_error("constant_for: bad kind");
}

}  // namespace lt::constants
