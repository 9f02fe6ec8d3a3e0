#include "lt/harmonics.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lt/constants.hpp"
#include "lt/spectra.hpp"

namespace lt::harmonics {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_unit(const SpherePoint& p, int m) {
    if (static_cast<int>(p.x.size()) != m)
        throw std::invalid_argument("SpherePoint: expected ambient dimension " +
                                    std::to_string(m));
    double norm2 = 0.0;
    for (double c : p.x) norm2 += c * c;
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("SpherePoint: coordinates are not a unit vector");
}

double dot(const SpherePoint& a, const SpherePoint& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * b.x[i];
    // guard tiny excursions outside [-1,1] from rounding
    return std::max(-1.0, std::min(1.0, s));
}

// Fully normalized associated Legendre values Q_n^k(t) such that
// Y_n^0 = Q_n^0 and Y_n^{k,cos/sin} = sqrt(2) Q_n^k cos/sin(k phi) are
// orthonormal on S^2. Stable upward recurrence in n.
double normalized_alp(int n, int k, double t) {
    double somx2 = std::sqrt(std::max(0.0, 1.0 - t * t));
    double qkk = std::sqrt(1.0 / (4.0 * kPi));  // Q_0^0
    for (int i = 1; i <= k; ++i) qkk *= somx2 * std::sqrt((2.0 * i + 1.0) / (2.0 * i));
    if (n == k) return qkk;
    double qk1 = std::sqrt(2.0 * k + 3.0) * t * qkk;  // Q_{k+1}^k
    if (n == k + 1) return qk1;
    double qprev = qkk, qcur = qk1;
    for (int j = k + 2; j <= n; ++j) {
        double a = std::sqrt((4.0 * j * j - 1.0) / (static_cast<double>(j) * j - k * k));
        double b = std::sqrt(((2.0 * j + 1.0) * (j - 1.0 + k) * (j - 1.0 - k)) /
                             ((2.0 * j - 3.0) * (static_cast<double>(j) * j - k * k)));
        double qnext = a * t * qcur - b * qprev;
        qprev = qcur;
        qcur = qnext;
    }
    return qcur;
}

double sphere_basis_S2_angles(int n, int idx, double theta, double phi) {
    if (n < 0 || idx < 1 || idx > 2 * n + 1)
        throw std::invalid_argument("sphere_basis_S2: index out of range");
    int order = idx - (n + 1);  // -n..n; negative = sin-type
    int k = std::abs(order);
    double q = normalized_alp(n, k, std::cos(theta));
    if (order == 0) return q;
    double c = std::sqrt(2.0) * q;
    return order > 0 ? c * std::cos(k * phi) : c * std::sin(k * phi);
}

// radial part of the S^3 hyperspherical harmonic:
// N_{nl} sin^l(theta1) C_{n-l}^{(l+1)}(cos(theta1))
double s3_radial(int n, int l, double theta1) {
    double log_norm2 = (2.0 * l + 1.0) * std::log(2.0) + std::log(n + 1.0) +
                       std::lgamma(n - l + 1.0) + 2.0 * std::lgamma(l + 1.0) - std::log(kPi) -
                       std::lgamma(n + l + 2.0);
    double norm = std::exp(0.5 * log_norm2);
    return norm * std::pow(std::sin(theta1), l) * gegenbauer(l + 1.0, n - l, std::cos(theta1));
}

struct S3Angles {
    double theta1, theta2, phi;
};

S3Angles s3_angles(const SpherePoint& p) {
    // x = (sin t1 sin t2 cos phi, sin t1 sin t2 sin phi, sin t1 cos t2, cos t1)
    double t1 = std::acos(std::max(-1.0, std::min(1.0, p.x[3])));
    double s1 = std::sin(t1);
    double t2 = s1 > 1e-300 ? std::acos(std::max(-1.0, std::min(1.0, p.x[2] / s1))) : 0.0;
    double phi = std::atan2(p.x[1], p.x[0]);
    return {t1, t2, phi};
}

}  // namespace

double gegenbauer(double alpha, int n, double t) {
    if (alpha <= -0.5) throw std::invalid_argument("gegenbauer: alpha must exceed -1/2");
    if (n < 0) throw std::invalid_argument("gegenbauer: n must be >= 0");
    if (n > 10000) throw std::invalid_argument("gegenbauer: recurrence unstable for n > 10^4");
    if (std::abs(t) > 1.0 + 1e-12) throw std::invalid_argument("gegenbauer: t outside [-1,1]");
    if (n == 0) return 1.0;
    double cm1 = 1.0;
    double c = 2.0 * alpha * t;
    for (int k = 2; k <= n; ++k) {
        double next = (2.0 * t * (k + alpha - 1.0) * c - (k + 2.0 * alpha - 2.0) * cm1) / k;
        cm1 = c;
        c = next;
    }
    return c;
}

double gegenbauer_at_one(double alpha, int n) {
    // (2 alpha)_n / n!
    double v = 1.0;
    for (int k = 0; k < n; ++k) v *= (2.0 * alpha + k) / (k + 1.0);
    return v;
}

double zonal_kernel_cos(int m, int n, double t) {
    if (m < 2 || n < 1) throw std::invalid_argument("zonal_kernel: m >= 2, n >= 1");
    if (m == 2) return std::cos(n * std::acos(std::max(-1.0, std::min(1.0, t)))) / kPi;
    // kernel evaluations sit in Monte Carlo hot loops; cache the (m, n) scale
    thread_local std::vector<std::pair<long, double>> cache;
    const long key = 1000L * m + n;
    double scale = 0.0;
    for (const auto& entry : cache)
        if (entry.first == key) {
            scale = entry.second;
            break;
        }
    double alpha = 0.5 * (m - 2);
    if (scale == 0.0) {
        scale = spectra::sphere_multiplicity(m, n) /
                (constants::sphere_area(m) * gegenbauer_at_one(alpha, n));
        cache.emplace_back(key, scale);
    }
    return scale * gegenbauer(alpha, n, t);
}

double zonal_kernel(int m, int n, const SpherePoint& x, const SpherePoint& y) {
    check_unit(x, m);
    check_unit(y, m);
    return zonal_kernel_cos(m, n, dot(x, y));
}

double sphere_basis_S2(int n, int idx, const SpherePoint& p) {
    check_unit(p, 3);
    double theta = std::acos(std::max(-1.0, std::min(1.0, p.x[2])));
    double phi = std::atan2(p.x[1], p.x[0]);
    return sphere_basis_S2_angles(n, idx, theta, phi);
}

double sphere_basis_S3(int n, int idx, const SpherePoint& p) {
    check_unit(p, 4);
    if (n < 0 || idx < 1 || idx > (n + 1) * (n + 1))
        throw std::invalid_argument("sphere_basis_S3: index out of range");
    // group by S^2 degree l: block l occupies indices l^2+1 .. (l+1)^2
    int l = static_cast<int>(std::sqrt(idx - 1.0));
    while ((l + 1) * (l + 1) < idx) ++l;
    while (l * l >= idx) --l;
    int sub = idx - l * l;  // 1..2l+1
    auto a = s3_angles(p);
    return s3_radial(n, l, a.theta1) * sphere_basis_S2_angles(l, sub, a.theta2, a.phi);
}

std::vector<double> wigner_d_matrix(int l, double theta) {
    if (l < 0) throw std::invalid_argument("wigner_d_matrix: l must be >= 0");
    const double c = std::cos(theta);
    const double ch = std::cos(0.5 * theta);
    const double sh = std::sin(0.5 * theta);

    auto idx = [](int ll, int i, int j) {
        return static_cast<std::size_t>((i + ll) * (2 * ll + 1) + (j + ll));
    };

    std::vector<double> prev2{1.0};  // d^0
    if (l == 0) return prev2;

    std::vector<double> prev(9);
    {
        const double s = std::sin(theta);
        // d^1, rows/cols in order -1, 0, +1
        prev[idx(1, -1, -1)] = 0.5 * (1.0 + c);
        prev[idx(1, -1, 0)] = s / std::sqrt(2.0);
        prev[idx(1, -1, 1)] = 0.5 * (1.0 - c);
        prev[idx(1, 0, -1)] = -s / std::sqrt(2.0);
        prev[idx(1, 0, 0)] = c;
        prev[idx(1, 0, 1)] = s / std::sqrt(2.0);
        prev[idx(1, 1, -1)] = 0.5 * (1.0 - c);
        prev[idx(1, 1, 0)] = -s / std::sqrt(2.0);
        prev[idx(1, 1, 1)] = 0.5 * (1.0 + c);
    }
    if (l == 1) return prev;

    // closed single-term form for the boundary frame |i| = ll or |j| = ll
    auto boundary = [&](int ll, int i, int j) {
        double lb = 0.5 * (std::lgamma(2.0 * ll + 1.0) - std::lgamma(ll + j + 1.0) -
                           std::lgamma(ll - j + 1.0));
        if (i == ll)
            return ((ll - j) % 2 ? -1.0 : 1.0) * std::exp(lb) * std::pow(ch, ll + j) *
                   std::pow(sh, ll - j);
        if (i == -ll)
            return std::exp(lb) * std::pow(ch, ll - j) * std::pow(sh, ll + j);
        // columns: use d^l_{ij} = (-1)^{i-j} d^l_{ji}
        double lbi = 0.5 * (std::lgamma(2.0 * ll + 1.0) - std::lgamma(ll + i + 1.0) -
                            std::lgamma(ll - i + 1.0));
        if (j == ll)
            return std::exp(lbi) * std::pow(ch, ll + i) * std::pow(sh, ll - i);
        // j == -ll
        return ((ll - i) % 2 ? -1.0 : 1.0) * std::exp(lbi) * std::pow(ch, ll - i) *
               std::pow(sh, ll + i);
    };

    for (int ll = 2; ll <= l; ++ll) {
        std::vector<double> cur((2 * ll + 1) * (2 * ll + 1));
        for (int i = -ll; i <= ll; ++i) {
            for (int j = -ll; j <= ll; ++j) {
                if (std::abs(i) == ll || std::abs(j) == ll) {
                    cur[idx(ll, i, j)] = boundary(ll, i, j);
                    continue;
                }
                double denom = std::sqrt(static_cast<double>(ll * ll - i * i) *
                                         (static_cast<double>(ll) * ll - j * j));
                double coeff = ll * (2.0 * ll - 1.0) / denom;
                double term1 = (c - static_cast<double>(i) * j / (ll * (ll - 1.0))) *
                               prev[idx(ll - 1, i, j)];
                double term2 = 0.0;
                if (std::abs(i) <= ll - 2 && std::abs(j) <= ll - 2) {
                    double num2 = std::sqrt((static_cast<double>(ll - 1) * (ll - 1) - i * i) *
                                            (static_cast<double>(ll - 1) * (ll - 1) - j * j));
                    term2 = num2 / ((ll - 1.0) * (2.0 * ll - 1.0)) * prev2[idx(ll - 2, i, j)];
                }
                cur[idx(ll, i, j)] = coeff * (term1 - term2);
            }
        }
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

double wigner_little_d(int l, int i, int j, double theta) {
    if (std::abs(i) > l || std::abs(j) > l)
        throw std::invalid_argument("wigner_little_d: |i|, |j| must be <= l");
    auto m = wigner_d_matrix(l, theta);
    return m[static_cast<std::size_t>((i + l) * (2 * l + 1) + (j + l))];
}

std::complex<double> wigner_D(int l, int i, int j, const SO3Point& g) {
    double d = wigner_little_d(l, i, j, g.theta);
    std::complex<double> pi_phase = std::polar(1.0, -static_cast<double>(i) * g.phi);
    std::complex<double> pj_phase = std::polar(1.0, -static_cast<double>(j) * g.psi);
    return pi_phase * d * pj_phase;
}

double gradient_energy(const std::vector<double>& mode_eigenvalues,
                       const std::vector<std::vector<std::complex<double>>>& coefficients) {
    double total = 0.0;
    for (const auto& row : coefficients) {
        if (row.size() != mode_eigenvalues.size())
            throw std::invalid_argument("gradient_energy: coefficient/mode size mismatch");
        for (std::size_t k = 0; k < row.size(); ++k)
            total += mode_eigenvalues[k] * std::norm(row[k]);
    }
    return total;
}

}  // namespace lt::harmonics
