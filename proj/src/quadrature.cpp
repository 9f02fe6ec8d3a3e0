#include "lt/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lt/rng.hpp"

namespace lt::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kMaxDegree = 256;

}  // namespace

GaussRule gauss_legendre(int q) {
    if (q < 1) throw std::invalid_argument("gauss_legendre: q must be >= 1");
    GaussRule r;
    r.nodes.resize(q);
    r.weights.resize(q);
    for (int k = 0; k < (q + 1) / 2; ++k) {
        // Newton iteration from the Chebyshev-like initial guess
        double x = std::cos(kPi * (k + 0.75) / (q + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= q; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = q * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[k] = -x;
        r.weights[k] = w;
        r.nodes[q - 1 - k] = x;
        r.weights[q - 1 - k] = w;
    }
    if (q % 2 == 1) r.nodes[q / 2] = 0.0;
    return r;
}

GaussRule gauss_chebyshev2(int q) {
    if (q < 1) throw std::invalid_argument("gauss_chebyshev2: q must be >= 1");
    GaussRule r;
    r.nodes.resize(q);
    r.weights.resize(q);
    for (int k = 1; k <= q; ++k) {
        double a = kPi * k / (q + 1.0);
        r.nodes[k - 1] = std::cos(a);
        r.weights[k - 1] = kPi / (q + 1.0) * std::sin(a) * std::sin(a);
    }
    return r;
}

QuadratureRule build_rule(const ManifoldId& manifold, int degree) {
    using spectra::ManifoldKind;
    using spectra::Measure;
    if (degree < 1) throw std::invalid_argument("build_rule: degree must be >= 1");
    if (degree > kMaxDegree)
        throw std::invalid_argument("build_rule: degree beyond table (max " +
                                    std::to_string(kMaxDegree) + ")");

    QuadratureRule rule;
    rule.manifold = manifold;
    rule.exactness_degree = degree;

    const int q = degree + 1;
    const int nphi = 2 * (degree + 1);
    const double norm = manifold.measure == Measure::Normalized
                            ? 1.0 / ManifoldId{manifold.kind, manifold.ambient,
                                               Measure::Geometric}
                                        .volume()
                            : 1.0;

    if (manifold.kind == ManifoldKind::SO3) {
        GaussRule gl = gauss_legendre(q);
        // d(normalized Haar) = sin(theta)/(8 pi^2) dphi dtheta dpsi
        double haar = (manifold.measure == Measure::Normalized ? 1.0 : kPi * kPi) /
                      (8.0 * kPi * kPi);
        for (int a = 0; a < nphi; ++a) {
            double phi = 2.0 * kPi * (a + 0.5) / nphi;
            for (int i = 0; i < q; ++i) {
                double theta = std::acos(gl.nodes[i]);
                for (int b = 0; b < nphi; ++b) {
                    double psi = 2.0 * kPi * (b + 0.5) / nphi;
                    rule.so3_nodes.push_back({phi, theta, psi});
                    rule.weights.push_back(gl.weights[i] * (2.0 * kPi / nphi) *
                                           (2.0 * kPi / nphi) * haar);
                }
            }
        }
        return rule;
    }

    int m = manifold.kind == ManifoldKind::SU2 ? 4 : manifold.ambient;
    if (m == 3) {
        GaussRule gl = gauss_legendre(q);
        for (int i = 0; i < q; ++i) {
            double t = gl.nodes[i];
            double s = std::sqrt(1.0 - t * t);
            for (int a = 0; a < nphi; ++a) {
                double phi = 2.0 * kPi * (a + 0.5) / nphi;
                rule.sphere_nodes.push_back(
                    {{s * std::cos(phi), s * std::sin(phi), t}});
                rule.weights.push_back(gl.weights[i] * (2.0 * kPi / nphi) * norm);
            }
        }
        return rule;
    }
    if (m == 4) {
        GaussRule gc = gauss_chebyshev2(q);
        GaussRule gl = gauss_legendre(q);
        for (int i = 0; i < q; ++i) {
            double t1 = gc.nodes[i];
            double s1 = std::sqrt(1.0 - t1 * t1);
            for (int j = 0; j < q; ++j) {
                double t2 = gl.nodes[j];
                double s2 = std::sqrt(1.0 - t2 * t2);
                for (int a = 0; a < nphi; ++a) {
                    double phi = 2.0 * kPi * (a + 0.5) / nphi;
                    rule.sphere_nodes.push_back({{s1 * s2 * std::cos(phi),
                                                  s1 * s2 * std::sin(phi), s1 * t2, t1}});
                    rule.weights.push_back(gc.weights[i] * gl.weights[j] *
                                           (2.0 * kPi / nphi) * norm);
                }
            }
        }
        return rule;
    }
    throw std::invalid_argument(
        "build_rule: deterministic rules cover S^2, S^3/SU(2) and SO(3); use "
        "monte_carlo_sphere for higher spheres");
}

namespace {

template <class Node>
double integrate_impl(const std::vector<Node>& nodes, const std::vector<double>& weights,
                      const std::function<double(const Node&)>& f) {
    std::vector<double> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double v = f(nodes[i]);
        if (!std::isfinite(v))
            throw std::runtime_error("integrate: non-finite integrand at node " +
                                     std::to_string(i));
        terms[i] = weights[i] * v;
    }
    return pairwise_sum(terms);
}

}  // namespace

double integrate(const QuadratureRule& rule,
                 const std::function<double(const harmonics::SpherePoint&)>& f) {
    if (rule.sphere_nodes.empty())
        throw std::invalid_argument("integrate: rule does not carry sphere nodes");
    return integrate_impl(rule.sphere_nodes, rule.weights, f);
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(const harmonics::SO3Point&)>& f) {
    if (rule.so3_nodes.empty())
        throw std::invalid_argument("integrate: rule does not carry SO(3) nodes");
    return integrate_impl(rule.so3_nodes, rule.weights, f);
}

McResult monte_carlo_sphere(int m, long samples, std::uint64_t seed,
                            const std::function<double(const harmonics::SpherePoint&)>& f) {
    if (m < 2) throw std::invalid_argument("monte_carlo_sphere: m must be >= 2");
    if (samples < 1000) throw std::invalid_argument("monte_carlo_sphere: need >= 1000 samples");

    const double area = spectra::ManifoldId::sphere(m).volume();
    std::vector<double> vals(static_cast<std::size_t>(samples));
    harmonics::SpherePoint p;
    p.x.resize(m);
    for (long i = 0; i < samples; ++i) {
        double norm2 = 0.0;
        for (int k = 0; k < m; ++k) {
            double g = rng::gaussian(seed, static_cast<std::uint64_t>(k),
                                     static_cast<std::uint64_t>(i));
            p.x[k] = g;
            norm2 += g * g;
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (int k = 0; k < m; ++k) p.x[k] *= inv;
        vals[static_cast<std::size_t>(i)] = f(p);
    }
    double mean = pairwise_sum(vals) / static_cast<double>(samples);
    std::vector<double> sq(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double d = vals[i] - mean;
        sq[i] = d * d;
    }
    double var = pairwise_sum(sq) / (static_cast<double>(samples) - 1.0);

    McResult r;
    r.value = area * mean;
    r.stderr_est = area * std::sqrt(var / static_cast<double>(samples));
    r.samples = samples;
    r.seed = seed;
    return r;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace lt::quadrature
