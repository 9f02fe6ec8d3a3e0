#include <doctest.h>

#include <cmath>

#include "lt/constants.hpp"
#include "lt/harmonics.hpp"
#include "lt/quadrature.hpp"

using namespace lt::quadrature;
using lt::harmonics::SO3Point;
using lt::harmonics::SpherePoint;
using lt::spectra::ManifoldId;
using lt::spectra::Measure;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_SUITE("quadrature") {

TEST_CASE("gauss-legendre exactness") {
    auto rule = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * std::pow(rule.nodes[i], k);
        double exact = (k % 2 == 0) ? 2.0 / (k + 1.0) : 0.0;
        CHECK(sum == doctest::Approx(exact).epsilon(1e-14));
    }
}

TEST_CASE("gauss-chebyshev-2 exactness for the sqrt weight") {
    auto rule = gauss_chebyshev2(6);
    // integral of t^k sqrt(1-t^2): pi/2, 0, pi/8, 0, pi/16, ...
    double expect[5] = {kPi / 2.0, 0.0, kPi / 8.0, 0.0, kPi / 16.0};
    for (int k = 0; k <= 4; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * std::pow(rule.nodes[i], k);
        CHECK(sum == doctest::Approx(expect[k]).epsilon(1e-14));
    }
}

TEST_CASE("rule weights sum to the measure volume") {
    auto s2 = build_rule(ManifoldId::sphere(3), 10);
    double total = 0.0;
    for (double w : s2.weights) total += w;
    CHECK(total == doctest::Approx(4.0 * kPi).epsilon(1e-13));

    auto s3n = build_rule(ManifoldId::sphere(4, Measure::Normalized), 10);
    total = 0.0;
    for (double w : s3n.weights) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));

    auto so3n = build_rule(ManifoldId::so3(Measure::Normalized), 10);
    total = 0.0;
    for (double w : so3n.weights) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));

    auto so3g = build_rule(ManifoldId::so3(Measure::Geometric), 10);
    total = 0.0;
    for (double w : so3g.weights) total += w;
    CHECK(total == doctest::Approx(kPi * kPi).epsilon(1e-13));
}

TEST_CASE("harmonics integrate exactly") {
    auto s2 = build_rule(ManifoldId::sphere(3), 12);
    // single harmonics of degree >= 1 integrate to zero
    for (int n = 1; n <= 6; ++n)
        for (int idx = 1; idx <= 2 * n + 1; idx += 2) {
            double v = integrate(s2, std::function<double(const SpherePoint&)>(
                                         [&](const SpherePoint& p) {
                                             return lt::harmonics::sphere_basis_S2(n, idx, p);
                                         }));
            CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
        }
    // orthonormality of Y_1^0
    double sq = integrate(s2, std::function<double(const SpherePoint&)>(
                                  [&](const SpherePoint& p) {
                                      double y = lt::harmonics::sphere_basis_S2(1, 2, p);
                                      return y * y;
                                  }));
    CHECK(sq == doctest::Approx(1.0).epsilon(1e-12));
    // mean-zero zonal kernel against a fixed pole
    SpherePoint north{{0.0, 0.0, 1.0}};
    double zk = integrate(s2, std::function<double(const SpherePoint&)>(
                                  [&](const SpherePoint& p) {
                                      return lt::harmonics::zonal_kernel(3, 1, p, north);
                                  }));
    CHECK(zk == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("exactness holds up to the certified degree") {
    auto rule = build_rule(ManifoldId::sphere(3), 10);
    for (int n = 1; n <= rule.exactness_degree; ++n) {
        double v = integrate(rule, std::function<double(const SpherePoint&)>(
                                       [&](const SpherePoint& p) {
                                           return lt::harmonics::sphere_basis_S2(n, n + 1, p);
                                       }));
        CHECK(std::abs(v) < 1e-12);
    }
}

TEST_CASE("gram matrix of the first 25 S2 basis functions") {
    auto rule = build_rule(ManifoldId::sphere(3), 16);
    std::vector<std::pair<int, int>> members;
    for (int n = 0; n <= 4; ++n)
        for (int idx = 1; idx <= 2 * n + 1; ++idx) members.push_back({n, idx});
    REQUIRE(members.size() == 25);

    std::vector<double> gram(25 * 25, 0.0);
    std::vector<double> vals(25);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        for (int a = 0; a < 25; ++a)
            vals[a] = lt::harmonics::sphere_basis_S2(members[a].first, members[a].second,
                                                     rule.sphere_nodes[q]);
        for (int a = 0; a < 25; ++a)
            for (int b = 0; b < 25; ++b) gram[a * 25 + b] += rule.weights[q] * vals[a] * vals[b];
    }
    for (int a = 0; a < 25; ++a)
        for (int b = 0; b < 25; ++b) {
            if (a == b)
                CHECK(std::abs(gram[a * 25 + b] - 1.0) < 1e-11);
            else
                CHECK(std::abs(gram[a * 25 + b]) < 1e-11);
        }
}

TEST_CASE("doubling the degree moves smooth integrals by less than 1e-10") {
    auto f = [](const SpherePoint& p) { return std::exp(p.x[2]) * std::cos(2.0 * p.x[0]); };
    auto lo = build_rule(ManifoldId::sphere(3), 24);
    auto hi = build_rule(ManifoldId::sphere(3), 48);
    double a = integrate(lo, std::function<double(const SpherePoint&)>(f));
    double b = integrate(hi, std::function<double(const SpherePoint&)>(f));
    CHECK(std::abs(a - b) < 1e-10 * std::abs(b));

    auto g = [](const SO3Point& p) { return std::exp(std::cos(p.theta)) * std::sin(p.phi + p.psi) + 2.0; };
    auto lo3 = build_rule(ManifoldId::so3(), 24);
    auto hi3 = build_rule(ManifoldId::so3(), 48);
    double c = integrate(lo3, std::function<double(const SO3Point&)>(g));
    double d = integrate(hi3, std::function<double(const SO3Point&)>(g));
    CHECK(std::abs(c - d) < 1e-10 * std::abs(d));
}

TEST_CASE("rule construction errors") {
    CHECK_THROWS_AS(build_rule(ManifoldId::sphere(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_rule(ManifoldId::sphere(3), 100000), std::invalid_argument);
    CHECK_THROWS_AS(build_rule(ManifoldId::sphere(6), 8), std::invalid_argument);
}

TEST_CASE("non-finite integrand names the node") {
    auto rule = build_rule(ManifoldId::sphere(3), 4);
    auto bad = [](const SpherePoint& p) { return p.x[2] > 0 ? 1.0 / 0.0 : 1.0; };
    CHECK_THROWS_WITH_AS(integrate(rule, std::function<double(const SpherePoint&)>(bad)),
                         doctest::Contains("node"), std::runtime_error);
}

TEST_CASE("monte carlo: constants and mean-zero integrands") {
    auto one = [](const SpherePoint&) { return 1.0; };
    auto r = monte_carlo_sphere(5, 20000, 97, one);
    CHECK(r.value == doctest::Approx(lt::constants::sphere_area(5)).epsilon(1e-12));
    CHECK(r.stderr_est == doctest::Approx(0.0).epsilon(1e-12));

    SpherePoint pole{{0.0, 0.0, 0.0, 0.0, 1.0}};
    auto zk = [&](const SpherePoint& x) { return lt::harmonics::zonal_kernel(5, 1, x, pole); };
    auto rz = monte_carlo_sphere(5, 50000, 11, zk);
    CHECK(std::abs(rz.value) <= 3.0 * rz.stderr_est);
    CHECK(rz.stderr_est > 0.0);

    // constant shell density: sigma_m (k_{m1}/sigma_m)^2 with zero variance
    double shell = lt::spectra::sphere_multiplicity(5, 1) / lt::constants::sphere_area(5);
    auto rho2 = [&](const SpherePoint&) { return shell * shell; };
    auto rr = monte_carlo_sphere(5, 10000, 3, rho2);
    CHECK(rr.value ==
          doctest::Approx(lt::constants::sphere_area(5) * shell * shell).epsilon(1e-12));
}

TEST_CASE("monte carlo with a fixed seed is bit-reproducible") {
    auto f = [](const SpherePoint& x) { return x.x[0] * x.x[0] + 0.3 * x.x[4]; };
    auto a = monte_carlo_sphere(6, 30000, 123456, f);
    auto b = monte_carlo_sphere(6, 30000, 123456, f);
    CHECK(a.value == b.value);
    CHECK(a.stderr_est == b.stderr_est);
    auto c = monte_carlo_sphere(6, 30000, 99, f);
    CHECK(a.value != c.value);
}

TEST_CASE("monte carlo input validation") {
    auto one = [](const SpherePoint&) { return 1.0; };
    CHECK_THROWS_AS(monte_carlo_sphere(1, 10000, 1, one), std::invalid_argument);
    CHECK_THROWS_AS(monte_carlo_sphere(5, 10, 1, one), std::invalid_argument);
}

TEST_CASE("pairwise summation") {
    std::vector<double> vals;
    double plain = 0.0;
    for (int i = 0; i < 10001; ++i) {
        double v = std::sin(0.1 * i) * 1e-3;
        vals.push_back(v);
        plain += v;
    }
    CHECK(pairwise_sum(vals) == doctest::Approx(plain).epsilon(1e-12));
}

}  // TEST_SUITE
