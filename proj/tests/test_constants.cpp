#include <doctest.h>

#include <cmath>
#include <memory>

#include "lt/constants.hpp"
#include "lt/quadrature.hpp"
#include "lt/spectra.hpp"

using namespace lt::constants;
using lt::spectra::CountingFunction;
using lt::spectra::ManifoldId;
using lt::spectra::Measure;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// both values must round to the same double, give or take one ulp
bool within_one_ulp(double have, double want) {
    return have == want || have == std::nextafter(want, 1.0) ||
           have == std::nextafter(want, -1.0);
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("sphere areas") {
    CHECK(sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
    CHECK(sphere_area(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
    CHECK(sphere_area(5) == doctest::Approx(8.0 * kPi * kPi / 3.0).epsilon(1e-15));
    // reference values evaluated at 40 significant digits
    CHECK(within_one_ulp(sphere_area(2), 6.283185307179586476925286766559005768394));
    CHECK(within_one_ulp(sphere_area(7), 33.07336179231980818717473607157482154904));
    CHECK(within_one_ulp(sphere_area(12), 16.02315322625507395050365739420699831445));
}

TEST_CASE("envelope K_m") {
    auto b3 = envelope_Km(3);
    CHECK(within_one_ulp(b3.K, 0.1591549430918953357688837633725143620345));  // 1/(2 pi)
    CHECK(b3.exponent == 1.0);
    CHECK(b3.threshold == 2.0);

    auto b4 = envelope_Km(4);
    CHECK(b4.K ==
          doctest::Approx(5.0 * std::sqrt(3.0) / (12.0 * kPi * kPi)).epsilon(1e-15));
    CHECK(within_one_ulp(b4.K, 0.07312226581314402380141810779290754787013));

    auto b5 = envelope_Km(5);
    CHECK(within_one_ulp(b5.K, 0.03799544386587666429145479870364786458913));
    CHECK(b5.exponent == 2.0);
    CHECK(b5.threshold == 4.0);

    CHECK_THROWS_AS(envelope_Km(2), std::invalid_argument);
}

TEST_CASE("theorem 1 constants against 40-digit references") {
    CHECK(within_one_ulp(theorem1_constant(3).value, 0.9549296585513720146133025802350861722068));
    CHECK(theorem1_constant(3).value == doctest::Approx(3.0 / kPi).epsilon(1e-15));
    CHECK(within_one_ulp(theorem1_constant(4).value, 0.6800256513210066391714655574690816694503));
    CHECK(within_one_ulp(theorem1_constant(5).value, 0.5847726009252570809294010377049425707076));
    CHECK(theorem1_constant(5).value ==
          doctest::Approx(3.0 * std::sqrt(1.5) / (2.0 * kPi)).epsilon(1e-15));
    CHECK(within_one_ulp(theorem1_constant(6).value, 0.537736373215596449524449568221954189674));
    CHECK(within_one_ulp(theorem1_constant(9).value, 0.4795110161083030893760565795441336100344));
    CHECK(within_one_ulp(theorem1_constant(12).value, 0.4578883098689420827540932723792567840822));
    CHECK(theorem1_constant(3).measure == Measure::Geometric);
    CHECK(theorem1_constant(3).source == Source::Analytic);
}

TEST_CASE("paper table values at 4 significant figures") {
    CHECK(std::abs(theorem1_constant(3).value - 0.9549) < 5e-4);
    CHECK(std::abs(theorem1_constant(4).value - 0.6800) < 5e-4);
    CHECK(std::abs(theorem1_constant(5).value - 0.5847) < 5e-4);
    CHECK(std::abs(theorem1_constant(6).value - 0.5377) < 5e-4);
}

TEST_CASE("su2 constant") {
    auto r = su2_constant();
    CHECK(std::abs(r.value - 0.680026) < 1e-6);  // printed paper value
    CHECK(std::abs(r.value - theorem1_constant(4).value) < 1e-12 * r.value);
    // cube of the pi-free part rationalizes to 1071875/34992
    double cubed = r.value * r.value * r.value * std::pow(kPi, 4.0);
    CHECK(cubed == doctest::Approx(1071875.0 / 34992.0).epsilon(1e-13));
    CHECK(r.exact_form == "(35/18)*(25/(6*pi^4))^(1/3)");
}

TEST_CASE("so3 constants") {
    auto pair = so3_constants();
    CHECK(within_one_ulp(pair.normalized.value, 8.413122493459882230209556812883972598953));
    CHECK(std::abs(pair.normalized.value - 8.41312) < 5e-6);
    CHECK(within_one_ulp(pair.geometric.value, 1.828482108966351969743760407306899286495));
    CHECK(std::abs(pair.geometric.value - 1.82848) < 5e-6);
    CHECK(pair.normalized.value / pair.geometric.value ==
          doctest::Approx(std::pow(kPi, 4.0 / 3.0)).epsilon(1e-14));
    CHECK(pair.normalized.measure == Measure::Normalized);
    CHECK(pair.geometric.measure == Measure::Geometric);
}

TEST_CASE("classical sharp constants") {
    CHECK(within_one_ulp(classical_L(1.0, 3), 0.006754745576155851429591964213981842593624));
    CHECK(classical_L(1.0, 3) == doctest::Approx(1.0 / (15.0 * kPi * kPi)).epsilon(1e-14));
    CHECK(classical_L(0.0, 2) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-14));
    CHECK(classical_L(1.5, 1) == doctest::Approx(0.1875).epsilon(1e-14));  // 3/16
    CHECK_THROWS_AS(classical_L(-0.5, 2), std::invalid_argument);
}

TEST_CASE("k_n from L_{1,n}") {
    CHECK(kn_from_L1n(2, 1.0 / (8.0 * kPi)) ==
          doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(within_one_ulp(kn_from_L1n(3, classical_L(1.0, 3)),
                         0.109702052306803716713986566642783693211));
    // power law: doubling L multiplies the output by 2^{2/n}
    for (int n = 1; n <= 6; ++n) {
        double base = kn_from_L1n(n, 0.031);
        double twice = kn_from_L1n(n, 0.062);
        CHECK(twice / base == doctest::Approx(std::pow(2.0, 2.0 / n)).epsilon(1e-14));
    }
}

TEST_CASE("J functional") {
    CHECK(J_limit(3) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(std::abs(J(1e6, 3) - 1.0 / 6.0) < 1e-4);
    CHECK(J(3.0, 3) > J(10.0, 3));
    CHECK(J(10.0, 3) > J(100.0, 3));
    CHECK_THROWS_AS(J(2.0, 3), std::domain_error);  // domain is rho > 2 for m=3

    // strictly decreasing along a log grid over the domain, every m
    for (int m = 3; m <= 12; ++m) {
        double lower = std::pow(m - 1.0, 0.5 * (m - 1.0));
        double prev = J(lower * 1.0001, m);
        for (double f = 1.01; f < 1e10; f *= 3.7) {
            double cur = J(lower * f * 1.0001, m);
            CHECK(cur < prev);
            prev = cur;
        }
    }
    // the infimum is the limit; the tail gap decays like rho^{1/2 - (m+1)/(m-1)},
    // so larger m needs a larger evaluation point to push below 1e-8
    for (int m = 3; m <= 5; ++m) CHECK(std::abs(J(1e10, m) - J_limit(m)) < 1e-8);
    for (int m = 6; m <= 12; ++m) CHECK(std::abs(J(1e22, m) - J_limit(m)) < 1e-8);
}

TEST_CASE("proof-chain identity: k = (m+1)(m+3)/(m-1)^2 * K_m^{2/(m-1)}") {
    for (int m = 3; m <= 12; ++m) {
        double chain = (m + 1.0) * (m + 3.0) / ((m - 1.0) * (m - 1.0)) *
                       std::pow(envelope_Km(m).K, 2.0 / (m - 1.0));
        CHECK(theorem1_constant(m).value == doctest::Approx(chain).epsilon(1e-12));
    }
}

TEST_CASE("the envelope dominates the exact counting density") {
    using lt::spectra::build_spectrum;
    for (int m = 3; m <= 12; ++m) {
        auto spectrum = std::make_shared<const lt::spectra::Spectrum>(
            build_spectrum(ManifoldId::sphere(m), 1.2e6));
        auto count = CountingFunction::exact_step(spectrum, 1.0 / sphere_area(m));
        auto env = envelope_Km(m);
        for (double e = m - 1.0 + 1e-9; e <= 1e6; e *= 1.9) {
            CHECK(counting_value(count, e) <= env.K * std::pow(e, env.exponent) * (1 + 1e-13));
        }
    }
}

TEST_CASE("so3 envelope: dominates with near-equality at E = 2") {
    auto spectrum = std::make_shared<const lt::spectra::Spectrum>(
        build_spectrum(ManifoldId::so3(), 1.2e6));
    auto count = CountingFunction::exact_step(spectrum);
    const double K = 9.0 * std::sqrt(2.0) / 4.0;
    for (double e = 2.0 + 1e-9; e <= 1e6; e *= 1.7) {
        CHECK(counting_value(count, e) <= K * std::pow(e, 1.5) * (1 + 1e-13));
    }
    double near = counting_value(count, 2.0 + 1e-9) / (K * std::pow(2.0 + 1e-9, 1.5));
    CHECK(near > 0.999999);  // maximum of the ratio is attained at E = 2
    CHECK(near <= 1.0 + 1e-12);
}

TEST_CASE("sigma_m reproduced by quadrature of the constant function") {
    using namespace lt::quadrature;
    auto s2 = build_rule(ManifoldId::sphere(3), 8);
    auto s3 = build_rule(ManifoldId::sphere(4), 8);
    auto one = [](const lt::harmonics::SpherePoint&) { return 1.0; };
    CHECK(integrate(s2, one) == doctest::Approx(sphere_area(3)).epsilon(1e-10));
    CHECK(integrate(s3, one) == doctest::Approx(sphere_area(4)).epsilon(1e-10));
}

TEST_CASE("table 1 rows and the rounding note") {
    auto rows = table1();
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].m == 3);
    CHECK(rows[0].ilyin_laptev.find("0.2945") != std::string::npos);
    CHECK(rows[0].note.find("0.956") != std::string::npos);  // flags the printed rounding
    CHECK(rows[2].pan == "0.1728");
    CHECK(rows[3].theorem1.value == doctest::Approx(0.5377).epsilon(1e-3));
}

TEST_CASE("density envelopes per measure") {
    auto so3n = density_envelope(ManifoldId::so3(Measure::Normalized));
    CHECK(so3n.K == doctest::Approx(9.0 * std::sqrt(2.0) / 4.0).epsilon(1e-15));
    auto so3g = density_envelope(ManifoldId::so3(Measure::Geometric));
    CHECK(so3g.K == doctest::Approx(9.0 * std::sqrt(2.0) / (4.0 * kPi * kPi)).epsilon(1e-15));
    auto s3 = density_envelope(ManifoldId::sphere(3));
    CHECK(s3.K == doctest::Approx(envelope_Km(3).K).epsilon(1e-15));
    auto su2 = density_envelope(ManifoldId::su2());
    CHECK(su2.K == doctest::Approx(envelope_Km(4).K).epsilon(1e-15));
}

}  // TEST_SUITE
