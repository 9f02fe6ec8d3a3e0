#include "lt/json_export.hpp"

#include <sstream>
#include <stdexcept>

namespace lt::json_export {

std::string measure_name(spectra::Measure measure) {
    return measure == spectra::Measure::Normalized ? "normalized" : "geometric";
}

spectra::Measure parse_measure(const std::string& name) {
    if (name == "normalized") return spectra::Measure::Normalized;
    if (name == "geometric") return spectra::Measure::Geometric;
    throw std::invalid_argument("unknown measure '" + name + "' (normalized|geometric)");
}

spectra::ManifoldId parse_manifold(const std::string& name, spectra::Measure measure) {
    if (name == "so3") return spectra::ManifoldId::so3(measure);
    if (name == "su2") return spectra::ManifoldId::su2(measure);
    if (name.rfind("sphere:", 0) == 0) {
        int m = std::stoi(name.substr(7));
        return spectra::ManifoldId::sphere(m, measure);
    }
    throw std::invalid_argument("unknown manifold '" + name +
                                "' (sphere:m with ambient dimension m, su2, so3)");
}

json spectrum_to_json(const spectra::Spectrum& spectrum) {
    json levels = json::array();
    for (const auto& level : spectrum.levels)
        levels.push_back(json::array({level.eigenvalue, level.multiplicity}));
    return json{{"manifold", spectrum.manifold.name()},
                {"measure", measure_name(spectrum.manifold.measure)},
                {"dim", spectrum.dim},
                {"volume", spectrum.volume},
                {"cutoff", spectrum.cutoff},
                {"levels", levels}};
}

json constant_to_json(const constants::ConstantReport& report) {
    return json{{"manifold", report.manifold.name()},
                {"name", report.name},
                {"value", report.value},
                {"exact_form", report.exact_form},
                {"measure", measure_name(report.measure)},
                {"source",
                 report.source == constants::Source::Analytic ? "analytic" : "numeric_infimum"}};
}

json derived_to_json(const engine::DerivedBound& bound) {
    return json{{"infimum_of_ratio", bound.infimum_of_ratio},
                {"constant", bound.constant},
                {"argmin_rho", bound.argmin_rho},
                {"argmin_at_infinity", bound.argmin_at_infinity},
                {"method", bound.method == engine::Method::ClosedForm ? "closed_form" : "quadrature"},
                {"est_error", bound.est_error},
                {"grid", json{{"min", bound.grid_min},
                              {"max", bound.grid_max},
                              {"points", bound.grid_points}}}};
}

json report_to_json(const verify::InequalityReport& report) {
    return json{{"family", report.family},
                {"lhs", report.lhs},
                {"rhs_energy", report.rhs_energy},
                {"constant", constant_to_json(report.constant_used)},
                {"ratio", report.ratio},
                {"certified", report.certified},
                {"empirical_lower_bound", report.empirical_lower_bound},
                {"mc_stderr", report.mc_stderr}};
}

json sweep_to_json(const verify::SweepResult& result) {
    json reports = json::array();
    for (const auto& r : result.reports) reports.push_back(report_to_json(r));
    return json{{"reports", reports},
                {"max_ratio", result.max_ratio},
                {"max_ratio_family", result.max_ratio_family},
                {"all_certified", result.all_certified}};
}

std::string table1_csv(int precision, const std::string& config_comment) {
    std::ostringstream out;
    if (!config_comment.empty()) out << "# " << config_comment << "\n";
    out << "m,theorem1,ilyin,ilyin_laptev,pan\n";
    out.precision(precision);
    out << std::fixed;
    for (const auto& row : constants::table1())
        out << row.m << "," << row.theorem1.value << "," << row.ilyin << "," << row.ilyin_laptev
            << "," << row.pan << "\n";
    return out.str();
}

json table1_json() {
    json rows = json::array();
    for (const auto& row : constants::table1()) {
        rows.push_back(json{{"m", row.m},
                            {"theorem1", constant_to_json(row.theorem1)},
                            {"ilyin", row.ilyin},
                            {"ilyin_laptev", row.ilyin_laptev},
                            {"pan", row.pan},
                            {"note", row.note}});
    }
    return json{{"title", "upper bounds for the sphere constants"}, {"rows", rows}};
}

std::string sweep_csv(const verify::SweepResult& result, int precision,
                      const std::string& config_comment) {
    std::ostringstream out;
    if (!config_comment.empty()) out << "# " << config_comment << "\n";
    out << "family,lhs,rhs_energy,ratio,constant,certified,mc_stderr\n";
    out.precision(precision);
    for (const auto& r : result.reports)
        out << r.family << "," << r.lhs << "," << r.rhs_energy << "," << r.ratio << ","
            << r.constant_used.value << "," << (r.certified ? 1 : 0) << "," << r.mc_stderr
            << "\n";
    return out.str();
}

}  // namespace lt::json_export
