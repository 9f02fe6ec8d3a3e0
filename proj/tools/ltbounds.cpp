// ltbounds: spectral constants for the Lieb-Thirring inequality on spheres,
// SU(2) and SO(3). Subcommands: table1, constants, spectrum, derive, verify.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lt/json_export.hpp"
#include "lt/version.hpp"

namespace {

using lt::json_export::json;

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
    }
};

json config_echo(const std::string& subcommand, const json& args) {
    return json{{"tool", "ltbounds"},
                {"version", lt::kVersion},
                {"subcommand", subcommand},
                {"args", args}};
}

// family spec grammar: comma-separated terms
//   shells:A..B      full shells n = A..B (one family per n)
//   single:LEVEL:IDX one eigenfunction
//   mix:SIZE:L1[-L2[-..]]  random mixtures over the listed levels, one
//                          family per seed
std::vector<lt::verify::TrialFamily> parse_families(const lt::spectra::ManifoldId& manifold,
                                                    const std::string& spec,
                                                    std::uint64_t seed) {
    using lt::verify::TrialFamily;
    if (spec.empty())
        return lt::verify::default_families(manifold, {seed, seed + 1, seed + 2});

    std::vector<TrialFamily> families;
    std::stringstream ss(spec);
    std::string term;
    while (std::getline(ss, term, ',')) {
        if (term.rfind("shells:", 0) == 0) {
            std::string range = term.substr(7);
            auto dots = range.find("..");
            int a, b;
            if (dots == std::string::npos) {
                a = b = std::stoi(range);
            } else {
                a = std::stoi(range.substr(0, dots));
                b = std::stoi(range.substr(dots + 2));
            }
            for (int n = a; n <= b; ++n)
                families.push_back(lt::verify::full_shell_family(manifold, n));
        } else if (term.rfind("single:", 0) == 0) {
            std::string rest = term.substr(7);
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("families", "single needs LEVEL:INDEX");
            families.push_back(lt::verify::single_harmonic_family(
                manifold, std::stoi(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1))));
        } else if (term.rfind("mix:", 0) == 0) {
            std::string rest = term.substr(4);
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("families", "mix needs SIZE:LEVELS");
            int size = std::stoi(rest.substr(0, colon));
            std::vector<int> levels;
            std::stringstream ls(rest.substr(colon + 1));
            std::string lv;
            while (std::getline(ls, lv, '-')) levels.push_back(std::stoi(lv));
            families.push_back(lt::verify::random_mixture_family(manifold, levels, size, seed));
        } else {
            throw CLI::ValidationError("families", "unknown family term '" + term + "'");
        }
    }
    return families;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lieb-Thirring constants on spheres, SU(2) and SO(3)"};
    app.set_version_flag("--version", lt::kVersion);
    app.require_subcommand(1);

    std::string manifold_name = "sphere:3";
    std::string measure_name = "";
    std::string format = "json";
    std::string out_path;
    std::string mode = "envelope";
    std::string families_spec;
    double cutoff = 1e4;
    std::uint64_t seed = 101;
    int precision = 6;

    auto* table_cmd = app.add_subcommand("table1", "comparison table for the sphere constants");
    table_cmd->add_option("--format", format, "json or csv")->default_str("json");
    table_cmd->add_option("--precision", precision, "digits in csv output")->default_str("6");
    table_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* const_cmd =
        app.add_subcommand("constants", "all closed-form constants with exact forms");
    const_cmd->add_option("--format", format, "json or csv")->default_str("json");
    const_cmd->add_option("--precision", precision, "digits in csv output")->default_str("6");
    const_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* spec_cmd = app.add_subcommand("spectrum", "eigenvalue levels up to a cutoff");
    spec_cmd->add_option("--manifold", manifold_name, "sphere:m (ambient m), su2 or so3");
    spec_cmd->add_option("--measure", measure_name, "normalized or geometric");
    spec_cmd->add_option("--cutoff", cutoff, "largest eigenvalue kept")->required();
    spec_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* derive_cmd = app.add_subcommand("derive", "derive the constant from a counting function");
    derive_cmd->add_option("--manifold", manifold_name, "sphere:m (ambient m), su2 or so3");
    derive_cmd->add_option("--measure", measure_name, "normalized or geometric");
    derive_cmd->add_option("--mode", mode, "envelope or exact")->default_str("envelope");
    derive_cmd->add_option("--cutoff", cutoff, "spectrum cutoff for exact mode");
    derive_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "certify the inequality on trial families");
    verify_cmd->add_option("--manifold", manifold_name, "sphere:m (ambient m), su2 or so3");
    verify_cmd->add_option("--measure", measure_name, "normalized or geometric");
    verify_cmd->add_option("--families", families_spec,
                           "e.g. shells:1..4,single:1:1,mix:3:1-2 (default sweep if omitted)");
    verify_cmd->add_option("--seed", seed, "base seed for random families");
    verify_cmd->add_option("--format", format, "json or csv")->default_str("json");
    verify_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        OutputTarget target{out_path};

        if (table_cmd->parsed()) {
            if (format == "csv") {
                std::string comment = std::string("ltbounds ") + lt::kVersion +
                                      " table1 --format csv --precision " +
                                      std::to_string(precision);
                target.write(lt::json_export::table1_csv(precision, comment));
            } else {
                json doc = lt::json_export::table1_json();
                doc["config"] = config_echo("table1", json{{"format", format}});
                target.write(doc.dump(2));
            }
            std::cerr << "table1: " << lt::constants::table1().size() << " rows written\n";
            return 0;
        }

        if (const_cmd->parsed()) {
            std::vector<lt::constants::ConstantReport> reports;
            for (int m = 3; m <= 6; ++m) reports.push_back(lt::constants::theorem1_constant(m));
            reports.push_back(lt::constants::su2_constant());
            auto so3 = lt::constants::so3_constants();
            reports.push_back(so3.normalized);
            reports.push_back(so3.geometric);
            if (format == "csv") {
                std::ostringstream csv;
                csv << "# ltbounds " << lt::kVersion << " constants --format csv --precision "
                    << precision << "\n";
                csv << "name,manifold,measure,value,exact_form\n";
                csv.precision(precision);
                for (const auto& r : reports)
                    csv << r.name << "," << r.manifold.name() << ","
                        << lt::json_export::measure_name(r.measure) << "," << r.value << ",\""
                        << r.exact_form << "\"\n";
                target.write(csv.str());
            } else {
                json doc;
                doc["config"] = config_echo("constants", json{{"format", format}});
                doc["constants"] = json::array();
                for (const auto& r : reports)
                    doc["constants"].push_back(lt::json_export::constant_to_json(r));
                target.write(doc.dump(2));
            }
            std::cerr << "constants: " << reports.size() << " reports written\n";
            return 0;
        }

        if (spec_cmd->parsed()) {
            auto measure = measure_name.empty() ? lt::spectra::Measure::Geometric
                                                : lt::json_export::parse_measure(measure_name);
            auto manifold = lt::json_export::parse_manifold(manifold_name, measure);
            auto spectrum = lt::spectra::build_spectrum(manifold, cutoff);
            json doc = lt::json_export::spectrum_to_json(spectrum);
            doc["config"] = config_echo(
                "spectrum", json{{"manifold", manifold_name}, {"cutoff", cutoff}});
            target.write(doc.dump(2));
            std::cerr << "spectrum: " << spectrum.levels.size() << " levels up to " << cutoff
                      << "\n";
            return 0;
        }

        if (derive_cmd->parsed()) {
            auto default_measure = manifold_name == "so3" ? lt::spectra::Measure::Normalized
                                                          : lt::spectra::Measure::Geometric;
            auto measure = measure_name.empty() ? default_measure
                                                : lt::json_export::parse_measure(measure_name);
            auto manifold = lt::json_export::parse_manifold(manifold_name, measure);
            auto derive_mode = mode == "exact" ? lt::engine::DeriveMode::ExactStep
                                               : lt::engine::DeriveMode::PaperEnvelope;
            if (mode != "exact" && mode != "envelope")
                throw std::invalid_argument("derive: --mode must be envelope or exact");
            auto bound = lt::engine::derive_constant(manifold, derive_mode, cutoff);
            json doc = lt::json_export::derived_to_json(bound);
            doc["manifold"] = manifold.name();
            doc["measure"] = lt::json_export::measure_name(measure);
            doc["config"] = config_echo("derive", json{{"manifold", manifold_name},
                                                       {"measure", lt::json_export::measure_name(measure)},
                                                       {"mode", mode},
                                                       {"cutoff", cutoff}});
            target.write(doc.dump(2));
            std::cerr << "derive: constant " << bound.constant << " for " << manifold.name()
                      << " (" << mode << ")\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto default_measure = manifold_name == "so3" ? lt::spectra::Measure::Normalized
                                                          : lt::spectra::Measure::Geometric;
            auto measure = measure_name.empty() ? default_measure
                                                : lt::json_export::parse_measure(measure_name);
            auto manifold = lt::json_export::parse_manifold(manifold_name, measure);
            auto families = parse_families(manifold, families_spec, seed);
            auto result =
                lt::verify::sweep(manifold, families, lt::verify::ConstantSource::Analytic);
            if (format == "csv") {
                std::ostringstream comment;
                comment << "ltbounds " << lt::kVersion << " verify --manifold " << manifold_name
                        << " --families '" << families_spec << "' --seed " << seed;
                target.write(lt::json_export::sweep_csv(result, 15, comment.str()));
            } else {
                json doc = lt::json_export::sweep_to_json(result);
                doc["config"] = config_echo("verify", json{{"manifold", manifold_name},
                                                           {"families", families_spec},
                                                           {"seed", seed}});
                target.write(doc.dump(2));
            }
            std::cerr << "verify: " << result.reports.size()
                      << " families certified; max ratio " << result.max_ratio << " ("
                      << result.max_ratio_family << ")\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
