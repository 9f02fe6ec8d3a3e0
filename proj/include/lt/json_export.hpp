#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lt/constants.hpp"
#include "lt/engine.hpp"
#include "lt/spectra.hpp"
#include "lt/verify.hpp"

namespace lt::json_export {

using nlohmann::json;

std::string measure_name(spectra::Measure measure);
spectra::Measure parse_measure(const std::string& name);
spectra::ManifoldId parse_manifold(const std::string& name, spectra::Measure measure);

json spectrum_to_json(const spectra::Spectrum& spectrum);
json constant_to_json(const constants::ConstantReport& report);
json derived_to_json(const engine::DerivedBound& bound);
json report_to_json(const verify::InequalityReport& report);
json sweep_to_json(const verify::SweepResult& result);

/// CSV emitters. `config_comment` (when nonempty) is prepended as a single
/// `# ...` line so every artifact carries the tool version and run config.
std::string table1_csv(int precision = 6, const std::string& config_comment = "");
json table1_json();
std::string sweep_csv(const verify::SweepResult& result, int precision = 15,
                      const std::string& config_comment = "");

}  // namespace lt::json_export
