#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cylindex/models.hpp"
#include "cylindex/numeric_spectra.hpp"
#include "cylindex/symbolic_kernel.hpp"

namespace cylindex {

using Json = nlohmann::json;

/// Canonical text for a JSON value: keys sorted, no whitespace, floats with 17 significant
/// digits, non-finite floats as null. Parsing the output and serializing again is byte-identical.
std::string canonical_json(const Json& value);

/// Shortest decimal that parses back to the same double.
std::string format_shortest(double value);

/// One CSV line (LF-terminated); fields containing ',', '"' or newlines are quoted.
std::string csv_line(const std::vector<std::string>& fields);

Json to_json(const PerturbationParams& params);
Json to_json(const WeightSet& weights);
Json to_json(const Discretization& disc);
Json to_json(const Thresholds& th);
Json to_json(const SpectralReport& report);

/// Multiplicities of a character at every weight in the window, plus its pattern tag.
Json to_json(const CharacterFunctional& character, IntegerWindow window);

}  // namespace cylindex
