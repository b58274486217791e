#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lgeo/groebner.hpp"
#include "lgeo/likelihood.hpp"

namespace lgeo {

/// Ideal file text:
///   ring p_0 p_1 p_2        (or: ring p_0..p_2)
///   order grevlex           (optional; lex or grevlex)
///   4*p_0*p_2 - p_1^2       (one generator per line)
/// '#' starts a comment. Locations in ParseError refer to the file.
Ideal parse_ideal_text(std::string_view text);
std::string format_ideal(const Ideal& ideal);

/// Model JSON with "variables" and either "edges" (graphical model) or
/// "generators" (log-linear model).
ModelInput parse_model_json(std::string_view text);
std::vector<DiscreteRandomVariable> parse_variables_json(std::string_view text);

/// Whole file contents; "-" reads standard input.
std::string read_file(const std::string& path);

/// Dispatches on the extension: .ideal, .mat, .json.
ModelInput load_model(const std::string& path);

std::string emit_json(const Ideal& ideal);
std::string emit_json(const IntMatrix& matrix);
/// {"key": value}
std::string emit_json(std::string_view key, std::uint64_t value);
std::string emit_json(std::string_view key, std::string_view value);
std::string emit_json(std::string_view key, const std::vector<std::size_t>& values);

}  // namespace lgeo
