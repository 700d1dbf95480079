#pragma once

#include <string>
#include <variant>

#include "trilie/bilform.hpp"
#include "trilie/prelie.hpp"
#include "trilie/threelie.hpp"

namespace trilie {

/// Parsed content of an algebra file: 3-Lie or 3-pre-Lie per its "kind".
using ParsedAlgebra = std::variant<ThreeLieAlgebra, ThreePreLie>;

/// JSON file formats. Coefficients are strings ("p/q", "a+bi/c") so every
/// value round-trips exactly; indices in files are zero-based.
ParsedAlgebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const ThreeLieAlgebra& g);
std::string algebra_to_json(const ThreePreLie& a);

Matrix map_from_json(const std::string& text);
std::string map_to_json(const Matrix& m);

BilForm form_from_json(const std::string& text);
std::string form_to_json(const BilForm& b);

ParsedAlgebra read_algebra_file(const std::string& path);
Matrix read_map_file(const std::string& path);
BilForm read_form_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace trilie
