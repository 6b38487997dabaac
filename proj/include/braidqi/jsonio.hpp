#pragma once

#include <string>

#include "json.hpp"

#include "braidqi/linalg.hpp"

namespace braidqi {

using ordered_json = nlohmann::ordered_json;

// Shortest representation that round-trips a double (17 significant digits),
// with negative zero normalized to "0" so parse/serialize cycles are stable.
std::string format_double(double v);

// Deterministic serializer: object keys in insertion order, floats through
// format_double, two-space indentation, trailing newline. Rejects non-finite
// numbers instead of emitting invalid JSON.
std::string json_to_string(const ordered_json& j);

// CSV field quoting (RFC-style: quote when a comma, quote, or newline is
// present; embedded quotes doubled).
std::string csv_field(const std::string& s);

// Rows of [re, im] pairs.
ordered_json complex_matrix_to_json(const ComplexMatrix& m);
ordered_json complex_vector_to_json(const std::vector<cxd>& v);
ordered_json real_vector_to_json(const std::vector<double>& v);

}  // namespace braidqi
