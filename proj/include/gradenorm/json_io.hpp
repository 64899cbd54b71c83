#pragma once

// JSON wire formats.
//
//   GradedVector   {"r": 2, "components": [[3, 4], [5]]}
//   ScalarProfile  {"r": 2, "a": [5, 5]}
//   Certificate    {"r": 5, "lines": [{"i": 1, "s": 1, "k": 1}, ...]}
//   CheckReport    {"valid": false, "violations": [{"line": {"i": 3, "s": 2, "k": 1},
//                                                    "reason": "coefficient"}]}
//   (an uncovered orbit reports "line": {"i": .., "s": ..} without "k")
//
// Rationals are strings "p/q", or "p" when q == 1.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gradenorm/certificate.hpp"
#include "gradenorm/expansion.hpp"
#include "gradenorm/graded_space.hpp"
#include "gradenorm/numeric_search.hpp"

namespace gradenorm {

using Json = nlohmann::ordered_json;

/// Raised for payloads that parse as JSON but do not match a schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& value);
Json to_json(const ExponentPair& pair);
Json to_json(const GradedVector& x);
Json to_json(const ScalarProfile& a);
Json to_json(const Certificate& cert);
Json to_json(const CheckReport& report);
Json to_json(const TermOrbit& orbit);
Json to_json(const RhsOrbit& orbit);
Json to_json(const ShadowPair& pair);
Json to_json(const CertificateReport& report);
Json to_json(const Infeasibility& infeasible);
Json to_json(const SearchOutcome& outcome);

// The readers throw SchemaError.
Rational rational_from_json(const Json& j);
GradedVector graded_vector_from_json(const Json& j);
ScalarProfile scalar_profile_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
CheckReport check_report_from_json(const Json& j);

/// Reads and parses a file; "-" means stdin. Throws SchemaError when the file
/// is unreadable or not JSON.
Json read_json_file(const std::string& path);

}  // namespace gradenorm
