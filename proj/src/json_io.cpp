#include "gradenorm/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace gradenorm {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> number_array(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number()) throw SchemaError(std::string(what) + " must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

// Domain errors from the constructors become schema errors at the boundary.
template <typename Fn>
auto guarded(Fn fn) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    throw SchemaError(e.what());
  } catch (const Json::exception& e) {
    throw SchemaError(e.what());
  }
}

Json line_json(int level, int split, std::optional<int> target) {
  Json line = {{"i", level}, {"s", split}};
  if (target) line["k"] = *target;
  return line;
}

}  // namespace

Json to_json(const Rational& value) { return value.to_string(); }

Json to_json(const ExponentPair& pair) { return Json::array({to_json(pair.hi()), to_json(pair.lo())}); }

Json to_json(const GradedVector& x) {
  return {{"r", x.signature().r()}, {"components", x.components()}};
}

Json to_json(const ScalarProfile& a) {
  return {{"r", a.signature().r()},
          {"a", std::vector<double>(a.magnitudes().begin(), a.magnitudes().end())}};
}

Json to_json(const Certificate& cert) {
  Json lines = Json::array();
  for (const auto& line : cert.lines) lines.push_back(line_json(line.level, line.split, line.target));
  return {{"r", cert.r}, {"lines", std::move(lines)}};
}

Json to_json(const CheckReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"line", line_json(v.level, v.split, v.target)},
                          {"reason", std::string(to_string(v.reason))}});
  }
  return {{"valid", report.valid()}, {"violations", std::move(violations)}};
}

Json to_json(const TermOrbit& orbit) {
  return {{"i", orbit.level},
          {"s", orbit.split},
          {"coefficient", orbit.coefficient.get_str()},
          {"exponents", to_json(orbit.exponents())},
          {"middle", orbit.is_middle}};
}

Json to_json(const RhsOrbit& orbit) {
  return {{"k", orbit.k},
          {"coefficient", orbit.coefficient.get_str()},
          {"exponents", to_json(orbit.exponents())},
          {"middle", orbit.is_middle}};
}

Json to_json(const ShadowPair& pair) {
  return {{"k", pair.k}, {"i", pair.level}, {"exponents", to_json(pair.exponents)}};
}

Json to_json(const CertificateReport& report) {
  Json groups = Json::array();
  for (const auto& group : report.groups) {
    Json terms = Json::array();
    for (const auto& term : group.terms) {
      Json t = to_json(term.orbit);
      t["shadow"] = to_json(term.shadow.exponents);
      terms.push_back(std::move(t));
    }
    groups.push_back({{"k", group.rhs.k},
                      {"rhs", to_json(group.rhs)},
                      {"terms", std::move(terms)},
                      {"display", group.display}});
  }
  return {{"r", report.r}, {"groups", std::move(groups)}};
}

Json to_json(const Infeasibility& infeasible) {
  return {{"level", infeasible.level},
          {"deficient_splits", infeasible.deficient_splits},
          {"reachable_targets", infeasible.reachable_targets}};
}

Json to_json(const SearchOutcome& outcome) {
  return {{"max_defect", outcome.max_defect},
          {"max_relative_defect", outcome.max_relative_defect},
          {"argmax", {{"a", to_json(outcome.argmax.a)}, {"b", to_json(outcome.argmax.b)}}},
          {"samples_evaluated", outcome.samples_evaluated},
          {"violation_found", outcome.violation_found}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

GradedVector graded_vector_from_json(const Json& j) {
  return guarded([&] {
    const int r = int_field(j, "r");
    const Json& comps = field(j, "components");
    if (!comps.is_array()) throw SchemaError("'components' must be an array");
    std::vector<std::vector<double>> components;
    for (const Json& level : comps) components.push_back(number_array(level, "component"));
    return GradedVector(GradingSignature(r), std::move(components));
  });
}

ScalarProfile scalar_profile_from_json(const Json& j) {
  return guarded([&] {
    const int r = int_field(j, "r");
    return ScalarProfile(GradingSignature(r), number_array(field(j, "a"), "'a'"));
  });
}

Certificate certificate_from_json(const Json& j) {
  return guarded([&] {
    Certificate cert{int_field(j, "r"), {}};
    if (cert.r < 1) throw SchemaError("'r' must be >= 1");
    const Json& lines = field(j, "lines");
    if (!lines.is_array()) throw SchemaError("'lines' must be an array");
    for (const Json& line : lines) {
      cert.lines.push_back(CertificateLine{int_field(line, "i"), int_field(line, "s"), int_field(line, "k")});
    }
    return cert;
  });
}

CheckReport check_report_from_json(const Json& j) {
  return guarded([&] {
    CheckReport report;
    const Json& violations = field(j, "violations");
    if (!violations.is_array()) throw SchemaError("'violations' must be an array");
    for (const Json& v : violations) {
      const Json& line = field(v, "line");
      std::optional<int> target;
      if (line.contains("k")) target = int_field(line, "k");
      const Json& reason = field(v, "reason");
      if (!reason.is_string()) throw SchemaError("'reason' must be a string");
      try {
        report.violations.push_back(Violation{int_field(line, "i"), int_field(line, "s"), target,
                                              parse_violation_reason(reason.get<std::string>())});
      } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
      }
    }
    const Json& valid = field(j, "valid");
    if (!valid.is_boolean() || valid.get<bool>() != report.valid()) {
      throw SchemaError("'valid' must be a boolean consistent with 'violations'");
    }
    return report;
  });
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace gradenorm
