#include "gradenorm/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gradenorm {

std::string_view to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::coefficient:
      return "coefficient";
    case ViolationReason::majorization:
      return "majorization";
    case ViolationReason::slot_conflict:
      return "slot_conflict";
    case ViolationReason::incomplete:
      return "incomplete";
    case ViolationReason::middle_mismatch:
      return "middle_mismatch";
  }
  return "unknown";
}

ViolationReason parse_violation_reason(std::string_view name) {
  for (auto reason : {ViolationReason::coefficient, ViolationReason::majorization,
                      ViolationReason::slot_conflict, ViolationReason::incomplete,
                      ViolationReason::middle_mismatch}) {
    if (to_string(reason) == name) return reason;
  }
  throw std::invalid_argument("unknown violation reason '" + std::string(name) + "'");
}

std::optional<ViolationReason> check_line(const GradingSignature& sig, const CertificateLine& line) {
  const TermOrbit orbit = lhs_orbit(sig, line.level, line.split);
  const RhsOrbit rhs = rhs_orbit(sig, line.target);
  if (orbit.is_middle != rhs.is_middle) return ViolationReason::middle_mismatch;
  if (orbit.coefficient > rhs.coefficient) return ViolationReason::coefficient;
  if (!majorizes(shadow(sig, line.target, line.level).exponents, orbit.exponents())) {
    return ViolationReason::majorization;
  }
  return std::nullopt;
}

CheckReport check_certificate(const GradingSignature& sig, const Certificate& cert) {
  if (cert.r != sig.r()) {
    throw std::domain_error("check_certificate: certificate is for r=" + std::to_string(cert.r) +
                            ", expected r=" + std::to_string(sig.r()));
  }
  CheckReport report;
  std::set<std::pair<int, int>> used_slots;   // (k, i)
  std::set<std::pair<int, int>> seen_orbits;  // (i, s)
  for (const CertificateLine& line : cert.lines) {
    const auto emit = [&](ViolationReason reason) {
      report.violations.push_back(Violation{line.level, line.split, line.target, reason});
    };
    if (auto reason = check_line(sig, line)) emit(*reason);
    if (!seen_orbits.emplace(line.level, line.split).second) emit(ViolationReason::incomplete);
    if (!used_slots.emplace(line.target, line.level).second) emit(ViolationReason::slot_conflict);
  }
  for (const TermOrbit& orbit : lhs_orbits(sig)) {
    if (!seen_orbits.contains({orbit.level, orbit.split})) {
      report.violations.push_back(
          Violation{orbit.level, orbit.split, std::nullopt, ViolationReason::incomplete});
    }
  }
  return report;
}

OrbitMatching match_orbits(const std::vector<std::vector<int>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<std::optional<int>> assignment(static_cast<std::size_t>(n));
  std::map<int, int> owner;  // target -> orbit

  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) {
    for (int t : edges[static_cast<std::size_t>(u)]) {
      const auto it = owner.find(t);
      if (it == owner.end()) {
        owner[t] = u;
        assignment[static_cast<std::size_t>(u)] = t;
        return true;
      }
      const int other = it->second;
      if (visited[static_cast<std::size_t>(other)]) continue;
      visited[static_cast<std::size_t>(other)] = 1;
      if (augment(other)) {
        owner[t] = u;
        assignment[static_cast<std::size_t>(u)] = t;
        return true;
      }
    }
    return false;
  };

  for (int u = 0; u < n; ++u) {
    visited.assign(static_cast<std::size_t>(n), 0);
    visited[static_cast<std::size_t>(u)] = 1;
    augment(u);
  }

  OrbitMatching result{std::move(assignment), {}, {}};
  const auto first_free =
      std::find(result.assignment.begin(), result.assignment.end(), std::nullopt);
  if (first_free == result.assignment.end()) return result;

  // Alternating-path closure from an unmatched orbit. Every target reached is
  // matched (the matching is maximum), so |N(Z)| = |Z| - 1.
  std::set<int> witness{static_cast<int>(first_free - result.assignment.begin())};
  std::set<int> targets;
  std::vector<int> frontier(witness.begin(), witness.end());
  while (!frontier.empty()) {
    const int u = frontier.back();
    frontier.pop_back();
    for (int t : edges[static_cast<std::size_t>(u)]) {
      targets.insert(t);
      const int other = owner.at(t);
      if (witness.insert(other).second) frontier.push_back(other);
    }
  }
  result.hall_witness.assign(witness.begin(), witness.end());
  result.witness_targets.assign(targets.begin(), targets.end());
  return result;
}

std::vector<int> preferred_targets(const GradingSignature& sig, int level, int split) {
  const int e = sig.exponent(level);
  std::vector<int> targets;
  for (int k = 1; k <= sig.r(); ++k) {
    if (!check_line(sig, CertificateLine{level, split, k})) targets.push_back(k);
  }
  // |k/2r - s/e| compared over the common denominator 2r*e.
  const auto distance = [&](int k) { return std::abs(k * e - split * sig.degree()); };
  std::stable_sort(targets.begin(), targets.end(), [&](int lhs, int rhs) {
    return std::pair(distance(lhs), lhs) < std::pair(distance(rhs), rhs);
  });
  return targets;
}

SearchResult search_certificate(const GradingSignature& sig) {
  Certificate cert{sig.r(), {}};
  for (int i = 1; i <= sig.r(); ++i) {
    const int orbit_count = sig.exponent(i) / 2;
    std::vector<std::vector<int>> edges;
    for (int s = 1; s <= orbit_count; ++s) edges.push_back(preferred_targets(sig, i, s));
    const OrbitMatching matching = match_orbits(edges);
    if (!matching.saturated()) {
      Infeasibility infeasible{i, {}, matching.witness_targets};
      for (int u : matching.hall_witness) infeasible.deficient_splits.push_back(u + 1);
      return infeasible;
    }
    for (int s = 1; s <= orbit_count; ++s) {
      cert.lines.push_back(CertificateLine{i, s, *matching.assignment[static_cast<std::size_t>(s - 1)]});
    }
  }
  return cert;
}

namespace {

std::string power(std::string_view base, int level, const Rational& exponent) {
  if (exponent == 0) return "";
  std::string out(base);
  if (level > 0) out += std::to_string(level);
  if (exponent != 1) out += "^" + exponent.to_string();
  return out;
}

std::string monomial(std::string_view x, std::string_view y, int level, const Rational& px,
                     const Rational& py) {
  return power(x, level, px) + power(y, level, py);
}

std::string orbit_display(const TermOrbit& orbit) {
  const ExponentPair ex = orbit.exponents();
  const std::string c = orbit.coefficient.get_str();
  if (orbit.is_middle) return c + monomial("a", "b", orbit.level, ex.hi(), ex.lo());
  return c + "(" + monomial("a", "b", orbit.level, ex.hi(), ex.lo()) + " + " +
         monomial("a", "b", orbit.level, ex.lo(), ex.hi()) + ")";
}

std::string rhs_display(const RhsOrbit& rhs) {
  const ExponentPair ex = rhs.exponents();
  const std::string c = rhs.coefficient.get_str();
  if (rhs.is_middle) return c + monomial("A", "B", 0, ex.hi(), ex.lo());
  return c + "(" + monomial("A", "B", 0, ex.hi(), ex.lo()) + " + " +
         monomial("A", "B", 0, ex.lo(), ex.hi()) + ")";
}

}  // namespace

CertificateReport certificate_to_report(const GradingSignature& sig, const Certificate& cert) {
  if (!check_certificate(sig, cert).valid()) {
    throw std::domain_error("certificate_to_report: certificate does not check");
  }
  std::map<int, std::vector<CertificateLine>> by_target;
  for (const CertificateLine& line : cert.lines) by_target[line.target].push_back(line);

  CertificateReport report{sig.r(), {}};
  for (auto& [k, lines] : by_target) {
    std::sort(lines.begin(), lines.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.level < rhs.level; });
    ReportGroup group{rhs_orbit(sig, k), {}, {}};
    std::string lhs;
    for (const CertificateLine& line : lines) {
      ReportTerm term{lhs_orbit(sig, line.level, line.split), shadow(sig, k, line.level)};
      if (!lhs.empty()) lhs += " + ";
      lhs += orbit_display(term.orbit);
      group.terms.push_back(std::move(term));
    }
    group.display = lhs + " ≤ " + rhs_display(group.rhs);
    report.groups.push_back(std::move(group));
  }
  return report;
}

std::string render_report(const CertificateReport& report) {
  std::ostringstream os;
  os << "r = " << report.r << ": " << report.groups.size() << " groups\n";
  for (const ReportGroup& group : report.groups) {
    os << "  k = " << group.rhs.k << ":  " << group.display << '\n';
    for (const ReportTerm& term : group.terms) {
      os << "      level " << term.orbit.level << ", s = " << term.orbit.split << ": shadow "
         << term.shadow.exponents << " majorizes " << term.orbit.exponents() << '\n';
    }
  }
  return os.str();
}

}  // namespace gradenorm
