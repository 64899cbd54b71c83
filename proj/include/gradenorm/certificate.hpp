#pragma once

// Proof certificates for the scalar triangle inequality of length r.
//
// A certificate assigns every left-hand orbit (i, s) to a right-hand orbit k.
// It is a proof when, for each line,
//   * middle orbits go to the middle term and only there (s == e_i/2 iff k == r),
//   * binom(e_i, s) <= binom(2r, k),
//   * the Hoelder shadow of k at level i majorizes (e_i - s, s),
// and no (k, i) shadow slot is used twice. Then for each k
//   sum_lines c_L * orbit(a_i, b_i) <= c_R * sum_i shadow_{k,i}(a_i, b_i)
//                                   <= c_R * (A^{2r-k} B^k + A^k B^{2r-k})
// by two-variable Muirhead followed by Hoelder with exponents 2r/(2r-k), 2r/k,
// and summing over k together with the cancelled pure terms gives
// sum_i (a_i + b_i)^{e_i} <= (A + B)^{2r}.
//
// check_certificate is the trusted kernel and uses exact arithmetic only.
// search_certificate is untrusted; callers re-check its output.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gradenorm/expansion.hpp"
#include "gradenorm/graded_space.hpp"

namespace gradenorm {

struct CertificateLine {
  int level = 0;   // i
  int split = 0;   // s
  int target = 0;  // k

  friend bool operator==(const CertificateLine&, const CertificateLine&) = default;
};

struct Certificate {
  int r = 0;
  std::vector<CertificateLine> lines;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class ViolationReason { coefficient, majorization, slot_conflict, incomplete, middle_mismatch };

std::string_view to_string(ViolationReason reason);
/// Throws std::invalid_argument for an unknown name.
ViolationReason parse_violation_reason(std::string_view name);

struct Violation {
  int level = 0;
  int split = 0;
  /// Absent for an orbit that no line covers.
  std::optional<int> target;
  ViolationReason reason = ViolationReason::incomplete;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// nullopt when the line is a valid comparison. Throws std::domain_error for
/// indices outside 1 <= i <= r, 1 <= s <= e_i/2, 1 <= k <= r.
std::optional<ViolationReason> check_line(const GradingSignature& sig, const CertificateLine& line);

/// Throws std::domain_error when cert.r != sig.r() or a line is out of range.
CheckReport check_certificate(const GradingSignature& sig, const Certificate& cert);

/// Outcome of one bipartite matching instance: orbits 0..n-1 on the left,
/// targets on the right.
struct OrbitMatching {
  /// assignment[u] is the target of orbit u, or nullopt when unsaturated.
  std::vector<std::optional<int>> assignment;
  /// Empty when every orbit is matched; otherwise a set Z of orbits whose
  /// joint neighbourhood is strictly smaller than Z.
  std::vector<int> hall_witness;
  /// Neighbourhood of hall_witness.
  std::vector<int> witness_targets;

  bool saturated() const { return hall_witness.empty(); }
};

/// Maximum bipartite matching by augmenting paths. `edges[u]` lists the
/// admissible targets of orbit u in preference order; orbits are processed in
/// index order and targets tried in list order, so the result is deterministic.
OrbitMatching match_orbits(const std::vector<std::vector<int>>& edges);

/// Feasible targets of orbit (i, s) under check_line, in search preference
/// order: smallest |k/2r - s/e_i| first, then smaller k.
std::vector<int> preferred_targets(const GradingSignature& sig, int level, int split);

struct Infeasibility {
  int level = 0;
  /// Splits s of the deficient orbit subset at this level.
  std::vector<int> deficient_splits;
  /// Union of their admissible targets; smaller than deficient_splits.
  std::vector<int> reachable_targets;
};

using SearchResult = std::variant<Certificate, Infeasibility>;

/// Solves one matching per level (levels never compete for slots since a slot
/// is a (k, i) pair). Returns a certificate, or the first level that cannot be
/// saturated with its Hall witness.
SearchResult search_certificate(const GradingSignature& sig);

struct ReportTerm {
  TermOrbit orbit;
  ShadowPair shadow;
};

struct ReportGroup {
  RhsOrbit rhs;
  std::vector<ReportTerm> terms;
  /// e.g. "56(a2^5b2^3 + a2^3b2^5) + ... ≤ 120(A^7B^3 + A^3B^7)"
  std::string display;
};

struct CertificateReport {
  int r = 0;
  /// One group per target k that some line uses, ascending k.
  std::vector<ReportGroup> groups;
};

/// Throws std::domain_error when the certificate does not check.
CertificateReport certificate_to_report(const GradingSignature& sig, const Certificate& cert);

/// Multi-line human rendering of a report.
std::string render_report(const CertificateReport& report);

}  // namespace gradenorm
