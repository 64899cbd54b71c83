#include "gradenorm/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "gradenorm/certificate.hpp"
#include "gradenorm/expansion.hpp"
#include "gradenorm/graded_space.hpp"
#include "gradenorm/json_io.hpp"
#include "gradenorm/numeric_search.hpp"

namespace gradenorm::cli {

namespace {

constexpr int kMaxLength = 1000;

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

GradedVector random_vector(const GradingSignature& sig, std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<std::vector<double>> components;
  for (int i = 0; i < sig.r(); ++i) {
    std::vector<double> level(dim);
    for (double& c : level) c = normal(rng);
    components.push_back(std::move(level));
  }
  return GradedVector(sig, std::move(components));
}

struct Options {
  std::string input = "-";
  std::string x_file;
  std::string y_file;
  std::string out_file;
  std::string cert_file;
  double t = 1.0;
  int r = 0;
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::size_t dim = 3;
  bool json = false;
  bool orbits = false;
};

int cmd_norm(const Options& opt, std::ostream& out) {
  const GradedVector x = graded_vector_from_json(read_json_file(opt.input));
  const double value = hnorm(x);
  if (opt.json) {
    out << Json{{"r", x.signature().r()}, {"norm", value}}.dump() << '\n';
  } else {
    out << fmt_double(value) << '\n';
  }
  return kSuccess;
}

int cmd_dilate(const Options& opt, std::ostream& out) {
  const GradedVector x = graded_vector_from_json(read_json_file(opt.input));
  if (opt.t == 0.0) throw SchemaError("--t must be nonzero");
  out << to_json(dilate(opt.t, x)).dump() << '\n';
  return kSuccess;
}

int cmd_triangle_sample(const Options& opt, std::ostream& out) {
  std::optional<GradedVector> x;
  std::optional<GradedVector> y;
  if (!opt.x_file.empty() || !opt.y_file.empty()) {
    if (opt.x_file.empty() || opt.y_file.empty()) throw SchemaError("--x and --y go together");
    x = graded_vector_from_json(read_json_file(opt.x_file));
    y = graded_vector_from_json(read_json_file(opt.y_file));
    if (!(x->signature() == y->signature()) || x->dims() != y->dims()) {
      throw SchemaError("--x and --y live in different spaces");
    }
  } else {
    if (opt.r < 1) throw SchemaError("--r is required when no vectors are supplied");
    const GradingSignature sig(opt.r);
    std::mt19937_64 rng(opt.seed);
    x = random_vector(sig, opt.dim, rng);
    y = random_vector(sig, opt.dim, rng);
  }
  const double defect = triangle_defect(*x, *y);
  if (opt.json) {
    out << Json{{"x", to_json(*x)},
                {"y", to_json(*y)},
                {"norm_x", hnorm(*x)},
                {"norm_y", hnorm(*y)},
                {"norm_sum", hnorm(*x + *y)},
                {"defect", defect}}
               .dump()
        << '\n';
  } else {
    out << "|X|     = " << fmt_double(hnorm(*x)) << '\n'
        << "|Y|     = " << fmt_double(hnorm(*y)) << '\n'
        << "|X + Y| = " << fmt_double(hnorm(*x + *y)) << '\n'
        << "defect  = " << fmt_double(defect) << '\n';
  }
  return kSuccess;
}

int cmd_prove(const Options& opt, std::ostream& out, std::ostream& err) {
  const GradingSignature sig(opt.r);
  const SearchResult result = search_certificate(sig);
  if (const auto* infeasible = std::get_if<Infeasibility>(&result)) {
    if (opt.json) {
      out << Json{{"r", opt.r}, {"feasible", false}, {"hall_witness", to_json(*infeasible)}}.dump(2) << '\n';
    } else {
      out << "r = " << opt.r << ": no certificate under the Hoelder/Muirhead schema\n"
          << "  level " << infeasible->level << ": orbits s = "
          << Json(infeasible->deficient_splits).dump() << " reach only targets k = "
          << Json(infeasible->reachable_targets).dump() << '\n';
    }
    return kNegative;
  }
  const Certificate& cert = std::get<Certificate>(result);
  // The searcher is untrusted.
  const CheckReport check = check_certificate(sig, cert);
  if (!check.valid()) {
    err << "internal error: search produced a certificate that does not check\n"
        << to_json(check).dump(2) << '\n';
    return kNegative;
  }
  if (!opt.out_file.empty()) {
    std::ofstream file(opt.out_file);
    if (!file) throw SchemaError("cannot write '" + opt.out_file + "'");
    file << to_json(cert).dump(2) << '\n';
    err << "wrote " << cert.lines.size() << " lines to " << opt.out_file << '\n';
  }
  const CertificateReport report = certificate_to_report(sig, cert);
  if (opt.json) {
    out << Json{{"r", opt.r}, {"feasible", true}, {"certificate", to_json(cert)}, {"report", to_json(report)}}
               .dump(2)
        << '\n';
  } else {
    out << render_report(report);
  }
  return kSuccess;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const Certificate cert = certificate_from_json(read_json_file(opt.cert_file));
  CheckReport report;
  try {
    report = check_certificate(GradingSignature(cert.r), cert);
  } catch (const std::domain_error& e) {
    throw SchemaError(e.what());
  }
  out << to_json(report).dump(opt.json ? -1 : 2) << '\n';
  return report.valid() ? kSuccess : kNegative;
}

int cmd_hunt(const Options& opt, std::ostream& out, std::ostream& err) {
  SearchConfig config;
  config.r = opt.r;
  config.sample_count = opt.samples;
  config.rng_seed = opt.seed;
  err << "hunting r = " << opt.r << " over " << opt.samples << " samples (seed " << opt.seed << ")\n";
  const SearchOutcome outcome = hunt(config);
  if (opt.json) {
    out << to_json(outcome).dump(2) << '\n';
  } else {
    out << (outcome.violation_found ? "VIOLATION found" : "no violation") << " for r = " << opt.r << '\n'
        << "  evaluations         " << outcome.samples_evaluated << '\n'
        << "  max relative defect " << fmt_double(outcome.max_relative_defect) << '\n'
        << "  max defect          " << fmt_double(outcome.max_defect) << '\n'
        << "  at a = " << to_json(outcome.argmax.a)["a"].dump() << '\n'
        << "     b = " << to_json(outcome.argmax.b)["a"].dump() << '\n';
  }
  return outcome.violation_found ? kNegative : kSuccess;
}

int cmd_report(const Options& opt, std::ostream& out) {
  if (opt.orbits) {
    if (opt.r < 1) throw SchemaError("--orbits needs --r");
    const GradingSignature sig(opt.r);
    Json lhs = Json::array();
    Json rhs = Json::array();
    Json shadows = Json::array();
    for (const auto& o : lhs_orbits(sig)) lhs.push_back(to_json(o));
    for (const auto& o : rhs_orbits(sig)) rhs.push_back(to_json(o));
    for (int k = 1; k <= sig.r(); ++k) {
      for (int i = 1; i <= sig.r(); ++i) shadows.push_back(to_json(shadow(sig, k, i)));
    }
    out << Json{{"r", opt.r}, {"lhs", lhs}, {"rhs", rhs}, {"shadows", shadows}}.dump(opt.json ? -1 : 2) << '\n';
    return kSuccess;
  }
  if (opt.cert_file.empty()) throw SchemaError("report needs a certificate file or --orbits");
  const Certificate cert = certificate_from_json(read_json_file(opt.cert_file));
  const GradingSignature sig(cert.r);
  CheckReport check;
  try {
    check = check_certificate(sig, cert);
  } catch (const std::domain_error& e) {
    throw SchemaError(e.what());
  }
  if (!check.valid()) {
    out << to_json(check).dump(opt.json ? -1 : 2) << '\n';
    return kNegative;
  }
  const CertificateReport report = certificate_to_report(sig, cert);
  out << (opt.json ? to_json(report).dump(2) + "\n" : render_report(report));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneous norms on graded spaces and triangle-inequality certificates", "gradenorm"};
  app.require_subcommand(1);
  Options opt;

  auto* norm = app.add_subcommand("norm", "Evaluate the norm of a GradedVector JSON");
  norm->add_option("--input", opt.input, "GradedVector JSON file ('-' for stdin)");
  norm->add_flag("--json", opt.json, "JSON output");

  auto* dil = app.add_subcommand("dilate", "Apply the dilation alpha_t to a GradedVector JSON");
  dil->add_option("--t", opt.t, "Nonzero dilation factor")->required();
  dil->add_option("--input", opt.input, "GradedVector JSON file ('-' for stdin)");
  dil->add_flag("--json", opt.json, "JSON output (always on)");

  auto* tri = app.add_subcommand("triangle-sample", "Triangle defect for a supplied or sampled pair");
  tri->add_option("--x", opt.x_file, "GradedVector JSON for X");
  tri->add_option("--y", opt.y_file, "GradedVector JSON for Y");
  tri->add_option("--r", opt.r, "Length when sampling")->check(CLI::Range(1, kMaxLength));
  tri->add_option("--seed", opt.seed, "Sampling seed");
  tri->add_option("--dim", opt.dim, "Per-level dimension when sampling")->check(CLI::Range(1, 1 << 20));
  tri->add_flag("--json", opt.json, "JSON output");

  auto* prove = app.add_subcommand("prove", "Search a triangle-inequality certificate for length r");
  prove->add_option("--r", opt.r, "Length r >= 1")->required()->check(CLI::Range(1, kMaxLength));
  prove->add_option("--out", opt.out_file, "Write the certificate JSON here");
  prove->add_flag("--json", opt.json, "JSON output");

  auto* check = app.add_subcommand("check", "Check a certificate JSON file");
  check->add_option("file", opt.cert_file, "Certificate JSON")->required();
  check->add_flag("--json", opt.json, "Compact JSON output");

  auto* hunt_cmd = app.add_subcommand("hunt", "Search numerically for a scalar triangle violation");
  hunt_cmd->add_option("--r", opt.r, "Length r >= 1")->required()->check(CLI::Range(1, kMaxLength));
  hunt_cmd->add_option("--samples", opt.samples, "Random samples")->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--seed", opt.seed, "RNG seed");
  hunt_cmd->add_flag("--json", opt.json, "JSON output");

  auto* report = app.add_subcommand("report", "Render a certificate as grouped inequalities");
  report->add_option("file", opt.cert_file, "Certificate JSON");
  report->add_flag("--orbits", opt.orbits, "List orbits and shadows for --r instead");
  report->add_option("--r", opt.r, "Length for --orbits")->check(CLI::Range(1, kMaxLength));
  report->add_flag("--json", opt.json, "JSON output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (norm->parsed()) return cmd_norm(opt, out);
    if (dil->parsed()) return cmd_dilate(opt, out);
    if (tri->parsed()) return cmd_triangle_sample(opt, out);
    if (prove->parsed()) return cmd_prove(opt, out, err);
    if (check->parsed()) return cmd_check(opt, out);
    if (hunt_cmd->parsed()) return cmd_hunt(opt, out, err);
    if (report->parsed()) return cmd_report(opt, out);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gradenorm::cli
