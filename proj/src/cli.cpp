#include "liecurve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "liecurve/report.hpp"
#include "liecurve/verification.hpp"

namespace liecurve {

namespace {

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a number: \"" + text + "\"");
  }
  if (used != text.size()) throw std::invalid_argument("not a number: \"" + text + "\"");
  return v;
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("seed must be a non-negative integer: \"" + text + "\"");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("seed out of range: \"" + text + "\"");
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LIECURVE_SEED")) return parse_seed(env);
  return kDefaultSeed;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int cmd_report(int n, const std::string& theta_text, const std::string& format, std::optional<double> cluster_tol,
               std::uint64_t seed, std::ostream& out) {
  SearchConfig cfg;
  cfg.seed = seed;
  const auto report = make_report(n, parse_theta(theta_text), cfg, cluster_tol);
  if (format == "json")
    out << report_to_json(report).dump(2) << "\n";
  else
    out << report_to_text(report);
  return kExitOk;
}

int cmd_sweep(int n, int samples, const std::string& path, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  if (n < 2) throw InvalidDimension("n must be at least 2");
  SearchConfig cfg;
  cfg.seed = seed;
  const auto rows = sweep(n, samples, cfg);
  if (path == "-") {
    write_sweep_csv(out, rows);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  write_sweep_csv(file, rows);
  file.close();
  if (!file) {
    err << "error: failed writing " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const auto results = run_verification(options);

  // One line per check name: worst deviation over all (n, theta).
  std::vector<std::string> names;
  for (const auto& r : results)
    if (std::find(names.begin(), names.end(), r.check) == names.end()) names.push_back(r.check);

  int failed = 0;
  for (const auto& name : names) {
    double worst = 0.0, threshold = 0.0;
    bool ok = true;
    for (const auto& r : results)
      if (r.check == name) {
        worst = std::max(worst, r.deviation);
        threshold = r.threshold;
        ok = ok && r.passed;
      }
    char line[160];
    std::snprintf(line, sizeof line, "%s  %-30s max deviation %s  (threshold %s)\n", ok ? "PASS" : "FAIL",
                  name.c_str(), format_sci(worst).c_str(), format_sci(threshold).c_str());
    out << line;
  }
  for (const auto& r : results) {
    if (r.passed) continue;
    ++failed;
    out << "failed: n=" << r.n << " theta=" << (r.theta ? format_double(*r.theta) : std::string("-"))
        << " check=" << r.check << " deviation=" << format_sci(r.deviation) << "\n";
  }
  out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

double parse_theta(const std::string& text) {
  static const std::string prefix = "deg:";
  if (text.rfind(prefix, 0) == 0) {
    const double deg = parse_number(text.substr(prefix.size()));
    if (deg == 90.0) return kHalfPi;
    return deg * (std::numbers::pi / 180.0);
  }
  return parse_number(text);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature of Lie hypersurfaces in complex hyperbolic space", "liecurve"};
  app.require_subcommand(1);

  int n = 2;
  std::string theta_text = "0";
  std::string format = "json";
  std::optional<double> cluster_tol;
  int samples = 101;
  std::string out_path;
  std::string seed_text;
  VerifyOptions verify;

  auto* report = app.add_subcommand("report", "Curvature report for one S(theta)");
  report->add_option("--n", n, "Complex dimension of CH^n (>= 2)")->required();
  report->add_option("--theta", theta_text, "Angle in radians, or deg:<value>")->required();
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  report->add_option("--cluster-tol", cluster_tol, "Cluster numerical spectra with this tolerance");
  report->add_option("--seed", seed_text, "Plane-search seed");

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate curvatures over theta in [0, pi/2] as CSV");
  sweep_cmd->add_option("--n", n, "Complex dimension of CH^n (>= 2)")->required();
  sweep_cmd->add_option("--samples", samples, "Number of theta samples, endpoints included")
      ->check(CLI::Range(2, 1000000));
  sweep_cmd->add_option("--out", out_path, "Output CSV path, or - for stdout")->required();
  sweep_cmd->add_option("--seed", seed_text, "Plane-search seed");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against the oracle and search");
  verify_cmd->add_option("--n-list", verify.n_list, "Complex dimensions to check")->delimiter(',');
  verify_cmd->add_option("--theta-samples", verify.theta_samples, "Theta grid size, endpoints included");
  verify_cmd->add_option("--tol", verify.tol, "Oracle-vs-closed-form threshold");
  verify_cmd->add_option("--search-tol", verify.search_tol, "Search-vs-closed-form threshold");
  verify_cmd->add_option("--seed", seed_text, "Seed for sampling and plane search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const std::uint64_t seed = seed_text.empty() ? default_seed() : parse_seed(seed_text);
    if (report->parsed()) return cmd_report(n, theta_text, format, cluster_tol, seed, out);
    if (sweep_cmd->parsed()) return cmd_sweep(n, samples, out_path, seed, out, err);
    verify.search.seed = seed;
    return cmd_verify(verify, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace liecurve
