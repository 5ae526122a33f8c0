#include "liecurve/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace liecurve {

namespace {

nlohmann::json spectrum_json(const SpectrumReport& s) {
  auto out = nlohmann::json::array();
  for (const auto& c : s.clusters) out.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return out;
}

std::string spectrum_text(const SpectrumReport& s) {
  std::string out;
  for (const auto& c : s.clusters) {
    if (!out.empty()) out += ", ";
    out += format_double(c.value) + " x" + std::to_string(c.multiplicity);
  }
  return out;
}

}  // namespace

HypersurfaceReport make_report(int n, double theta, const SearchConfig& cfg, std::optional<double> cluster_tol) {
  const HypersurfaceFrame frame = build_hypersurface(n, theta);
  HypersurfaceReport r{};
  r.n = n;
  r.theta = theta;
  if (cluster_tol) {
    r.principal_curvatures = principal_curvatures(frame, *cluster_tol);
    r.principal_ricci = principal_ricci(frame, *cluster_tol);
  } else {
    r.principal_curvatures = principal_curvatures_closed(frame);
    r.principal_ricci = principal_ricci_closed(frame);
  }
  r.mean_curvature = mean_curvature(frame);
  r.flags = classify_extrinsic(frame);
  r.scalar = intrinsic_scalar(frame);
  r.sectional = sectional_extrema(frame, cfg);
  return r;
}

nlohmann::json report_to_json(const HypersurfaceReport& r) {
  nlohmann::json sec;
  sec["max_closed"] = r.sectional.max_closed;
  sec["min_closed"] = r.sectional.min_closed ? nlohmann::json(*r.sectional.min_closed) : nlohmann::json(nullptr);
  sec["max_search"] = r.sectional.max_search;
  sec["min_search"] = r.sectional.min_search;
  sec["min_method"] = r.sectional.min_closed ? "closed" : "search";
  sec["C"] = r.sectional.C;
  sec["D"] = r.sectional.D;

  nlohmann::json doc;
  doc["n"] = r.n;
  doc["theta"] = r.theta;
  doc["principal_curvatures"] = spectrum_json(r.principal_curvatures);
  doc["mean_curvature"] = r.mean_curvature;
  doc["flags"] = {{"minimal", r.flags.minimal},
                  {"austere", r.flags.austere},
                  {"hopf", r.flags.hopf},
                  {"hopf_off_norm", r.flags.hopf_off_norm}};
  doc["principal_ricci"] = spectrum_json(r.principal_ricci);
  doc["scalar"] = r.scalar;
  doc["sectional"] = std::move(sec);
  return doc;
}

std::string report_to_text(const HypersurfaceReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "Lie hypersurface S(theta) in CH^" << r.n << ", theta = " << format_double(r.theta) << " rad\n";
  out << "  principal curvatures  " << spectrum_text(r.principal_curvatures) << "\n";
  out << "  mean curvature        " << format_double(r.mean_curvature) << "\n";
  out << "  minimal               " << yes(r.flags.minimal) << "\n";
  out << "  austere               " << yes(r.flags.austere) << "\n";
  out << "  hopf                  " << yes(r.flags.hopf) << " (off-J xi norm " << format_double(r.flags.hopf_off_norm)
      << ")\n";
  out << "  principal Ricci       " << spectrum_text(r.principal_ricci) << "\n";
  out << "  scalar curvature      " << format_double(r.scalar) << "\n";
  out << "  max sectional         " << format_double(r.sectional.max_closed) << " (closed), "
      << format_double(r.sectional.max_search) << " (search)\n";
  out << "  min sectional         ";
  if (r.sectional.min_closed) out << format_double(*r.sectional.min_closed) << " (closed), ";
  out << format_double(r.sectional.min_search) << " (search)\n";
  out << "  C, D                  " << format_double(r.sectional.C) << ", " << format_double(r.sectional.D) << "\n";
  return out.str();
}

std::vector<double> theta_grid(int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 theta samples");
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) grid[static_cast<std::size_t>(i)] = kHalfPi * i / (samples - 1);
  grid.back() = kHalfPi;
  return grid;
}

SweepRow sweep_row(int n, double theta, const SearchConfig& cfg) {
  const HypersurfaceFrame frame = build_hypersurface(n, theta);
  const auto lambda = principal_curvature_values(theta);
  const auto alpha = principal_ricci_values(n, theta);
  const auto extrema = sectional_extrema_closed(frame);

  SweepRow row{};
  row.theta = theta;
  row.lambda1 = lambda[0];
  row.lambda2 = lambda[1];
  row.lambda3 = lambda[2];
  row.mean = mean_curvature_closed(n, theta);
  row.alpha1 = alpha[0];
  row.alpha2 = alpha[1];
  row.alpha3 = alpha[2];
  row.scalar = intrinsic_scalar(frame);
  row.k_max = extrema.max_closed;
  if (extrema.min_closed) {
    row.k_min = *extrema.min_closed;
  } else {
    row.k_min = search_min([&frame](const Plane& p) { return sectional(frame.sub, p); }, frame.dim(), cfg).value;
  }
  row.c_cmp = extrema.C;
  row.d_cmp = extrema.D;
  return row;
}

std::vector<SweepRow> sweep(int n, int samples, const SearchConfig& cfg) {
  std::vector<SweepRow> rows;
  for (const double theta : theta_grid(samples)) rows.push_back(sweep_row(n, theta, cfg));
  return rows;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "theta,lambda1,lambda2,lambda3,mean,alpha1,alpha2,alpha3,scalar,k_max,k_min,C,D\n";
  for (const auto& r : rows) {
    const double fields[] = {r.theta,  r.lambda1, r.lambda2, r.lambda3, r.mean,  r.alpha1, r.alpha2,
                             r.alpha3, r.scalar,  r.k_max,   r.k_min,   r.c_cmp, r.d_cmp};
    bool first = true;
    for (const double f : fields) {
      if (!first) out << ',';
      out << format_double(f);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace liecurve
