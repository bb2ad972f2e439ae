// casimir: sphere-plate classical Casimir energies from the command line.
//
// Subcommands: eval, sweep, converge, compare.  Exit codes: 0 success,
// 2 usage error, 3 numerical failure.  Everything goes through the C API.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casimir.h"
#include "json.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct NumericalFailure {
  casimir_status status;
  std::string message;
};

void check(casimir_status status) {
  if (status == CASIMIR_OK) return;
  std::string msg = casimir_last_error_message();
  if (msg.empty()) msg = casimir_strerror(status);
  throw NumericalFailure{status, std::move(msg)};
}

// 17 significant digits: enough to round-trip any double.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

using OptionsPtr = std::unique_ptr<casimir_options, void (*)(casimir_options*)>;

OptionsPtr make_options(double rel_tol, int jobs, int forced_l_max = 0) {
  OptionsPtr opt(casimir_options_new(), &casimir_options_free);
  check(casimir_options_set_rel_tol(opt.get(), rel_tol));
  check(casimir_options_set_jobs(opt.get(), jobs));
  if (forced_l_max > 0) check(casimir_options_set_l_max(opt.get(), forced_l_max));
  return opt;
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "x",         "Z",        "mu1",       "phi_D",
      "phi_Dr",    "phi_N",    "phi_P",     "phi_P_grounded",
      "delta_phi", "delta_phi_short", "leading_correction",
      "beta_D",    "beta_Dr",  "beta_N",    "beta_P",
      "l_max_used", "m_max_used"};
  return cols;
}

std::vector<std::string> report_row(const casimir_report& r,
                                    double leading_correction) {
  return {fmt(r.x),
          fmt(r.z),
          fmt(r.mu1),
          fmt(r.phi_d),
          fmt(r.phi_dr),
          fmt(r.phi_n),
          fmt(r.phi_p),
          fmt(r.phi_p_grounded),
          fmt(r.delta_phi),
          fmt(r.delta_phi_short),
          fmt(leading_correction),
          fmt(r.beta_d),
          fmt(r.beta_dr),
          fmt(r.beta_n),
          fmt(r.beta_p),
          std::to_string(r.l_max_used),
          std::to_string(r.m_max_used)};
}

nlohmann::ordered_json report_json(const casimir_report& r) {
  nlohmann::ordered_json j;
  j["x"] = r.x;
  j["Z"] = r.z;
  j["mu1"] = r.mu1;
  j["phi_D"] = r.phi_d;
  j["phi_Dr"] = r.phi_dr;
  j["phi_N"] = r.phi_n;
  j["phi_P"] = r.phi_p;
  j["phi_P_grounded"] = r.phi_p_grounded;
  j["delta_phi"] = r.delta_phi;
  j["delta_phi_short"] = r.delta_phi_short;
  j["beta_D"] = r.beta_d;
  j["beta_Dr"] = r.beta_dr;
  j["beta_N"] = r.beta_n;
  j["beta_P"] = r.beta_p;
  j["l_max_used"] = r.l_max_used;
  j["m_max_used"] = r.m_max_used;
  j["rel_tol"] = r.rel_tol;
  j["wall_time_ms"] = r.wall_time_ms;
  j["methods"] = {{"phi_D", "exact-series"},
                  {"phi_Dr", "exact-series"},
                  {"phi_N", "bispherical"},
                  {"phi_P", "bispherical"},
                  {"phi_P_grounded", "bispherical"},
                  {"delta_phi", "bispherical"},
                  {"delta_phi_short", "asymptotic"}};
  return j;
}

void print_report_text(const casimir_report& r, std::ostream& out) {
  out << "x                = " << fmt(r.x) << "\n"
      << "Z                = " << fmt(r.z) << "\n"
      << "mu1              = " << fmt(r.mu1) << "\n"
      << "phi_D            = " << fmt(r.phi_d) << "  [exact-series]\n"
      << "phi_Dr           = " << fmt(r.phi_dr) << "  [exact-series]\n"
      << "phi_N            = " << fmt(r.phi_n) << "  [bispherical]\n"
      << "phi_P            = " << fmt(r.phi_p) << "  [bispherical]\n"
      << "phi_P_grounded   = " << fmt(r.phi_p_grounded) << "  [bispherical]\n"
      << "delta_phi        = " << fmt(r.delta_phi) << "  [bispherical]\n"
      << "delta_phi_short  = " << fmt(r.delta_phi_short) << "  [asymptotic]\n"
      << "beta_D           = " << fmt(r.beta_d) << "\n"
      << "beta_Dr          = " << fmt(r.beta_dr) << "\n"
      << "beta_N           = " << fmt(r.beta_n) << "\n"
      << "beta_P           = " << fmt(r.beta_p) << "\n"
      << "l_max_used       = " << r.l_max_used << "\n"
      << "m_max_used       = " << r.m_max_used << "\n"
      << "rel_tol          = " << fmt(r.rel_tol) << "\n"
      << "wall_time_ms     = " << fmt(r.wall_time_ms) << "\n";
}

int cmd_eval(double x, double rel_tol, int jobs, const std::string& format) {
  auto opt = make_options(rel_tol, jobs);
  casimir_report report{};
  check(casimir_evaluate(x, opt.get(), &report));
  double leading = 0.0;
  check(casimir_leading_correction(x, &leading));

  if (format == "json") {
    std::cout << report_json(report).dump(2) << "\n";
  } else if (format == "csv") {
    const auto& cols = report_columns();
    for (size_t i = 0; i < cols.size(); ++i) {
      std::cout << cols[i] << (i + 1 < cols.size() ? "," : "\n");
    }
    const auto row = report_row(report, leading);
    for (size_t i = 0; i < row.size(); ++i) {
      std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
  } else {
    print_report_text(report, std::cout);
  }
  return 0;
}

int cmd_sweep(double x_min, double x_max, int points, bool log_spacing,
              double rel_tol, int jobs, const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitNumerical;
  }
  bool complete = false;
  // Partial sweep output is worse than none: remove the file unless every
  // row was written.
  struct Cleanup {
    const std::string& path;
    const bool& ok;
    ~Cleanup() {
      if (!ok) {
        std::error_code ec;
        std::filesystem::remove(path, ec);
      }
    }
  } cleanup{out_path, complete};

  const auto& cols = report_columns();
  std::ostringstream buffer;
  for (size_t i = 0; i < cols.size(); ++i) {
    buffer << cols[i] << (i + 1 < cols.size() ? "," : "\n");
  }

  auto opt = make_options(rel_tol, jobs);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    const double x = log_spacing
                         ? x_min * std::pow(x_max / x_min, t)
                         : x_min + t * (x_max - x_min);
    casimir_report report{};
    check(casimir_evaluate(x, opt.get(), &report));
    double leading = 0.0;
    check(casimir_leading_correction(x, &leading));
    const auto row = report_row(report, leading);
    for (size_t j = 0; j < row.size(); ++j) {
      buffer << row[j] << (j + 1 < row.size() ? "," : "\n");
    }
  }
  // Single writer after all computation: flush the whole sweep at once.
  out << buffer.str();
  out.flush();
  complete = out.good();
  if (!complete) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kExitNumerical;
  }
  std::cout << "wrote " << points << " rows to " << out_path << "\n";
  return 0;
}

int cmd_converge(double x, const std::vector<int>& l_max_list, double rel_tol,
                 int jobs, const std::string& format) {
  std::vector<double> values;
  values.reserve(l_max_list.size());
  for (int l_max : l_max_list) {
    auto opt = make_options(rel_tol, jobs, l_max);
    double value = 0.0;
    check(casimir_delta_phi(x, opt.get(), &value, nullptr, nullptr));
    values.push_back(value);
  }

  double achieved = 0.0;
  bool converged = false;
  if (values.size() >= 2) {
    const double last = values.back();
    achieved = std::abs(last - values[values.size() - 2]) / std::abs(last);
    converged = achieved < rel_tol;
  }

  if (format == "json") {
    nlohmann::ordered_json j;
    j["x"] = x;
    j["history"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < values.size(); ++i) {
      j["history"].push_back(
          {{"l_max", l_max_list[i]}, {"delta_phi", values[i]}});
    }
    j["converged"] = converged;
    j["achieved_tol"] = achieved;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "x = " << fmt(x) << "\n";
    std::cout << "l_max  delta_phi\n";
    for (size_t i = 0; i < values.size(); ++i) {
      std::cout << l_max_list[i] << "  " << fmt(values[i]) << "\n";
    }
    std::cout << "converged = " << (converged ? "true" : "false")
              << "  achieved_tol = " << fmt(achieved) << "\n";
  }
  return 0;
}

int cmd_compare(double x, double rel_tol, int jobs, const std::string& format) {
  auto opt = make_options(rel_tol, jobs);
  double numeric = 0.0;
  int l_max_used = 0;
  int m_max_used = 0;
  check(casimir_delta_phi(x, opt.get(), &numeric, &l_max_used, &m_max_used));
  double asym = 0.0;
  check(casimir_delta_phi_short(x, &asym));
  double leading = 0.0;
  check(casimir_leading_correction(x, &leading));

  const double dev_short = 100.0 * std::abs(asym - numeric) / std::abs(numeric);
  const double dev_leading =
      100.0 * std::abs(leading - numeric) / std::abs(numeric);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["x"] = x;
    j["delta_phi"] = numeric;
    j["delta_phi_short"] = asym;
    j["leading_correction"] = leading;
    j["short_deviation_percent"] = dev_short;
    j["leading_deviation_percent"] = dev_leading;
    j["l_max_used"] = l_max_used;
    j["m_max_used"] = m_max_used;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "x                   = " << fmt(x) << "\n"
              << "delta_phi (numeric) = " << fmt(numeric) << "  (l_max "
              << l_max_used << ", m_max " << m_max_used << ")\n"
              << "delta_phi_short     = " << fmt(asym) << "  (deviation "
              << fmt(dev_short) << " %)\n"
              << "leading_correction  = " << fmt(leading) << "  (deviation "
              << fmt(dev_leading) << " %)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical Casimir interaction of a conducting sphere and plate"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("--jobs", jobs, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  double x = 0.0;
  double rel_tol = 1e-9;
  std::string format = "text";
  const auto format_check = CLI::IsMember({"json", "csv", "text"});

  auto* eval = app.add_subcommand("eval", "Evaluate all channels at one x");
  eval->add_option("--x", x, "Aspect ratio d/R")->required();
  eval->add_option("--tol", rel_tol, "Relative tolerance");
  eval->add_option("--format", format, "json|csv|text")->check(format_check);

  double x_min = 0.0, x_max = 0.0;
  int points = 0;
  bool log_spacing = false;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Sweep x and write a CSV file");
  sweep->add_option("--x-min", x_min, "Lower aspect ratio")->required();
  sweep->add_option("--x-max", x_max, "Upper aspect ratio")->required();
  sweep->add_option("--points", points, "Number of samples")->required();
  sweep->add_flag("--log", log_spacing, "Logarithmic spacing");
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  sweep->add_option("--tol", rel_tol, "Relative tolerance");

  std::string lmax_csv;
  auto* converge = app.add_subcommand(
      "converge", "delta_phi at forced truncation orders");
  converge->add_option("--x", x, "Aspect ratio d/R")->required();
  converge->add_option("--lmax", lmax_csv, "Comma-separated l_max list")
      ->required();
  converge->add_option("--tol", rel_tol, "Relative tolerance");
  converge->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* compare =
      app.add_subcommand("compare", "Numeric vs asymptotic delta_phi");
  compare->add_option("--x", x, "Aspect ratio d/R")->required();
  compare->add_option("--tol", rel_tol, "Relative tolerance");
  compare->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // Post-parse validation beyond what CLI11 expresses.
  auto usage_error = [](const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
  };
  if ((eval->parsed() || converge->parsed() || compare->parsed()) && !(x > 0.0)) {
    return usage_error("--x must be positive");
  }
  if (!(rel_tol > 0.0) || rel_tol >= 1.0) {
    return usage_error("--tol must be in (0, 1)");
  }

  std::vector<int> l_max_list;
  if (converge->parsed()) {
    std::stringstream ss(lmax_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size() || v <= 0) throw std::invalid_argument(item);
        l_max_list.push_back(v);
      } catch (const std::exception&) {
        return usage_error("--lmax entries must be positive integers");
      }
    }
    if (l_max_list.empty()) return usage_error("--lmax list is empty");
    for (size_t i = 1; i < l_max_list.size(); ++i) {
      if (l_max_list[i] <= l_max_list[i - 1]) {
        return usage_error("--lmax list must be strictly ascending");
      }
    }
  }
  if (sweep->parsed()) {
    if (!(x_min > 0.0) || !(x_max > x_min)) {
      return usage_error("need 0 < --x-min < --x-max");
    }
    if (points < 2) return usage_error("--points must be at least 2");
  }

  try {
    if (eval->parsed()) return cmd_eval(x, rel_tol, jobs, format);
    if (sweep->parsed()) {
      return cmd_sweep(x_min, x_max, points, log_spacing, rel_tol, jobs,
                       out_path);
    }
    if (converge->parsed()) {
      return cmd_converge(x, l_max_list, rel_tol, jobs, format);
    }
    if (compare->parsed()) return cmd_compare(x, rel_tol, jobs, format);
  } catch (const NumericalFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
