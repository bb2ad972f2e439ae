#include "report.hpp"

#include <chrono>
#include <cstring>

#include "asymptotics.hpp"

namespace casimir {

EnergyReport evaluate(double x, const EvalOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const core::Geometry geom = core::geometry_from_aspect_ratio(x);

  EnergyReport report;
  report.x = x;
  report.z = geom.z;
  report.mu1 = geom.mu1;
  report.rel_tol = options.rel_tol;

  const core::SeriesTolerance series_tol{
      std::min(options.rel_tol, 1e-12), 10'000'000};
  report.phi_d = core::phi_dirichlet(geom, series_tol);
  report.phi_dr = core::phi_drude(geom, series_tol);

  bispherical::TruncationPolicy policy;
  policy.rel_tol = options.rel_tol;
  policy.jobs = options.jobs;
  policy.forced_l_max = options.forced_l_max;
  const bispherical::DeltaPhiResult delta = bispherical::delta_phi_numeric(x, policy);
  report.delta_phi = delta.value;
  report.l_max_used = delta.l_max_used;
  report.m_max_used = delta.m_max_used;

  report.phi_n = report.phi_d + report.delta_phi;
  report.phi_p = report.phi_d + report.phi_dr + report.delta_phi;
  report.phi_p_grounded = 2.0 * report.phi_d + report.delta_phi;

  // The short-distance channel needs no tighter tolerance than requested.
  core::SeriesTolerance short_tol;
  short_tol.rel_tol = std::max(options.rel_tol * 1e-2, 1e-12);
  report.delta_phi_short =
      asymptotics::delta_phi_short(x, asymptotics::QuadratureSpec{}, short_tol);

  report.beta_d = asymptotics::beta(core::Model::dirichlet, x, report.delta_phi,
                                    report.phi_d, report.phi_dr);
  report.beta_dr = asymptotics::beta(core::Model::drude, x, report.delta_phi,
                                     report.phi_d, report.phi_dr);
  report.beta_n = asymptotics::beta(core::Model::neumann, x, report.delta_phi,
                                    report.phi_d, report.phi_dr);
  report.beta_p = asymptotics::beta(core::Model::perfect, x, report.delta_phi,
                                    report.phi_d, report.phi_dr);

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return report;
}

const char* method_tag(const char* field) {
  static const struct {
    const char* name;
    const char* tag;
  } kTags[] = {
      {"x", "exact-series"},         {"z", "exact-series"},
      {"mu1", "exact-series"},       {"phi_d", "exact-series"},
      {"phi_dr", "exact-series"},    {"phi_n", "bispherical"},
      {"phi_p", "bispherical"},      {"phi_p_grounded", "bispherical"},
      {"delta_phi", "bispherical"},  {"delta_phi_short", "asymptotic"},
      {"beta_d", "composed"},        {"beta_dr", "composed"},
      {"beta_n", "composed"},        {"beta_p", "composed"},
  };
  for (const auto& entry : kTags) {
    if (std::strcmp(entry.name, field) == 0) return entry.tag;
  }
  return "composed";
}

}  // namespace casimir
