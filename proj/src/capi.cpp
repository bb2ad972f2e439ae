#include "casimir.h"

#include <exception>
#include <string>

#include "asymptotics.hpp"
#include "bispherical.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "report.hpp"

namespace {

thread_local std::string g_last_error;

casimir_status translate_current_exception() {
  try {
    throw;
  } catch (const casimir::DomainError& e) {
    g_last_error = e.what();
    return CASIMIR_ERR_DOMAIN;
  } catch (const casimir::ConvergenceError& e) {
    g_last_error = e.what();
    return CASIMIR_ERR_CONVERGENCE;
  } catch (const casimir::CapExceededError& e) {
    g_last_error = e.what();
    return CASIMIR_ERR_CAP;
  } catch (const casimir::NumericalError& e) {
    g_last_error = e.what();
    return CASIMIR_ERR_NUMERICAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CASIMIR_ERR_NUMERICAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CASIMIR_ERR_NUMERICAL;
  }
}

template <typename Fn>
casimir_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CASIMIR_OK;
  } catch (...) {
    return translate_current_exception();
  }
}

casimir::EvalOptions to_eval_options(const casimir_options* opt);

}  // namespace

struct casimir_options {
  casimir::EvalOptions eval;
};

namespace {

casimir::EvalOptions to_eval_options(const casimir_options* opt) {
  return opt ? opt->eval : casimir::EvalOptions{};
}

casimir::bispherical::TruncationPolicy to_policy(const casimir_options* opt) {
  casimir::bispherical::TruncationPolicy policy;
  if (opt) {
    policy.rel_tol = opt->eval.rel_tol;
    policy.jobs = opt->eval.jobs;
    policy.forced_l_max = opt->eval.forced_l_max;
  }
  return policy;
}

casimir::core::Model to_model(casimir_model model) {
  switch (model) {
    case CASIMIR_MODEL_DIRICHLET:
      return casimir::core::Model::dirichlet;
    case CASIMIR_MODEL_DRUDE:
      return casimir::core::Model::drude;
    case CASIMIR_MODEL_NEUMANN:
      return casimir::core::Model::neumann;
    case CASIMIR_MODEL_PERFECT:
      return casimir::core::Model::perfect;
  }
  throw casimir::DomainError("invalid casimir_model value");
}

}  // namespace

casimir_options* casimir_options_new(void) { return new casimir_options; }

void casimir_options_free(casimir_options* opt) { delete opt; }

casimir_status casimir_options_set_rel_tol(casimir_options* opt,
                                           double rel_tol) {
  if (!opt) return CASIMIR_ERR_INVALID_HANDLE;
  if (!(rel_tol > 0.0) || rel_tol >= 1.0) {
    g_last_error = "rel_tol must be in (0, 1)";
    return CASIMIR_ERR_DOMAIN;
  }
  opt->eval.rel_tol = rel_tol;
  return CASIMIR_OK;
}

casimir_status casimir_options_set_jobs(casimir_options* opt, int jobs) {
  if (!opt) return CASIMIR_ERR_INVALID_HANDLE;
  if (jobs < 0) {
    g_last_error = "jobs must be >= 0";
    return CASIMIR_ERR_DOMAIN;
  }
  opt->eval.jobs = jobs;
  return CASIMIR_OK;
}

casimir_status casimir_options_set_l_max(casimir_options* opt, int l_max) {
  if (!opt) return CASIMIR_ERR_INVALID_HANDLE;
  if (l_max < 0) {
    g_last_error = "l_max must be >= 0";
    return CASIMIR_ERR_DOMAIN;
  }
  opt->eval.forced_l_max = l_max;
  return CASIMIR_OK;
}

casimir_status casimir_evaluate(double x, const casimir_options* opt,
                                casimir_report* out) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] {
    const casimir::EnergyReport r = casimir::evaluate(x, to_eval_options(opt));
    out->x = r.x;
    out->z = r.z;
    out->mu1 = r.mu1;
    out->phi_d = r.phi_d;
    out->phi_dr = r.phi_dr;
    out->phi_n = r.phi_n;
    out->phi_p = r.phi_p;
    out->phi_p_grounded = r.phi_p_grounded;
    out->delta_phi = r.delta_phi;
    out->delta_phi_short = r.delta_phi_short;
    out->beta_d = r.beta_d;
    out->beta_dr = r.beta_dr;
    out->beta_n = r.beta_n;
    out->beta_p = r.beta_p;
    out->l_max_used = r.l_max_used;
    out->m_max_used = r.m_max_used;
    out->rel_tol = r.rel_tol;
    out->wall_time_ms = r.wall_time_ms;
  });
}

casimir_status casimir_delta_phi(double x, const casimir_options* opt,
                                 double* out, int* l_max_used,
                                 int* m_max_used) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] {
    const casimir::bispherical::DeltaPhiResult r =
        casimir::bispherical::delta_phi_numeric(x, to_policy(opt));
    *out = r.value;
    if (l_max_used) *l_max_used = r.l_max_used;
    if (m_max_used) *m_max_used = r.m_max_used;
  });
}

casimir_status casimir_delta_phi_short(double x, double* out) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] { *out = casimir::asymptotics::delta_phi_short(x); });
}

casimir_status casimir_delta_phi_as(double x, double* out) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] { *out = casimir::asymptotics::delta_phi_as(x); });
}

casimir_status casimir_leading_correction(double x, double* out) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] { *out = casimir::asymptotics::leading_correction(x); });
}

casimir_status casimir_phi_exact(casimir_model model, double x,
                                 const casimir_options* opt, double* out) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] {
    const casimir::core::Geometry geom =
        casimir::core::geometry_from_aspect_ratio(x);
    switch (to_model(model)) {
      case casimir::core::Model::dirichlet:
        *out = casimir::core::phi_dirichlet(geom);
        break;
      case casimir::core::Model::drude:
        *out = casimir::core::phi_drude(geom);
        break;
      case casimir::core::Model::neumann:
        *out = casimir::bispherical::phi_neumann(x, to_policy(opt));
        break;
      case casimir::core::Model::perfect:
        *out = casimir::bispherical::phi_perfect(x, to_policy(opt));
        break;
    }
  });
}

casimir_status casimir_phi_pfa(casimir_model model, double x, double* out) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] { *out = casimir::core::phi_pfa(to_model(model), x); });
}

casimir_status casimir_phi_short(casimir_model model, double x, double* out) {
  if (!out) return CASIMIR_ERR_INVALID_HANDLE;
  return guarded([&] {
    switch (to_model(model)) {
      case casimir::core::Model::dirichlet:
        *out = casimir::asymptotics::phi_dirichlet_short(x);
        break;
      case casimir::core::Model::drude:
        *out = casimir::asymptotics::phi_drude_short(x);
        break;
      case casimir::core::Model::perfect:
        *out = casimir::asymptotics::phi_perfect_short(x);
        break;
      case casimir::core::Model::neumann:
        throw casimir::DomainError(
            "no dedicated short-distance expansion for the Neumann channel; "
            "compose phi_dirichlet_short with delta_phi_short");
    }
  });
}

const char* casimir_strerror(casimir_status status) {
  switch (status) {
    case CASIMIR_OK:
      return "success";
    case CASIMIR_ERR_DOMAIN:
      return "invalid argument";
    case CASIMIR_ERR_CONVERGENCE:
      return "failed to converge to requested tolerance";
    case CASIMIR_ERR_CAP:
      return "truncation or iteration cap exceeded";
    case CASIMIR_ERR_NUMERICAL:
      return "numerical failure";
    case CASIMIR_ERR_INVALID_HANDLE:
      return "null or invalid handle";
  }
  return "unknown status";
}

const char* casimir_last_error_message(void) { return g_last_error.c_str(); }
