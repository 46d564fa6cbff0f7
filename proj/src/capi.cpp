#include "dkposc.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "dkposc/nu.hpp"
#include "dkposc/oracle.hpp"
#include "dkposc/params.hpp"
#include "dkposc/spectrum.hpp"
#include "dkposc/verify.hpp"

struct dkposc_model {
  dkp::PhysicsParams p;
  dkp::QuantumNumbers qn;
};

struct dkposc_solution {
  dkp::spectrum::SolveReport report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs fn, translating the library's exception taxonomy into status codes.
// Out-parameters are written by fn itself, so they stay untouched on error.
template <typename Fn>
dkposc_status guarded(Fn&& fn) {
  try {
    fn();
    return DKPOSC_OK;
  } catch (const dkp::invalid_parameter& e) {
    set_error(e.what());
    return DKPOSC_INVALID_PARAMETER;
  } catch (const dkp::no_real_root& e) {
    set_error(e.what());
    return DKPOSC_NO_ROOT;
  } catch (const dkp::oracle_disagreement& e) {
    set_error(e.what());
    return DKPOSC_ORACLE_DISAGREEMENT;
  } catch (const std::exception& e) {
    // numeric_failure, singular_metric and anything unanticipated
    set_error(e.what());
    return DKPOSC_NUMERIC_FAILURE;
  }
}

double* field_slot(dkposc_model* m, const char* field) {
  if (!field) return nullptr;
  const std::string f = field;
  if (f == "M") return &m->p.M;
  if (f == "omega") return &m->p.omega;
  if (f == "Omega") return &m->p.Omega;
  if (f == "alpha") return &m->p.alpha;
  if (f == "A") return &m->p.A;
  if (f == "B") return &m->p.B;
  if (f == "k") return &m->p.k;
  if (f == "phi") return &m->p.phi;
  return nullptr;
}

char* heap_copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

dkposc_model* dkposc_model_create(void) {
  try {
    return new dkposc_model{};
  } catch (...) {
    return nullptr;
  }
}

void dkposc_model_destroy(dkposc_model* m) { delete m; }

dkposc_status dkposc_model_set(dkposc_model* m, const char* field,
                               double value) {
  if (!m) {
    set_error("null model handle");
    return DKPOSC_BAD_HANDLE;
  }
  double* slot = field_slot(m, field);
  if (!slot) {
    set_error(std::string("unknown field: ") + (field ? field : "(null)"));
    return DKPOSC_BAD_FIELD;
  }
  *slot = value;
  return DKPOSC_OK;
}

dkposc_status dkposc_model_get(const dkposc_model* m, const char* field,
                               double* out) {
  if (!m) {
    set_error("null model handle");
    return DKPOSC_BAD_HANDLE;
  }
  double* slot = field_slot(const_cast<dkposc_model*>(m), field);
  if (!slot) {
    set_error(std::string("unknown field: ") + (field ? field : "(null)"));
    return DKPOSC_BAD_FIELD;
  }
  if (out) *out = *slot;
  return DKPOSC_OK;
}

dkposc_status dkposc_model_set_quantum(dkposc_model* m, int n, int mq) {
  if (!m) {
    set_error("null model handle");
    return DKPOSC_BAD_HANDLE;
  }
  m->qn.n = n;
  m->qn.m = mq;
  return DKPOSC_OK;
}

dkposc_status dkposc_solve(const dkposc_model* m, dkposc_solution** out) {
  if (!m || !out) {
    set_error("null handle");
    return DKPOSC_BAD_HANDLE;
  }
  return guarded([&] {
    auto rep = dkp::spectrum::solve_energy(m->qn, m->p);
    *out = new dkposc_solution{std::move(rep)};
  });
}

void dkposc_solution_destroy(dkposc_solution* s) { delete s; }

int dkposc_solution_count(const dkposc_solution* s) {
  if (!s) return -1;
  return static_cast<int>(s->report.roots.size());
}

dkposc_status dkposc_solution_root(const dkposc_solution* s, int index,
                                   double* E, double* residual, int* branch,
                                   int* flagged) {
  if (!s) {
    set_error("null solution handle");
    return DKPOSC_BAD_HANDLE;
  }
  if (index < 0 || index >= static_cast<int>(s->report.roots.size())) {
    set_error("root index out of range");
    return DKPOSC_INVALID_PARAMETER;
  }
  const auto& r = s->report.roots[static_cast<std::size_t>(index)];
  if (E) *E = r.E;
  if (residual) *residual = r.residual;
  if (branch) *branch = r.branch;
  if (flagged) *flagged = r.flagged ? 1 : 0;
  return DKPOSC_OK;
}

dkposc_status dkposc_wavefunction_eval(const dkposc_model* m, double E,
                                       double r, double* phi1, double* dphi1,
                                       double* jt) {
  if (!m) {
    set_error("null model handle");
    return DKPOSC_BAD_HANDLE;
  }
  return guarded([&] {
    const auto w = dkp::spectrum::make_wavefunction(E, m->qn, m->p);
    const double v = dkp::spectrum::wavefunction(r, w);
    if (phi1) *phi1 = v;
    if (dphi1) *dphi1 = dkp::spectrum::wavefunction_derivative(r, w);
    if (jt) *jt = dkp::spectrum::charge_density(r, E, m->qn, m->p, v);
  });
}

dkposc_status dkposc_quantization_residual(const dkposc_model* m, double E,
                                           double* out) {
  if (!m) {
    set_error("null model handle");
    return DKPOSC_BAD_HANDLE;
  }
  return guarded([&] {
    m->p.validate();
    m->qn.validate();
    const double g = dkp::nu::quantization_residual(E, m->qn, m->p);
    if (out) *out = g;
  });
}

dkposc_status dkposc_oracle_energy(const dkposc_model* m, double E_reference,
                                   int points, double* E_out) {
  if (!m) {
    set_error("null model handle");
    return DKPOSC_BAD_HANDLE;
  }
  return guarded([&] {
    const auto res =
        dkp::oracle::oracle_energy(E_reference, m->qn, m->p, points);
    if (E_out) *E_out = res.E;
  });
}

dkposc_status dkposc_wavefunction_extent(const dkposc_model* m, double E,
                                         double* r_max) {
  if (!m) {
    set_error("null model handle");
    return DKPOSC_BAD_HANDLE;
  }
  return guarded([&] {
    const auto w = dkp::spectrum::make_wavefunction(E, m->qn, m->p);
    if (r_max)
      *r_max = 3.0 * std::sqrt((2.0 * w.n + w.exponent + 2.0) / w.scale);
  });
}

dkposc_status dkposc_verify(int full, unsigned long long seed, int* passed,
                            char** report) {
  return guarded([&] {
    const auto level =
        full ? dkp::verify::Level::full : dkp::verify::Level::quick;
    const auto rep = dkp::verify::run(level, seed);
    if (passed) *passed = rep.all_passed() ? 1 : 0;
    if (report) {
      nlohmann::json j;
      j["level"] = full ? "full" : "quick";
      j["seed"] = rep.seed;
      j["all_passed"] = rep.all_passed();
      auto arr = nlohmann::json::array();
      for (const auto& c : rep.checks) {
        arr.push_back({{"name", c.name},
                       {"passed", c.passed},
                       {"worst", c.worst},
                       {"tolerance", c.tolerance},
                       {"detail", c.detail}});
      }
      j["checks"] = std::move(arr);
      char* text = heap_copy(j.dump(2));
      if (!text) throw dkp::numeric_failure("out of memory");
      *report = text;
    }
  });
}

void dkposc_string_free(char* s) { std::free(s); }

const char* dkposc_last_error(void) { return g_last_error.c_str(); }

const char* dkposc_version(void) { return "dkposc 1.0.0"; }

}  // extern "C"
