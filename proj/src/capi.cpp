#include "quivermoment.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "qmom/error.hpp"
#include "qmom/moment.hpp"
#include "qmom/problem_io.hpp"
#include "qmom/properness.hpp"
#include "qmom/report_io.hpp"
#include "qmom/verify.hpp"

struct qmm_problem {
  qmom::Problem data;
};

struct qmm_report {
  qmom::Problem problem; // retained for the probe
  qmom::PropernessReport data;
};

namespace {

thread_local std::string g_last_error = "no error";

qmm_status set_error(qmm_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

qmm_status from_kind(qmom::Error::Kind k) {
  using Kind = qmom::Error::Kind;
  switch (k) {
  case Kind::io:
    return QMM_ERR_IO;
  case Kind::parse:
    return QMM_ERR_PARSE;
  case Kind::invalid:
    return QMM_ERR_INVALID;
  case Kind::shape:
    return QMM_ERR_SHAPE;
  case Kind::domain:
    return QMM_ERR_DOMAIN;
  case Kind::internal:
    return QMM_ERR_INTERNAL;
  }
  return QMM_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn> qmm_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qmom::Error& e) {
    return set_error(from_kind(e.kind()), e.what());
  } catch (const std::exception& e) {
    return set_error(QMM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(QMM_ERR_INTERNAL, "unknown error");
  }
}

qmm_status require(bool cond, const char* what) {
  if (cond)
    return QMM_OK;
  return set_error(QMM_ERR_ARG, what);
}

const qmom::CoercivityCertificate* certificate_of(const qmm_report* r) {
  if (!r || !r->data.certificate)
    return nullptr;
  return &*r->data.certificate;
}

const qmom::CycleWitness* witness_of(const qmm_report* r) {
  if (!r || !r->data.witness)
    return nullptr;
  return &*r->data.witness;
}

qmom::ProbeRun run_probe(const qmm_report* r, const qmm_probe_options* probe) {
  qmom::ProbeRun run;
  run.samples_per_radius = probe->samples_per_radius;
  run.seed = probe->seed;
  std::vector<double> radii(probe->radii, probe->radii + probe->radii_count);
  run.rows = qmom::probe(r->problem.quiver, r->problem.dims, r->problem.theta,
                         radii, probe->samples_per_radius, probe->seed);
  return run;
}

} // namespace

extern "C" {

const char* qmm_version(void) { return "1.0.0"; }

const char* qmm_last_error(void) { return g_last_error.c_str(); }

void qmm_string_free(char* s) { std::free(s); }

qmm_status qmm_problem_from_file(const char* path, qmm_problem** out) {
  if (require(path && out, "qmm_problem_from_file: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    auto p = std::make_unique<qmm_problem>();
    p->data = qmom::load_problem(path);
    *out = p.release();
    return QMM_OK;
  });
}

qmm_status qmm_problem_from_string(const char* text, qmm_problem** out) {
  if (require(text && out, "qmm_problem_from_string: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    auto p = std::make_unique<qmm_problem>();
    p->data = qmom::parse_problem(text, "<string>");
    *out = p.release();
    return QMM_OK;
  });
}

void qmm_problem_free(qmm_problem* p) { delete p; }

qmm_status qmm_problem_canonical_text(const qmm_problem* p, char** out) {
  if (require(p && out, "qmm_problem_canonical_text: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    *out = dup_string(qmom::serialize_problem(p->data));
    return QMM_OK;
  });
}

int qmm_problem_seed(const qmm_problem* p, unsigned long long* out) {
  if (!p || !p->data.seed)
    return 0;
  if (out)
    *out = *p->data.seed;
  return 1;
}

int qmm_problem_tolerance(const qmm_problem* p, double* out) {
  if (!p || !p->data.tol_scale)
    return 0;
  if (out)
    *out = *p->data.tol_scale;
  return 1;
}

qmm_status qmm_problem_violations(const qmm_problem* p, char** out_text,
                                  int* out_count) {
  if (require(p && out_text && out_count,
              "qmm_problem_violations: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    const auto v = qmom::validate(p->data.quiver, p->data.dims, p->data.theta);
    std::string joined;
    for (const auto& line : v) {
      joined += line;
      joined += '\n';
    }
    *out_text = dup_string(joined);
    *out_count = static_cast<int>(v.size());
    return QMM_OK;
  });
}

qmm_status qmm_analyze(const qmm_problem* p, qmm_report** out) {
  if (require(p && out, "qmm_analyze: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    auto r = std::make_unique<qmm_report>();
    r->problem = p->data;
    r->data = qmom::analyze(p->data.quiver, p->data.dims, p->data.theta);
    *out = r.release();
    return QMM_OK;
  });
}

void qmm_report_free(qmm_report* r) { delete r; }

int qmm_report_is_proper(const qmm_report* r) {
  return (r && r->data.proper) ? 1 : 0;
}

qmm_status qmm_report_text(const qmm_report* r, char** out) {
  if (require(r && out, "qmm_report_text: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    *out = dup_string(qmom::render_report_text(r->data, nullptr));
    return QMM_OK;
  });
}

qmm_status qmm_report_json(const qmm_report* r, char** out) {
  if (require(r && out, "qmm_report_json: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    *out = dup_string(qmom::report_to_json(r->data, nullptr).dump(2) + "\n");
    return QMM_OK;
  });
}

qmm_status qmm_report_text_with_probe(const qmm_report* r,
                                      const qmm_probe_options* probe,
                                      char** out) {
  if (require(r && probe && probe->radii && out,
              "qmm_report_text_with_probe: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    const qmom::ProbeRun run = run_probe(r, probe);
    *out = dup_string(qmom::render_report_text(r->data, &run));
    return QMM_OK;
  });
}

qmm_status qmm_report_json_with_probe(const qmm_report* r,
                                      const qmm_probe_options* probe,
                                      char** out) {
  if (require(r && probe && probe->radii && out,
              "qmm_report_json_with_probe: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    const qmom::ProbeRun run = run_probe(r, probe);
    *out = dup_string(qmom::report_to_json(r->data, &run).dump(2) + "\n");
    return QMM_OK;
  });
}

int qmm_report_peel_count(const qmm_report* r) {
  const auto* c = certificate_of(r);
  return c ? static_cast<int>(c->peel_order.size()) : -1;
}

qmm_status qmm_report_peel_step(const qmm_report* r, int index,
                                char** out_vertex, char** out_arrows,
                                double* out_c0, double* out_c1) {
  const auto* c = certificate_of(r);
  if (!c)
    return set_error(QMM_ERR_ARG, "report has no certificate");
  if (index < 0 || index >= static_cast<int>(c->peel_order.size()))
    return set_error(QMM_ERR_ARG, "peel step index out of range");
  const auto& st = c->peel_order[index];
  if (out_vertex)
    *out_vertex = dup_string(st.vertex);
  if (out_arrows) {
    std::string joined;
    for (std::size_t i = 0; i < st.arrows.size(); ++i) {
      if (i)
        joined += ' ';
      joined += st.arrows[i];
    }
    *out_arrows = dup_string(joined);
  }
  if (out_c0)
    *out_c0 = st.bound.c0;
  if (out_c1)
    *out_c1 = st.bound.c1;
  return QMM_OK;
}

qmm_status qmm_report_radius(const qmm_report* r, double m, double* out) {
  const auto* c = certificate_of(r);
  if (!c)
    return set_error(QMM_ERR_ARG, "report has no certificate");
  if (!out)
    return set_error(QMM_ERR_ARG, "qmm_report_radius: null output");
  if (m < 0.0)
    return set_error(QMM_ERR_DOMAIN, "budget M must be >= 0");
  *out = c->radius(m);
  return QMM_OK;
}

int qmm_report_infeasible_below(const qmm_report* r, double* out) {
  const auto* c = certificate_of(r);
  if (!c || !c->infeasible_below)
    return 0;
  if (out)
    *out = *c->infeasible_below;
  return 1;
}

int qmm_report_cycle_length(const qmm_report* r) {
  const auto* w = witness_of(r);
  return w ? static_cast<int>(w->cycle.arrows.size()) : 0;
}

qmm_status qmm_report_cycle(const qmm_report* r, char** out_arrows) {
  const auto* w = witness_of(r);
  if (!w)
    return set_error(QMM_ERR_ARG, "report has no witness");
  if (!out_arrows)
    return set_error(QMM_ERR_ARG, "qmm_report_cycle: null output");
  std::string joined;
  for (std::size_t i = 0; i < w->cycle.arrows.size(); ++i) {
    if (i)
      joined += ' ';
    joined += w->cycle.arrows[i];
  }
  *out_arrows = dup_string(joined);
  return QMM_OK;
}

qmm_status qmm_report_witness_norm_sq(const qmm_report* r, double n,
                                      double* out) {
  const auto* w = witness_of(r);
  if (!w || !out)
    return set_error(QMM_ERR_ARG, "report has no witness / null output");
  return guarded([&] {
    qmom::RepSpace ssp(r->data.support, r->data.support_dims);
    *out = qmom::norm_sq(ssp, qmom::witness_point(ssp, w->cycle, n));
    return QMM_OK;
  });
}

qmm_status qmm_report_witness_moment_gap(const qmm_report* r, double n,
                                         double* out) {
  const auto* w = witness_of(r);
  if (!w || !out)
    return set_error(QMM_ERR_ARG, "report has no witness / null output");
  return guarded([&] {
    qmom::RepSpace ssp(r->data.support, r->data.support_dims);
    const qmom::MomentValue mv = qmom::moment(
        ssp, qmom::witness_point(ssp, w->cycle, n), r->data.support_theta);
    double gap_sq = 0.0;
    for (int v = 0; v < ssp.vertex_count(); ++v)
      gap_sq += (mv.comps[v] - w->base_moment.comps[v]).squaredNorm();
    *out = std::sqrt(gap_sq);
    return QMM_OK;
  });
}

qmm_status qmm_verify(const qmm_problem* p, int trials, unsigned long long seed,
                      double tol_scale, char** out_text, int* out_all_pass) {
  if (require(p && out_text && out_all_pass, "qmm_verify: null argument") !=
      QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    double scale = tol_scale;
    if (!(scale > 0.0))
      scale = p->data.tol_scale.value_or(1.0);
    const qmom::VerifyResult res = qmom::run_verify(
        p->data.quiver, p->data.dims, p->data.theta, trials, seed, scale);
    *out_text = dup_string(qmom::render_verify_text(res, trials, seed));
    *out_all_pass = res.all_pass ? 1 : 0;
    return QMM_OK;
  });
}

qmm_status qmm_moment_from_file(const qmm_problem* p, const char* rep_path,
                                int as_json, char** out_text) {
  if (require(p && rep_path && out_text,
              "qmm_moment_from_file: null argument") != QMM_OK)
    return QMM_ERR_ARG;
  return guarded([&] {
    const auto violations =
        qmom::validate(p->data.quiver, p->data.dims, p->data.theta);
    if (!violations.empty()) {
      std::string msg = "invalid input:";
      for (const auto& v : violations)
        msg += "\n  " + v;
      throw qmom::Error(qmom::Error::Kind::invalid, msg);
    }
    qmom::RepSpace sp(p->data.quiver, p->data.dims);
    const qmom::RepPoint rho = qmom::load_rep(sp, rep_path);
    const qmom::MomentValue mv = qmom::moment(sp, rho, p->data.theta);
    const double nsq = qmom::moment_norm(sp, rho, p->data.theta);
    if (as_json)
      *out_text = dup_string(qmom::moment_to_json(sp, mv, nsq).dump(2) + "\n");
    else
      *out_text = dup_string(qmom::render_moment_text(sp, mv, nsq));
    return QMM_OK;
  });
}

} // extern "C"
