#include "qmom/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qmom/problem_io.hpp"

namespace qmom {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v + 0.0);
  return buf;
}

std::string count_noun(std::size_t n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  // Row-major [re, im] pairs.
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      rows.push_back({m(r, c).real() + 0.0, m(r, c).imag() + 0.0});
  return rows;
}

json slope_to_json(const Quiver& q, const Slope& s) {
  json lambda = json::object();
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    lambda[q.vertices[v]] = to_string(s.lambdas[v]);
  return json{{"mu", to_string(s.mu)}, {"lambda", lambda}};
}

} // namespace

std::string render_report_text(const PropernessReport& r, const ProbeRun* probe) {
  std::ostringstream out;
  out << "properness analysis\n";
  out << "  quiver (support): " << count_noun(r.support.vertices.size(), "vertex", "vertices")
      << ", " << count_noun(r.support.arrows.size(), "arrow", "arrows") << "\n";
  if (r.support_differs)
    out << "  note: zero-dimensional vertices dropped; the verdict is decided "
           "on the support subquiver (their summands are trivial)\n";
  out << "  slope: mu = " << to_string(r.support_slope.mu) << "\n";
  {
    std::vector<std::string> parts;
    for (std::size_t v = 0; v < r.support.vertices.size(); ++v)
      parts.push_back(r.support.vertices[v] + " = " +
                      to_string(r.support_slope.lambdas[v]));
    out << "  lambda: " << join(parts, ", ") << "\n";
  }

  if (!r.proper) {
    const auto& w = *r.witness;
    const std::size_t l = w.cycle.arrows.size();
    out << "verdict: NOT PROPER (" << r.reason << ")\n";
    out << "  cycle (length " << l << "): " << join(w.cycle.arrows, " ") << "\n";
    out << "  cycle vertices: " << join(w.cycle_vertices, " -> ") << "\n";
    out << "  witness family rho(n): entry (1,1) of each cycle arrow is n, "
           "all other entries 0\n";
    out << "  ||rho(n)||^2 = " << l << " n^2, unbounded in n\n";
    out << "  Phi(rho(n)) = Phi(rho(0)) for every n; ||Phi(rho(0))||^2 = "
        << fmt(w.base_moment_norm_sq) << "\n";
    out << "  the fiber over Phi(rho(0)) is therefore non-compact\n";
    out << "  reduced map: same verdict (Phi factors through the central "
           "quotient)\n";
  } else {
    const auto& c = *r.certificate;
    out << "verdict: PROPER (" << r.reason << ")\n";
    out << "  coercivity certificate (sound, not tight): ||Phi(rho)|| <= M "
           "implies ||rho|| <= R(M)\n";
    out << "  peel table: S_b(M) = max(0, c0 + c1 M)\n";
    for (std::size_t i = 0; i < c.peel_order.size(); ++i) {
      const auto& st = c.peel_order[i];
      out << "    step " << (i + 1) << ": vertex " << st.vertex << ", arrows ["
          << join(st.arrows, " ") << "], c0 = " << fmt(st.bound.c0)
          << ", c1 = " << fmt(st.bound.c1) << "\n";
    }
    out << "  R(M) = sqrt(sum of S_b(M))\n";
    if (c.infeasible_below)
      out << "  level set { ||Phi|| <= M } is empty for M < "
          << fmt(*c.infeasible_below) << "\n";
    out << "  R(1) = " << fmt(c.radius(1.0)) << ", R(10) = " << fmt(c.radius(10.0))
        << "\n";
    out << "  reduced map: same verdict (Phi factors through the central "
           "quotient)\n";
  }

  if (probe) {
    out << "probe (seed " << probe->seed << ", " << probe->samples_per_radius
        << " samples per radius)\n";
    out << "radius,phi_min,phi_max\n";
    for (const auto& row : probe->rows)
      out << fmt(row.radius) << "," << fmt(row.phi_min) << "," << fmt(row.phi_max)
          << "\n";
  }
  return out.str();
}

json report_to_json(const PropernessReport& r, const ProbeRun* probe) {
  json support = json::object();
  support["vertices"] = r.support.vertices;
  json arrows = json::array();
  for (const auto& a : r.support.arrows)
    arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  support["arrows"] = arrows;
  json dims = json::object();
  for (const auto& v : r.support.vertices)
    dims[v] = r.support_dims.dims.at(v);
  support["dims"] = dims;
  support["differs_from_input"] = r.support_differs;

  json j;
  j["format"] = "quiver-moment/report/1";
  j["verdict"] = r.proper ? "proper" : "not-proper";
  j["reason"] = r.reason;
  j["support"] = support;
  j["slope"] = slope_to_json(r.support, r.support_slope);

  if (r.witness) {
    const auto& w = *r.witness;
    RepSpace ssp(r.support, r.support_dims);
    json wit;
    wit["cycle"] = w.cycle.arrows;
    wit["cycle_vertices"] = w.cycle_vertices;
    wit["length"] = w.cycle.arrows.size();
    wit["norm_sq_per_n_sq"] = static_cast<double>(w.cycle.arrows.size());
    wit["base_moment_norm_sq"] = w.base_moment_norm_sq;
    json base = json::object();
    for (int v = 0; v < ssp.vertex_count(); ++v)
      base[ssp.vertex_id(v)] = matrix_to_json(w.base_moment.comps[v]);
    wit["base_moment"] = base;
    wit["rho_at_1"] = rep_to_json(ssp, witness_point(ssp, w.cycle, 1.0));
    j["witness"] = wit;
  }

  if (r.certificate) {
    const auto& c = *r.certificate;
    json peel = json::array();
    for (std::size_t i = 0; i < c.peel_order.size(); ++i) {
      const auto& st = c.peel_order[i];
      peel.push_back({{"step", i + 1},
                      {"vertex", st.vertex},
                      {"arrows", st.arrows},
                      {"c0", st.bound.c0 + 0.0},
                      {"c1", st.bound.c1 + 0.0}});
    }
    json cert;
    cert["peel"] = peel;
    cert["note"] = "sound, not tight";
    if (c.infeasible_below)
      cert["infeasible_below"] = *c.infeasible_below;
    json samples = json::array();
    for (const double m : {0.1, 1.0, 10.0})
      samples.push_back({{"M", m}, {"R", c.radius(m)}});
    cert["radius_samples"] = samples;
    j["certificate"] = cert;
  }

  if (probe) {
    json rows = json::array();
    for (const auto& row : probe->rows)
      rows.push_back({{"radius", row.radius},
                      {"phi_min", row.phi_min},
                      {"phi_max", row.phi_max}});
    j["probe"] = {{"seed", probe->seed},
                  {"samples_per_radius", probe->samples_per_radius},
                  {"rows", rows}};
  }
  return j;
}

std::string render_verify_text(const VerifyResult& v, int trials,
                               std::uint64_t seed) {
  std::ostringstream out;
  out << "verify: " << trials << " trials, seed " << seed << "\n";
  if (v.vacuous)
    out << "warning: no trials requested; the pass is vacuous\n";
  char line[160];
  std::snprintf(line, sizeof(line), "  %-18s %8s %16s %12s  %s\n", "check",
                "trials", "worst-residual", "worst-ratio", "status");
  out << line;
  for (const auto& c : v.checks) {
    std::snprintf(line, sizeof(line), "  %-18s %8d %16.3e %12.3e  %s\n",
                  c.name.c_str(), c.trials, c.worst_residual, c.worst_ratio,
                  c.pass ? "PASS" : "FAIL");
    out << line;
  }
  out << "overall: " << (v.all_pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_moment_text(const RepSpace& sp, const MomentValue& mv,
                               double norm_sq) {
  std::ostringstream out;
  out << "moment value L(rho), one skew-Hermitian block per vertex\n";
  for (int v = 0; v < sp.vertex_count(); ++v) {
    out << "vertex " << sp.vertex_id(v) << " (" << sp.dim(v) << "x" << sp.dim(v)
        << ")\n";
    const Matrix& m = mv.comps[v];
    for (int r = 0; r < m.rows(); ++r) {
      out << " ";
      for (int c = 0; c < m.cols(); ++c)
        out << " " << format_complex(m(r, c) + Complex{0.0, 0.0});
      out << "\n";
    }
  }
  out << "moment_norm (= ||Phi(rho)||^2): " << fmt(norm_sq) << "\n";
  return out.str();
}

json moment_to_json(const RepSpace& sp, const MomentValue& mv, double norm_sq) {
  json vertices = json::object();
  for (int v = 0; v < sp.vertex_count(); ++v)
    vertices[sp.vertex_id(v)] = {{"dim", sp.dim(v)},
                                 {"matrix", matrix_to_json(mv.comps[v])}};
  return json{{"format", "quiver-moment/moment/1"},
              {"vertices", vertices},
              {"moment_norm", norm_sq}};
}

json rep_to_json(const RepSpace& sp, const RepPoint& rho) {
  json arrows = json::object();
  for (int a = 0; a < sp.arrow_count(); ++a)
    arrows[sp.arrow_id(a)] = {{"rows", sp.rows(a)},
                              {"cols", sp.cols(a)},
                              {"matrix", matrix_to_json(rho.mats[a])}};
  return arrows;
}

} // namespace qmom
