#include "qmom/properness.hpp"

#include <algorithm>
#include <cmath>

#include "qmom/error.hpp"
#include "qmom/rng.hpp"

namespace qmom {

RepPoint witness_point(const RepSpace& sp, const Path& cycle, double n) {
  RepPoint p = sp.zero_point();
  for (const auto& id : cycle.arrows) {
    const int a = sp.arrow_index(id);
    if (sp.rows(a) == 0 || sp.cols(a) == 0)
      throw Error(Error::Kind::domain,
                  "cycle arrow \"" + id + "\" touches a zero-dimensional vertex");
    p.mats[a](0, 0) = n;
  }
  return p;
}

CycleWitness make_witness(const RepSpace& sp, const Weight& theta,
                          const Path& cycle) {
  if (cycle.arrows.empty())
    throw Error(Error::Kind::domain, "witness cycle is empty");
  const auto visited = path_vertices(sp.quiver(), cycle); // validates composability
  if (visited.front() != visited.back())
    throw Error(Error::Kind::domain, "witness path is not a cycle");

  CycleWitness w;
  w.cycle = cycle;
  w.cycle_vertices = visited;
  w.base_moment = moment(sp, witness_point(sp, cycle, 0.0), theta);
  w.base_moment_norm_sq = moment_value_norm_sq(sp, w.base_moment);
  return w;
}

double CoercivityCertificate::radius_sq(double m) const {
  double s = 0.0;
  for (const auto& step : peel_order)
    s += std::max(0.0, step.bound.eval(m));
  return s;
}

double CoercivityCertificate::radius(double m) const {
  return std::sqrt(radius_sq(m));
}

CoercivityCertificate make_certificate(const RepSpace& sp, const Weight& theta) {
  if (!is_acyclic(sp.quiver()))
    throw Error(Error::Kind::domain, "quiver has a cycle");

  const Slope s = slope(sp, theta);
  const int nv = sp.vertex_count();
  const int na = sp.arrow_count();

  // Per-vertex budget: ||Phi_peeled(rho)_a|| <= budget_a(M) whenever
  // ||Phi(rho)|| <= M. Starts at M itself and grows as peeled arrows
  // transfer their squared norms.
  std::vector<AffineBound> budget(nv, AffineBound{0.0, 1.0});
  std::vector<bool> alive(na, true);
  std::vector<int> indeg(nv, 0);
  for (int a = 0; a < na; ++a)
    ++indeg[sp.arrow_tgt(a)];

  CoercivityCertificate cert;
  int remaining = na;
  while (remaining > 0) {
    int pick = -1;
    for (int a = 0; a < na; ++a)
      if (alive[a] && indeg[sp.arrow_src(a)] == 0) {
        pick = a;
        break;
      }
    if (pick < 0)
      throw Error(Error::Kind::internal, "no source arrow in acyclic quiver");

    const int b = sp.arrow_src(pick);
    const double db = static_cast<double>(sp.dim(b));
    const double sqrt_db = std::sqrt(db);

    PeelStep step;
    step.vertex = sp.vertex_id(b);
    step.bound.c0 = (s.lambdas[b] * Rational(sp.dim(b))).to_double() +
                    sqrt_db * budget[b].c0;
    step.bound.c1 = sqrt_db * budget[b].c1;
    if (step.bound.c0 < 0.0) {
      const double threshold = -step.bound.c0 / step.bound.c1;
      cert.infeasible_below =
          std::max(cert.infeasible_below.value_or(0.0), threshold);
    }

    for (int a = 0; a < na; ++a) {
      if (!alive[a] || sp.arrow_src(a) != b)
        continue;
      step.arrows.push_back(sp.arrow_id(a));
      alive[a] = false;
      --indeg[sp.arrow_tgt(a)];
      --remaining;
      budget[sp.arrow_tgt(a)].c0 += step.bound.c0;
      budget[sp.arrow_tgt(a)].c1 += step.bound.c1;
    }
    cert.peel_order.push_back(std::move(step));
  }
  return cert;
}

PropernessReport analyze(const Quiver& q, const DimensionVector& d,
                         const Weight& theta) {
  auto violations = validate(q, d, theta);
  if (!violations.empty()) {
    std::string msg = "invalid input:";
    for (const auto& v : violations)
      msg += "\n  " + v;
    throw Error(Error::Kind::invalid, msg);
  }

  PropernessReport report;
  report.support = support_subquiver(q, d);
  report.support_dims = restrict_dims(d, report.support);
  report.support_theta = restrict_weight(theta, report.support);
  report.support_differs = report.support.vertices.size() != q.vertices.size();

  RepSpace ssp(report.support, report.support_dims);
  report.support_slope = slope(ssp, report.support_theta);

  if (auto cycle = find_cycle(report.support)) {
    report.proper = false;
    report.reason = "cycle-found";
    report.witness = make_witness(ssp, report.support_theta, *cycle);
  } else {
    report.proper = true;
    report.reason = "acyclic-support";
    report.certificate = make_certificate(ssp, report.support_theta);
  }
  return report;
}

KroneckerBound kronecker_lower_bound(const RepSpace& sp, const RepPoint& rho,
                                     const Weight& theta) {
  if (sp.vertex_count() != 2 || sp.arrow_count() == 0)
    throw Error(Error::Kind::domain, "not a Kronecker quiver");
  const int src = sp.arrow_src(0);
  const int tgt = sp.arrow_tgt(0);
  if (src == tgt)
    throw Error(Error::Kind::domain, "not a Kronecker quiver");
  for (int a = 0; a < sp.arrow_count(); ++a)
    if (sp.arrow_src(a) != src || sp.arrow_tgt(a) != tgt)
      throw Error(Error::Kind::domain, "not a Kronecker quiver");
  const double da = static_cast<double>(sp.dim(src));
  const double db = static_cast<double>(sp.dim(tgt));
  if (sp.dim(src) < 1 || sp.dim(tgt) < 1)
    throw Error(Error::Kind::domain, "Kronecker bound needs both dims >= 1");

  const Slope s = slope(sp, theta);
  const double la = s.lambdas[src].to_double();
  const double lb = s.lambdas[tgt].to_double();
  const double nsq = norm_sq(sp, rho);

  KroneckerBound out;
  out.lhs = moment_norm(sp, rho, theta);
  out.rhs = (1.0 / da + 1.0 / db) * nsq * nsq + 2.0 * (lb - la) * nsq +
            la * la * da + lb * lb * db;
  return out;
}

std::vector<ProbeRow> probe(const Quiver& q, const DimensionVector& d,
                            const Weight& theta, const std::vector<double>& radii,
                            int samples_per_radius, std::uint64_t seed) {
  auto violations = validate(q, d, theta);
  if (!violations.empty())
    throw Error(Error::Kind::invalid, "invalid input");
  if (samples_per_radius < 1)
    throw Error(Error::Kind::domain, "samples_per_radius must be >= 1");

  const RepSpace sp(q, d);
  const auto cycle = find_cycle(support_subquiver(q, d));

  std::vector<ProbeRow> rows;
  rows.reserve(radii.size());
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    const double r = radii[ri];
    if (r < 0.0)
      throw Error(Error::Kind::domain, "probe radius must be >= 0");
    ProbeRow row;
    row.radius = r;
    double lo = 0.0, hi = 0.0;
    for (int j = 0; j < samples_per_radius; ++j) {
      const std::uint64_t sj = Rng::derive(seed, ri * 0x10000ull + j);
      const double phi = std::sqrt(moment_norm(sp, random_point(sp, r, sj), theta));
      if (j == 0) {
        lo = hi = phi;
      } else {
        lo = std::min(lo, phi);
        hi = std::max(hi, phi);
      }
    }
    if (cycle) {
      const double l = static_cast<double>(cycle->arrows.size());
      const RepPoint w = witness_point(sp, *cycle, r / std::sqrt(l));
      const double phi = std::sqrt(moment_norm(sp, w, theta));
      lo = std::min(lo, phi);
      hi = std::max(hi, phi);
    }
    row.phi_min = lo;
    row.phi_max = hi;
    rows.push_back(row);
  }
  return rows;
}

} // namespace qmom
