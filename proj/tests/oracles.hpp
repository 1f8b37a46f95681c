// Independent reference implementations used only by the tests. Each one
// deliberately takes a different route than the library so the two sides can
// cross-check each other.
#ifndef QMOM_TESTS_ORACLES_HPP
#define QMOM_TESTS_ORACLES_HPP

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "qmom/moment.hpp"
#include "qmom/properness.hpp"
#include "qmom/quiver.hpp"
#include "qmom/repspace.hpp"
#include "qmom/rng.hpp"

namespace oracles {

// Cycle existence by boolean reachability: union of adjacency powers has a
// true diagonal entry iff some vertex reaches itself.
inline bool has_cycle_matrix_powers(const qmom::Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i)
    idx[q.vertices[i]] = i;

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& a : q.arrows)
    adj[idx[a.src]][idx[a.tgt]] = true;

  std::vector<std::vector<bool>> reach = adj;
  std::vector<std::vector<bool>> power = adj;
  for (int step = 2; step <= n; ++step) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (power[i][k])
          for (int j = 0; j < n; ++j)
            if (adj[k][j])
              next[i][j] = true;
    power = next;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (power[i][j])
          reach[i][j] = true;
  }
  for (int i = 0; i < n; ++i)
    if (reach[i][i])
      return true;
  return false;
}

// Kahn's algorithm: the topological sort covers every vertex iff acyclic.
inline bool topo_sort_succeeds(const qmom::Quiver& q) {
  const int n = static_cast<int>(q.vertices.size());
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i)
    idx[q.vertices[i]] = i;

  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const auto& a : q.arrows) {
    ++indeg[idx[a.tgt]];
    out[idx[a.src]].push_back(idx[a.tgt]);
  }
  std::vector<int> queue;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0)
      queue.push_back(i);
  int removed = 0;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    ++removed;
    for (const int w : out[v])
      if (--indeg[w] == 0)
        queue.push_back(w);
  }
  return removed == n;
}

// The constructive walk: keep stepping to an arrow ending at the source of
// the current one; in an acyclic arrow-finite quiver this stops at an arrow
// whose source is the target of nothing.
inline std::string walk_source_arrow(const qmom::Quiver& q) {
  const qmom::Arrow* current = &q.arrows.front();
  const std::size_t limit = q.arrows.size() + 1;
  for (std::size_t step = 0; step < limit; ++step) {
    const qmom::Arrow* feeder = nullptr;
    for (const auto& a : q.arrows)
      if (a.tgt == current->src) {
        feeder = &a;
        break;
      }
    if (!feeder)
      return current->id;
    current = feeder;
  }
  throw std::runtime_error("walk did not terminate: quiver has a cycle");
}

inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) { return m.exp(); }

inline qmom::GroupElement exp_group(const qmom::RepSpace& sp,
                                    const qmom::LieElement& xi, double t) {
  qmom::GroupElement g;
  for (const auto& c : xi.comps)
    g.comps.push_back(expm((t * c).eval()));
  return g;
}

// Per-arrow peeling (one arrow removed per step), the induction of the
// properness proof taken literally. Returns steps in the shared certificate
// shape so the same soundness checks run on both.
inline qmom::CoercivityCertificate per_arrow_certificate(const qmom::RepSpace& sp,
                                                         const qmom::Weight& theta) {
  const qmom::Slope s = qmom::slope(sp, theta);
  const int na = sp.arrow_count();
  const int nv = sp.vertex_count();

  std::vector<qmom::AffineBound> budget(nv, qmom::AffineBound{0.0, 1.0});
  std::vector<bool> alive(na, true);

  qmom::CoercivityCertificate cert;
  for (int remaining = na; remaining > 0; --remaining) {
    // First alive arrow whose source vertex is the target of no alive arrow.
    int pick = -1;
    for (int a = 0; a < na && pick < 0; ++a) {
      if (!alive[a])
        continue;
      bool fed = false;
      for (int b = 0; b < na; ++b)
        if (alive[b] && sp.arrow_tgt(b) == sp.arrow_src(a)) {
          fed = true;
          break;
        }
      if (!fed)
        pick = a;
    }
    if (pick < 0)
      throw std::runtime_error("no source arrow (cycle?)");

    const int b = sp.arrow_src(pick);
    const double sqrt_db = std::sqrt(static_cast<double>(sp.dim(b)));
    qmom::PeelStep step;
    step.vertex = sp.vertex_id(b);
    step.arrows = {sp.arrow_id(pick)};
    step.bound.c0 = (s.lambdas[b] * qmom::Rational(sp.dim(b))).to_double() +
                    sqrt_db * budget[b].c0;
    step.bound.c1 = sqrt_db * budget[b].c1;
    if (step.bound.c0 < 0.0)
      cert.infeasible_below = std::max(cert.infeasible_below.value_or(0.0),
                                       -step.bound.c0 / step.bound.c1);

    alive[pick] = false;
    // Removing one arrow perturbs the moment map at both endpoints.
    budget[sp.arrow_tgt(pick)].c0 += step.bound.c0;
    budget[sp.arrow_tgt(pick)].c1 += step.bound.c1;
    if (sp.arrow_src(pick) != sp.arrow_tgt(pick)) {
      budget[b].c0 += step.bound.c0;
      budget[b].c1 += step.bound.c1;
    }
    cert.peel_order.push_back(std::move(step));
  }
  return cert;
}

// The quartic lower bound evaluated from scratch.
inline double kronecker_rhs_direct(const qmom::RepSpace& sp,
                                   const qmom::RepPoint& rho,
                                   const qmom::Weight& theta) {
  const qmom::Slope s = qmom::slope(sp, theta);
  const int src = sp.arrow_src(0);
  const int tgt = sp.arrow_tgt(0);
  const double da = sp.dim(src);
  const double db = sp.dim(tgt);
  const double la = s.lambdas[src].to_double();
  const double lb = s.lambdas[tgt].to_double();
  double nsq = 0.0;
  for (const auto& m : rho.mats)
    nsq += m.squaredNorm();
  return (1.0 / da + 1.0 / db) * nsq * nsq + 2.0 * (lb - la) * nsq +
         la * la * da + lb * lb * db;
}

// ---- random generators -----------------------------------------------------

inline qmom::Quiver random_quiver(qmom::Rng& rng, int max_vertices,
                                  int max_arrows) {
  qmom::Quiver q;
  const int nv = 1 + static_cast<int>(rng.uniform() * max_vertices) % max_vertices;
  for (int i = 0; i < nv; ++i)
    q.vertices.push_back("v" + std::to_string(i));
  const int na = static_cast<int>(rng.uniform() * (max_arrows + 1)) % (max_arrows + 1);
  for (int i = 0; i < na; ++i) {
    const int s = static_cast<int>(rng.next_u64() % nv);
    const int t = static_cast<int>(rng.next_u64() % nv);
    q.arrows.push_back({"e" + std::to_string(i), q.vertices[s], q.vertices[t]});
  }
  return q;
}

inline qmom::DimensionVector random_dims(qmom::Rng& rng, const qmom::Quiver& q,
                                         int max_dim, bool allow_zero) {
  qmom::DimensionVector d;
  bool any = false;
  for (const auto& v : q.vertices) {
    const int lo = allow_zero ? 0 : 1;
    const int dim = lo + static_cast<int>(rng.next_u64() % (max_dim - lo + 1));
    d.dims[v] = dim;
    any = any || dim > 0;
  }
  if (!any)
    d.dims[q.vertices[static_cast<std::size_t>(rng.next_u64() % q.vertices.size())]] =
        1 + static_cast<int>(rng.next_u64() % max_dim);
  return d;
}

inline qmom::Weight random_theta(qmom::Rng& rng, const qmom::Quiver& q,
                                 int max_abs) {
  qmom::Weight w;
  for (const auto& v : q.vertices) {
    const std::int64_t p =
        static_cast<std::int64_t>(rng.next_u64() % (2 * max_abs + 1)) - max_abs;
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng.next_u64() % max_abs);
    w.theta[v] = qmom::Rational(p, den);
  }
  return w;
}

inline qmom::Weight zero_theta(const qmom::Quiver& q) {
  qmom::Weight w;
  for (const auto& v : q.vertices)
    w.theta[v] = qmom::Rational(0);
  return w;
}

// Acyclic by construction: arrows only run from lower to higher vertex index.
inline qmom::Quiver random_acyclic_quiver(qmom::Rng& rng, int max_vertices,
                                          int max_arrows) {
  qmom::Quiver q;
  const int nv = 2 + static_cast<int>(rng.next_u64() % (max_vertices - 1));
  for (int i = 0; i < nv; ++i)
    q.vertices.push_back("v" + std::to_string(i));
  const int na = 1 + static_cast<int>(rng.next_u64() % max_arrows);
  for (int i = 0; i < na; ++i) {
    int s = static_cast<int>(rng.next_u64() % nv);
    int t = static_cast<int>(rng.next_u64() % nv);
    if (s == t)
      t = (t + 1) % nv;
    if (s > t)
      std::swap(s, t);
    q.arrows.push_back({"e" + std::to_string(i), q.vertices[s], q.vertices[t]});
  }
  return q;
}

} // namespace oracles

#endif
