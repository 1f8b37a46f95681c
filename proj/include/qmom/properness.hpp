#ifndef QMOM_PROPERNESS_HPP
#define QMOM_PROPERNESS_HPP

#include <optional>

#include "qmom/moment.hpp"

namespace qmom {

// Unbounded family rho(n) with constant moment value, supported on a cycle:
// entry (1,1) of every cycle arrow equals n, everything else is zero.
// ||rho(n)||^2 = l n^2 for a cycle of length l, and moment(rho(n)) equals
// base_moment for every n.
struct CycleWitness {
  Path cycle;
  std::vector<std::string> cycle_vertices; // visited sequence, front == back
  MomentValue base_moment;                 // on the support space
  double base_moment_norm_sq = 0.0;
};

// The witness family generator. n may be fractional (the probe injects
// n = r / sqrt(l) to land on the sphere of radius r).
RepPoint witness_point(const RepSpace& sp, const Path& cycle, double n);

struct AffineBound {
  double c0 = 0.0;
  double c1 = 0.0;
  double eval(double m) const { return c0 + c1 * m; }
};

// One source-vertex peel: S_b(M) = max(0, c0 + c1 M) bounds the total squared
// norm carried by the arrows leaving b, given per-vertex moment budgets
// accumulated from earlier steps.
struct PeelStep {
  std::string vertex;
  std::vector<std::string> arrows;
  AffineBound bound;
};

// Coercivity schedule: ||Phi(rho)|| <= M implies ||rho|| <= radius(M).
// Sound, not tight. When infeasible_below is set, the level set
// { ||Phi|| <= M } is empty for every M below it.
struct CoercivityCertificate {
  std::vector<PeelStep> peel_order;
  std::optional<double> infeasible_below;

  double radius_sq(double m) const;
  double radius(double m) const;
};

struct PropernessReport {
  bool proper = false;
  std::string reason; // "cycle-found" | "acyclic-support"
  Quiver support;
  DimensionVector support_dims;
  Weight support_theta;
  Slope support_slope;
  bool support_differs = false; // some vertex was dropped (d_a == 0)
  std::optional<CycleWitness> witness;
  std::optional<CoercivityCertificate> certificate;
};

// Decides properness of the moment map on the full representation space of
// (q, d): arrows through zero-dimensional vertices contribute nothing, so the
// verdict is read off the support subquiver. Throws Kind::invalid when
// validate(q, d, theta) reports violations.
PropernessReport analyze(const Quiver& q, const DimensionVector& d,
                         const Weight& theta);

// sp must be the support space (all dims >= 1 along the cycle).
CycleWitness make_witness(const RepSpace& sp, const Weight& theta,
                          const Path& cycle);

// Peels source vertices off an acyclic space, all outgoing arrows at once.
// Throws Kind::domain when the quiver has a cycle.
CoercivityCertificate make_certificate(const RepSpace& sp, const Weight& theta);

struct KroneckerBound {
  double lhs = 0.0; // ||Phi(rho)||^2
  double rhs = 0.0; // (1/d_a + 1/d_b)||rho||^4 + 2(l_b - l_a)||rho||^2 + l_a^2 d_a + l_b^2 d_b
};

// Only defined on Kronecker-shaped spaces (two vertices, every arrow from the
// first to the second, both dims >= 1); anything else throws Kind::domain.
KroneckerBound kronecker_lower_bound(const RepSpace& sp, const RepPoint& rho,
                                     const Weight& theta);

struct ProbeRow {
  double radius = 0.0;
  double phi_min = 0.0; // min ||Phi(rho)|| over the sphere samples
  double phi_max = 0.0;
};

// Samples ||rho|| = r for each radius (witness points injected when the
// support has a cycle) and records the extremes of ||Phi||. Deterministic for
// a fixed seed.
std::vector<ProbeRow> probe(const Quiver& q, const DimensionVector& d,
                            const Weight& theta, const std::vector<double>& radii,
                            int samples_per_radius, std::uint64_t seed);

} // namespace qmom

#endif
