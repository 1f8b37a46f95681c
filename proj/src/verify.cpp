#include "qmom/verify.hpp"

#include <cmath>

#include "qmom/error.hpp"
#include "qmom/moment.hpp"
#include "qmom/properness.hpp"
#include "qmom/rng.hpp"

namespace qmom {

namespace {

bool is_kronecker_shaped(const RepSpace& sp) {
  if (sp.vertex_count() != 2 || sp.arrow_count() == 0)
    return false;
  const int src = sp.arrow_src(0);
  const int tgt = sp.arrow_tgt(0);
  if (src == tgt || sp.dim(src) < 1 || sp.dim(tgt) < 1)
    return false;
  for (int a = 0; a < sp.arrow_count(); ++a)
    if (sp.arrow_src(a) != src || sp.arrow_tgt(a) != tgt)
      return false;
  return true;
}

void record(VerifyCheck& c, double residual, double tolerance) {
  ++c.trials;
  c.worst_residual = std::max(c.worst_residual, residual);
  const double ratio = residual / tolerance;
  c.worst_ratio = std::max(c.worst_ratio, ratio);
  if (ratio > 1.0)
    c.pass = false;
}

} // namespace

VerifyResult run_verify(const Quiver& q, const DimensionVector& d,
                        const Weight& theta, int trials, std::uint64_t seed,
                        double tol_scale) {
  auto violations = validate(q, d, theta);
  if (!violations.empty())
    throw Error(Error::Kind::invalid, "invalid input");

  const RepSpace sp(q, d);
  const bool kron = is_kronecker_shaped(sp);

  VerifyResult result;
  result.checks.assign({VerifyCheck{"lemma2"}, VerifyCheck{"hamiltonian"},
                        VerifyCheck{"hamiltonian-fd"}, VerifyCheck{"equivariance"},
                        VerifyCheck{"trace-centrality"}});
  if (kron)
    result.checks.push_back(VerifyCheck{"kronecker-bound"});

  if (trials <= 0) {
    result.vacuous = true;
    return result;
  }

  const double base = 1e-9 * tol_scale;
  for (int t = 0; t < trials; ++t) {
    Rng trial_rng(Rng::derive(seed, t));
    const double rho_r = trial_rng.uniform() * 10.0;
    const double tau_r = trial_rng.uniform() * 10.0;
    const double xi_r = trial_rng.uniform() * 10.0;

    const RepPoint rho = random_point(sp, rho_r, Rng::derive(seed, t * 8 + 1));
    const RepPoint tau = random_point(sp, tau_r, Rng::derive(seed, t * 8 + 2));
    LieElement xi = random_skew(sp, Rng::derive(seed, t * 8 + 3));
    const double xn = std::sqrt(lie_norm_sq(sp, xi));
    if (xn > 0.0)
      xi = scaled(xi, xi_r / xn);
    const GroupElement k = random_unitary(sp, Rng::derive(seed, t * 8 + 4));

    const double rho_sq = norm_sq(sp, rho);
    const double xi_n = std::sqrt(lie_norm_sq(sp, xi));

    record(result.checks[0], check_lemma2(sp, rho, xi, theta),
           base * (1.0 + rho_sq) * (1.0 + xi_n));

    record(result.checks[1], check_hamiltonian(sp, rho, xi, tau, theta),
           base * (1.0 + std::sqrt(rho_sq) * tau_r) * (1.0 + xi_n));

    // Central difference of the quadratic Phi^xi; exact up to roundoff.
    {
      const double h = 1e-5;
      RepPoint plus = rho, minus = rho;
      for (int a = 0; a < sp.arrow_count(); ++a) {
        plus.mats[a] += h * tau.mats[a];
        minus.mats[a] -= h * tau.mats[a];
      }
      const double fd = (moment_pairing(sp, plus, xi, theta) -
                         moment_pairing(sp, minus, xi, theta)) /
                        (2.0 * h);
      const double alg = moment_pairing_derivative(sp, rho, tau, xi);
      record(result.checks[2], std::abs(fd - alg), 1e-6 * tol_scale);
    }

    record(result.checks[3], check_equivariance(sp, rho, k, theta),
           base * (1.0 + rho_sq));

    {
      const MomentValue mv = moment(sp, rho, theta);
      Complex tr{0.0, 0.0};
      for (const auto& m : mv.comps)
        tr += (Complex(0.0, -1.0) * m).trace();
      record(result.checks[4], std::abs(tr), base * (1.0 + rho_sq));
    }

    if (kron) {
      const KroneckerBound kb = kronecker_lower_bound(sp, rho, theta);
      record(result.checks[5], std::max(0.0, kb.rhs - kb.lhs),
             base * (1.0 + kb.lhs));
    }
  }

  for (const auto& c : result.checks)
    result.all_pass = result.all_pass && c.pass;
  return result;
}

} // namespace qmom
