#ifndef QMOM_VERIFY_HPP
#define QMOM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qmom/quiver.hpp"

namespace qmom {

struct VerifyCheck {
  std::string name;
  int trials = 0;
  double worst_residual = 0.0;
  double worst_ratio = 0.0; // residual / tolerance, worst over trials
  bool pass = true;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
  bool vacuous = false; // trials == 0
};

// Seeded randomized run of the moment-map identity checks on one quiver:
// lemma2, hamiltonian (algebraic + finite-difference), equivariance,
// trace-centrality, and, when the quiver is Kronecker-shaped, the quartic
// lower bound. tol_scale multiplies every tolerance.
VerifyResult run_verify(const Quiver& q, const DimensionVector& d,
                        const Weight& theta, int trials, std::uint64_t seed,
                        double tol_scale = 1.0);

} // namespace qmom

#endif
