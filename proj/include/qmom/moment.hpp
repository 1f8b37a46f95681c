#ifndef QMOM_MOMENT_HPP
#define QMOM_MOMENT_HPP

#include "qmom/repspace.hpp"

namespace qmom {

// The normalization mu = (sum_a theta_a d_a) / (sum_a d_a) and the shifted
// weights lambda_a = theta_a - mu, kept as exact rationals so that
// sum_a lambda_a d_a == 0 holds exactly. lambdas are indexed by vertex
// declaration order.
struct Slope {
  Rational mu;
  std::vector<Rational> lambdas;
};

Slope slope(const RepSpace& sp, const Weight& theta);

// The element L_theta(rho) of Lie(K): per vertex the skew-Hermitian matrix
// i (lambda_a I + A(rho)_a), where A(rho)_a sums rho rho^* over incoming
// arrows minus rho^* rho over outgoing ones. Identified with the functional
// Phi_theta(rho) through lie_inner.
struct MomentValue {
  std::vector<Matrix> comps;
};

MomentValue moment(const RepSpace& sp, const RepPoint& rho, const Weight& theta);

// Same formula with an arbitrary normalization in place of the slope; exists
// so the traceless projection below can be exercised against non-slope
// conventions.
MomentValue moment_with_mu(const RepSpace& sp, const RepPoint& rho,
                           const Weight& theta, const Rational& mu);

// lie_inner(L, L) = sum_a ||lambda_a I + A(rho)_a||_F^2, the squared norm of
// the moment value.
double moment_norm(const RepSpace& sp, const RepPoint& rho, const Weight& theta);

double moment_value_norm_sq(const RepSpace& sp, const MomentValue& mv);

// Component of mv orthogonal to the central line {i c I}: subtracts
// (sum_b tr(mv_b) / sum_b d_b)) I from every component. With the slope
// normalization this is the identity up to roundoff.
MomentValue traceless_part(const RepSpace& sp, const MomentValue& mv);

MomentValue reduced_moment(const RepSpace& sp, const RepPoint& rho,
                           const Weight& theta);

// | <xi, L(rho)> - (1/2 Omega(xi#(rho), rho) + <xi, eta>) | with
// eta_a = i lambda_a I. Zero up to roundoff for any correct moment map.
double check_lemma2(const RepSpace& sp, const RepPoint& rho, const LieElement& xi,
                    const Weight& theta);

// | dPhi^xi(rho)(tau) - Omega(xi#(rho), tau) |. The directional derivative is
// evaluated through the polarization of A, not by finite differences.
double check_hamiltonian(const RepSpace& sp, const RepPoint& rho,
                         const LieElement& xi, const RepPoint& tau,
                         const Weight& theta);

// max_a || L(rho k)_a - k_a^* L(rho)_a k_a ||_F for unitary k.
double check_equivariance(const RepSpace& sp, const RepPoint& rho,
                          const GroupElement& k, const Weight& theta);

// Directional derivative of Phi^xi at rho along tau (exact bilinear
// expansion). Exposed for the finite-difference cross-checks.
double moment_pairing_derivative(const RepSpace& sp, const RepPoint& rho,
                                 const RepPoint& tau, const LieElement& xi);

// Phi^xi(rho) = <xi, L(rho)>.
double moment_pairing(const RepSpace& sp, const RepPoint& rho,
                      const LieElement& xi, const Weight& theta);

} // namespace qmom

#endif
