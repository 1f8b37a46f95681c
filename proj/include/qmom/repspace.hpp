#ifndef QMOM_REPSPACE_HPP
#define QMOM_REPSPACE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qmom/quiver.hpp"

namespace qmom {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// A point of the representation space: one d_t(alpha) x d_s(alpha) matrix per
// arrow, indexed by arrow declaration order.
struct RepPoint {
  std::vector<Matrix> mats;
};

// One d_a x d_a matrix per vertex, indexed by vertex declaration order.
// GroupElement components must be invertible; LieElement components are
// unconstrained in Lie(G), skew-Hermitian in the Lie(K) sub-case.
struct GroupElement {
  std::vector<Matrix> comps;
};

struct LieElement {
  std::vector<Matrix> comps;
};

// The representation space of a fixed (quiver, dimension vector): shapes,
// dense indices, and nothing else. Construction validates the pair.
// Zero-dimensional vertices are legal; their matrices carry no data.
class RepSpace {
public:
  RepSpace(Quiver q, DimensionVector d);

  const Quiver& quiver() const { return quiver_; }
  const DimensionVector& dim_vector() const { return dims_map_; }

  int vertex_count() const { return static_cast<int>(quiver_.vertices.size()); }
  int arrow_count() const { return static_cast<int>(quiver_.arrows.size()); }

  int dim(int v) const { return dims_[v]; }
  long long total_dim() const { return total_dim_; }

  const std::string& vertex_id(int v) const { return quiver_.vertices[v]; }
  const std::string& arrow_id(int a) const { return quiver_.arrows[a].id; }
  int arrow_src(int a) const { return asrc_[a]; }
  int arrow_tgt(int a) const { return atgt_[a]; }
  int rows(int a) const { return dims_[atgt_[a]]; }
  int cols(int a) const { return dims_[asrc_[a]]; }

  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;

  RepPoint zero_point() const;
  LieElement zero_lie() const;
  GroupElement identity_group() const;

private:
  Quiver quiver_;
  DimensionVector dims_map_;
  std::vector<int> dims_;
  std::vector<int> asrc_, atgt_;
  std::unordered_map<std::string, int> vidx_, aidx_;
  long long total_dim_ = 0;
};

// Right action (rho g)_alpha = g_t^{-1} rho_alpha g_s. Throws Kind::domain,
// naming the vertex, when a component's reciprocal condition number estimate
// falls below 1e-12.
RepPoint act(const RepSpace& sp, const RepPoint& rho, const GroupElement& g);

// Hermitian inner product <u, v> = sum_alpha tr(u_alpha v_alpha^*), linear in
// the first slot and conjugate-linear in the second.
Complex inner(const RepSpace& sp, const RepPoint& u, const RepPoint& v);

double norm_sq(const RepSpace& sp, const RepPoint& u);

// Constant-coefficient symplectic form Omega(sigma, tau) = -2 Im <sigma, tau>.
double omega(const RepSpace& sp, const RepPoint& sigma, const RepPoint& tau);

// (xi#(rho))_alpha = rho_alpha xi_s - xi_t rho_alpha, the derivative at t = 0
// of act(rho, exp(t xi)).
RepPoint induced_vector_field(const RepSpace& sp, const LieElement& xi,
                              const RepPoint& rho);

// Inner product on Lie(K): -sum_a tr(xi_a eta_a). Inputs must be
// skew-Hermitian within tolerance (they are symmetrized before use);
// inputs beyond tolerance throw Kind::domain.
double lie_inner(const RepSpace& sp, const LieElement& xi, const LieElement& eta);

double lie_norm_sq(const RepSpace& sp, const LieElement& xi);

// ||xi_a + xi_a^*||_F <= 1e-9 (1 + ||xi_a||_F) at every vertex.
bool is_skew_within_tolerance(const RepSpace& sp, const LieElement& xi);

// (xi - xi^*) / 2, exactly skew-Hermitian.
LieElement skew_part(const RepSpace& sp, const LieElement& xi);

// max_a ||g_a^* g_a - I||_F
double unitary_defect(const RepSpace& sp, const GroupElement& g);

// Entries i.i.d. complex Gaussian, then the whole point scaled so that
// ||rho|| equals radius exactly (zero point if the space is trivial).
RepPoint random_point(const RepSpace& sp, double radius, std::uint64_t seed);

// Haar-distributed unitaries via QR of a Gaussian matrix with the usual
// phase correction from the R diagonal.
GroupElement random_unitary(const RepSpace& sp, std::uint64_t seed);

// (A - A^*) / 2 of a Gaussian A; exactly skew-Hermitian.
LieElement random_skew(const RepSpace& sp, std::uint64_t seed);

RepPoint scaled(const RepPoint& rho, double factor);
LieElement scaled(const LieElement& xi, double factor);

} // namespace qmom

#endif
