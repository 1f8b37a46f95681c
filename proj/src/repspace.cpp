#include "qmom/repspace.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include "qmom/error.hpp"
#include "qmom/rng.hpp"

namespace qmom {

namespace {

constexpr double kSkewTolFactor = 1e-9;
constexpr double kRcondFloor = 1e-12;

void check_point_shapes(const RepSpace& sp, const RepPoint& p, const char* what) {
  if (static_cast<int>(p.mats.size()) != sp.arrow_count())
    throw Error(Error::Kind::shape, std::string(what) + ": expected " +
                                        std::to_string(sp.arrow_count()) +
                                        " arrow matrices, got " +
                                        std::to_string(p.mats.size()));
  for (int a = 0; a < sp.arrow_count(); ++a) {
    const Matrix& m = p.mats[a];
    if (m.rows() != sp.rows(a) || m.cols() != sp.cols(a))
      throw Error(Error::Kind::shape,
                  std::string(what) + ": arrow \"" + sp.arrow_id(a) +
                      "\" expects a " + std::to_string(sp.rows(a)) + "x" +
                      std::to_string(sp.cols(a)) + " matrix, got " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void check_vertex_shapes(const RepSpace& sp, const std::vector<Matrix>& comps,
                         const char* what) {
  if (static_cast<int>(comps.size()) != sp.vertex_count())
    throw Error(Error::Kind::shape, std::string(what) + ": expected " +
                                        std::to_string(sp.vertex_count()) +
                                        " vertex matrices, got " +
                                        std::to_string(comps.size()));
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const Matrix& m = comps[v];
    if (m.rows() != sp.dim(v) || m.cols() != sp.dim(v))
      throw Error(Error::Kind::shape,
                  std::string(what) + ": vertex \"" + sp.vertex_id(v) +
                      "\" expects a " + std::to_string(sp.dim(v)) + "x" +
                      std::to_string(sp.dim(v)) + " matrix, got " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

} // namespace

RepSpace::RepSpace(Quiver q, DimensionVector d)
    : quiver_(std::move(q)), dims_map_(std::move(d)) {
  auto violations = validate(quiver_, dims_map_);
  if (!violations.empty()) {
    std::string msg = "invalid representation space:";
    for (const auto& v : violations)
      msg += "\n  " + v;
    throw Error(Error::Kind::invalid, msg);
  }
  dims_.reserve(quiver_.vertices.size());
  for (int i = 0; i < static_cast<int>(quiver_.vertices.size()); ++i) {
    vidx_.emplace(quiver_.vertices[i], i);
    dims_.push_back(dims_map_.dims.at(quiver_.vertices[i]));
    total_dim_ += dims_.back();
  }
  for (int a = 0; a < static_cast<int>(quiver_.arrows.size()); ++a) {
    aidx_.emplace(quiver_.arrows[a].id, a);
    asrc_.push_back(vidx_.at(quiver_.arrows[a].src));
    atgt_.push_back(vidx_.at(quiver_.arrows[a].tgt));
  }
}

int RepSpace::vertex_index(const std::string& id) const {
  auto it = vidx_.find(id);
  if (it == vidx_.end())
    throw Error(Error::Kind::domain, "unknown vertex \"" + id + "\"");
  return it->second;
}

int RepSpace::arrow_index(const std::string& id) const {
  auto it = aidx_.find(id);
  if (it == aidx_.end())
    throw Error(Error::Kind::domain, "unknown arrow \"" + id + "\"");
  return it->second;
}

RepPoint RepSpace::zero_point() const {
  RepPoint p;
  p.mats.reserve(arrow_count());
  for (int a = 0; a < arrow_count(); ++a)
    p.mats.push_back(Matrix::Zero(rows(a), cols(a)));
  return p;
}

LieElement RepSpace::zero_lie() const {
  LieElement x;
  x.comps.reserve(vertex_count());
  for (int v = 0; v < vertex_count(); ++v)
    x.comps.push_back(Matrix::Zero(dim(v), dim(v)));
  return x;
}

GroupElement RepSpace::identity_group() const {
  GroupElement g;
  g.comps.reserve(vertex_count());
  for (int v = 0; v < vertex_count(); ++v)
    g.comps.push_back(Matrix::Identity(dim(v), dim(v)));
  return g;
}

RepPoint act(const RepSpace& sp, const RepPoint& rho, const GroupElement& g) {
  check_point_shapes(sp, rho, "act");
  check_vertex_shapes(sp, g.comps, "act");

  std::vector<Matrix> inv(sp.vertex_count());
  for (int v = 0; v < sp.vertex_count(); ++v) {
    if (sp.dim(v) == 0) {
      inv[v] = Matrix(0, 0);
      continue;
    }
    Eigen::JacobiSVD<Matrix> svd(g.comps[v]);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    if (!(smax > 0.0) || smin / smax < kRcondFloor)
      throw Error(Error::Kind::domain,
                  "group element is singular at vertex \"" + sp.vertex_id(v) + "\"");
    inv[v] = g.comps[v].inverse();
  }

  RepPoint out;
  out.mats.reserve(sp.arrow_count());
  for (int a = 0; a < sp.arrow_count(); ++a)
    out.mats.push_back(inv[sp.arrow_tgt(a)] * rho.mats[a] * g.comps[sp.arrow_src(a)]);
  return out;
}

Complex inner(const RepSpace& sp, const RepPoint& u, const RepPoint& v) {
  check_point_shapes(sp, u, "inner");
  check_point_shapes(sp, v, "inner");
  Complex s{0.0, 0.0};
  for (int a = 0; a < sp.arrow_count(); ++a)
    s += (u.mats[a].array() * v.mats[a].array().conjugate()).sum();
  return s;
}

double norm_sq(const RepSpace& sp, const RepPoint& u) {
  check_point_shapes(sp, u, "norm_sq");
  double s = 0.0;
  for (const auto& m : u.mats)
    s += m.squaredNorm();
  return s;
}

double omega(const RepSpace& sp, const RepPoint& sigma, const RepPoint& tau) {
  return -2.0 * inner(sp, sigma, tau).imag();
}

RepPoint induced_vector_field(const RepSpace& sp, const LieElement& xi,
                              const RepPoint& rho) {
  check_vertex_shapes(sp, xi.comps, "induced_vector_field");
  check_point_shapes(sp, rho, "induced_vector_field");
  RepPoint out;
  out.mats.reserve(sp.arrow_count());
  for (int a = 0; a < sp.arrow_count(); ++a)
    out.mats.push_back(rho.mats[a] * xi.comps[sp.arrow_src(a)] -
                       xi.comps[sp.arrow_tgt(a)] * rho.mats[a]);
  return out;
}

bool is_skew_within_tolerance(const RepSpace& sp, const LieElement& xi) {
  check_vertex_shapes(sp, xi.comps, "is_skew_within_tolerance");
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const Matrix& m = xi.comps[v];
    const double defect = (m + m.adjoint()).norm();
    if (defect > kSkewTolFactor * (1.0 + m.norm()))
      return false;
  }
  return true;
}

LieElement skew_part(const RepSpace& sp, const LieElement& xi) {
  check_vertex_shapes(sp, xi.comps, "skew_part");
  LieElement out;
  out.comps.reserve(sp.vertex_count());
  for (const auto& m : xi.comps)
    out.comps.push_back(0.5 * (m - m.adjoint().eval()));
  return out;
}

double lie_inner(const RepSpace& sp, const LieElement& xi, const LieElement& eta) {
  if (!is_skew_within_tolerance(sp, xi) || !is_skew_within_tolerance(sp, eta))
    throw Error(Error::Kind::domain, "lie_inner requires skew-Hermitian input");
  const LieElement xs = skew_part(sp, xi);
  const LieElement es = skew_part(sp, eta);
  Complex s{0.0, 0.0};
  for (int v = 0; v < sp.vertex_count(); ++v)
    s -= (xs.comps[v] * es.comps[v]).trace();
  return s.real();
}

double lie_norm_sq(const RepSpace& sp, const LieElement& xi) {
  return lie_inner(sp, xi, xi);
}

double unitary_defect(const RepSpace& sp, const GroupElement& g) {
  check_vertex_shapes(sp, g.comps, "unitary_defect");
  double worst = 0.0;
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const Matrix& m = g.comps[v];
    const double d =
        (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
    worst = std::max(worst, d);
  }
  return worst;
}

RepPoint random_point(const RepSpace& sp, double radius, std::uint64_t seed) {
  Rng rng(seed);
  RepPoint p = sp.zero_point();
  double nsq = 0.0;
  for (int a = 0; a < sp.arrow_count(); ++a)
    for (int i = 0; i < p.mats[a].rows(); ++i)
      for (int j = 0; j < p.mats[a].cols(); ++j) {
        const Complex z = rng.cgaussian();
        p.mats[a](i, j) = z;
        nsq += std::norm(z);
      }
  if (radius == 0.0 || nsq == 0.0)
    return sp.zero_point();
  return scaled(p, radius / std::sqrt(nsq));
}

GroupElement random_unitary(const RepSpace& sp, std::uint64_t seed) {
  Rng rng(seed);
  GroupElement g;
  g.comps.reserve(sp.vertex_count());
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const int d = sp.dim(v);
    if (d == 0) {
      g.comps.emplace_back(0, 0);
      continue;
    }
    Matrix a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        a(i, j) = rng.cgaussian();
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
      const Complex rjj = r(j, j);
      const double m = std::abs(rjj);
      q.col(j) *= (m > 0.0) ? rjj / m : Complex(1.0, 0.0);
    }
    g.comps.push_back(std::move(q));
  }
  return g;
}

LieElement random_skew(const RepSpace& sp, std::uint64_t seed) {
  Rng rng(seed);
  LieElement x;
  x.comps.reserve(sp.vertex_count());
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const int d = sp.dim(v);
    Matrix a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        a(i, j) = rng.cgaussian();
    x.comps.push_back(0.5 * (a - a.adjoint().eval()));
  }
  return x;
}

RepPoint scaled(const RepPoint& rho, double factor) {
  RepPoint out = rho;
  for (auto& m : out.mats)
    m *= factor;
  return out;
}

LieElement scaled(const LieElement& xi, double factor) {
  LieElement out = xi;
  for (auto& m : out.comps)
    m *= factor;
  return out;
}

} // namespace qmom
