#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "qmom/error.hpp"
#include "qmom/moment.hpp"
#include "qmom/properness.hpp"

using namespace qmom;

namespace {

RepSpace kron1_space() {
  return RepSpace({{"a", "b"}, {{"al", "a", "b"}}},
                  DimensionVector{{{"a", 1}, {"b", 1}}});
}

Weight theta_of(const RepSpace& sp, std::initializer_list<Rational> values) {
  Weight w;
  int v = 0;
  for (const auto& r : values)
    w.theta[sp.vertex_id(v++)] = r;
  return w;
}

RepSpace mixed_space() {
  Quiver q{{"a", "b", "c"},
           {{"e0", "a", "b"}, {"e1", "b", "c"}, {"e2", "c", "a"}, {"e3", "b", "b"}}};
  DimensionVector d{{{"a", 2}, {"b", 3}, {"c", 2}}};
  return RepSpace(q, d);
}

Weight random_theta(const RepSpace& sp, std::uint64_t seed) {
  Rng rng(seed);
  Weight w;
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const std::int64_t p = static_cast<std::int64_t>(rng.next_u64() % 19) - 9;
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng.next_u64() % 9);
    w.theta[sp.vertex_id(v)] = Rational(p, q);
  }
  return w;
}

} // namespace

TEST_CASE("slope of the zero weight vanishes") {
  const RepSpace sp = mixed_space();
  const Slope s = slope(sp, theta_of(sp, {Rational(0), Rational(0), Rational(0)}));
  CHECK(s.mu == Rational(0));
  for (const auto& l : s.lambdas)
    CHECK(l == Rational(0));
}

TEST_CASE("slope splits (1,0) on two unit vertices into +-1/2") {
  const RepSpace sp = kron1_space();
  const Slope s = slope(sp, theta_of(sp, {Rational(1), Rational(0)}));
  CHECK(s.mu == Rational(1, 2));
  CHECK(s.lambdas[0] == Rational(1, 2));
  CHECK(s.lambdas[1] == Rational(-1, 2));
}

TEST_CASE("constant weights are annihilated") {
  const RepSpace sp = mixed_space();
  const Slope s =
      slope(sp, theta_of(sp, {Rational(5, 3), Rational(5, 3), Rational(5, 3)}));
  CHECK(s.mu == Rational(5, 3));
  for (const auto& l : s.lambdas)
    CHECK(l == Rational(0));
}

TEST_CASE("sum lambda_a d_a vanishes exactly for random weights") {
  const RepSpace sp = mixed_space();
  for (int t = 0; t < 50; ++t) {
    const Slope s = slope(sp, random_theta(sp, 1000 + t));
    Rational sum(0);
    for (int v = 0; v < sp.vertex_count(); ++v)
      sum = sum + s.lambdas[v] * Rational(sp.dim(v));
    CHECK(sum == Rational(0));
  }
}

TEST_CASE("moment of the zero point is i lambda I") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 5);
  const Slope s = slope(sp, w);
  const MomentValue mv = moment(sp, sp.zero_point(), w);
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const Matrix expected = Complex{0.0, 1.0} * s.lambdas[v].to_double() *
                            Matrix::Identity(sp.dim(v), sp.dim(v));
    CHECK((mv.comps[v] - expected).norm() == 0.0);
  }
}

TEST_CASE("moment on the 1x1 Kronecker space matches scalar arithmetic") {
  const RepSpace sp = kron1_space();
  const Weight w = theta_of(sp, {Rational(0), Rational(0)});
  RepPoint rho = sp.zero_point();
  rho.mats[0](0, 0) = Complex{1.0, -2.0}; // |x|^2 = 5
  const MomentValue mv = moment(sp, rho, w);
  CHECK(mv.comps[0](0, 0).real() == doctest::Approx(0.0));
  CHECK(mv.comps[0](0, 0).imag() == doctest::Approx(-5.0));
  CHECK(mv.comps[1](0, 0).imag() == doctest::Approx(5.0));
  CHECK(moment_norm(sp, rho, w) == doctest::Approx(50.0)); // 2 |x|^4
}

TEST_CASE("moment components are skew-Hermitian") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 6);
  const MomentValue mv = moment(sp, random_point(sp, 4.0, 7), w);
  for (const auto& m : mv.comps)
    CHECK((m + m.adjoint()).norm() <= 1e-12 * (1.0 + m.norm()));
}

TEST_CASE("moment of the witness family does not depend on n") {
  // Loop at b with d_b = 2: rho(3) = [[3,0],[0,0]] is normal, so A = 0.
  RepSpace sp({{"b"}, {{"beta", "b", "b"}}}, DimensionVector{{{"b", 2}}});
  const Weight w = theta_of(sp, {Rational(0)});
  const Path cycle{{"beta"}};
  const RepPoint r3 = witness_point(sp, cycle, 3.0);
  CHECK(r3.mats[0](0, 0) == Complex{3.0, 0.0});
  CHECK(r3.mats[0](1, 1) == Complex{0.0, 0.0});
  CHECK(moment_value_norm_sq(sp, moment(sp, r3, w)) == 0.0);

  // Triangle, all dims 1: each vertex gains n^2 in and loses n^2 out.
  RepSpace tri({{"a", "b", "c"},
                {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}}},
               DimensionVector{{{"a", 1}, {"b", 1}, {"c", 1}}});
  const Weight tw = theta_of(tri, {Rational(0), Rational(0), Rational(0)});
  const Path tc{{"ab", "bc", "ca"}};
  for (const double n : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    const MomentValue mv = moment(tri, witness_point(tri, tc, n), tw);
    CHECK(moment_value_norm_sq(tri, mv) == 0.0);
  }
}

TEST_CASE("moment_norm of the zero point is sum lambda^2 d") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 8);
  const Slope s = slope(sp, w);
  double expected = 0.0;
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const double l = s.lambdas[v].to_double();
    expected += l * l * sp.dim(v);
  }
  CHECK(moment_norm(sp, sp.zero_point(), w) == doctest::Approx(expected));
}

TEST_CASE("lemma2 residual is zero for xi = 0 and tiny for rho = 0") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 9);
  const RepPoint rho = random_point(sp, 5.0, 10);
  CHECK(check_lemma2(sp, rho, sp.zero_lie(), w) == 0.0);
  const LieElement xi = random_skew(sp, 11);
  CHECK(check_lemma2(sp, sp.zero_point(), xi, w) <= 1e-12);
}

TEST_CASE("lemma2 residual stays within tolerance on random data") {
  const RepSpace sp = mixed_space();
  for (int t = 0; t < 100; ++t) {
    const Weight w = random_theta(sp, 2000 + t);
    Rng rng(3000 + t);
    const RepPoint rho = random_point(sp, rng.uniform() * 10.0, 4000 + t);
    LieElement xi = random_skew(sp, 5000 + t);
    const double xn = std::sqrt(lie_norm_sq(sp, xi));
    if (xn > 0)
      xi = scaled(xi, rng.uniform() * 10.0 / xn);
    const double res = check_lemma2(sp, rho, xi, w);
    const double tol = 1e-9 * (1.0 + norm_sq(sp, rho)) *
                       (1.0 + std::sqrt(lie_norm_sq(sp, xi)));
    CHECK(res <= tol);
  }
}

TEST_CASE("hamiltonian residual: tau = 0 gives exactly zero") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 12);
  const RepPoint rho = random_point(sp, 3.0, 13);
  const LieElement xi = random_skew(sp, 14);
  CHECK(check_hamiltonian(sp, rho, xi, sp.zero_point(), w) == 0.0);
}

TEST_CASE("hamiltonian residual: central xi gives zero on both sides") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 15);
  const RepPoint rho = random_point(sp, 3.0, 16);
  const RepPoint tau = random_point(sp, 2.0, 17);
  LieElement central;
  for (int v = 0; v < sp.vertex_count(); ++v)
    central.comps.push_back(Complex{0.0, -1.3} *
                            Matrix::Identity(sp.dim(v), sp.dim(v)));
  CHECK(check_hamiltonian(sp, rho, central, tau, w) <= 1e-12);
  CHECK(omega(sp, induced_vector_field(sp, central, rho), tau) ==
        doctest::Approx(0.0));
}

TEST_CASE("hamiltonian identity and its finite-difference cross-check") {
  const RepSpace sp = mixed_space();
  for (int t = 0; t < 50; ++t) {
    const Weight w = random_theta(sp, 6000 + t);
    const RepPoint rho = random_point(sp, 5.0, 7000 + t);
    const RepPoint tau = random_point(sp, 4.0, 8000 + t);
    const LieElement xi = random_skew(sp, 9000 + t);

    const double res = check_hamiltonian(sp, rho, xi, tau, w);
    CHECK(res <= 1e-9 * (1.0 + 20.0) * (1.0 + std::sqrt(lie_norm_sq(sp, xi))));

    const double h = 1e-5;
    RepPoint plus = rho, minus = rho;
    for (int a = 0; a < sp.arrow_count(); ++a) {
      plus.mats[a] += h * tau.mats[a];
      minus.mats[a] -= h * tau.mats[a];
    }
    const double fd = (moment_pairing(sp, plus, xi, w) -
                       moment_pairing(sp, minus, xi, w)) /
                      (2.0 * h);
    CHECK(std::abs(fd - moment_pairing_derivative(sp, rho, tau, xi)) <= 1e-6);
  }
}

TEST_CASE("equivariance residual") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 18);
  const RepPoint rho = random_point(sp, 4.0, 19);

  CHECK(check_equivariance(sp, rho, sp.identity_group(), w) == 0.0);
  CHECK(check_equivariance(sp, sp.zero_point(), random_unitary(sp, 20), w) <=
        1e-12);
  for (int t = 0; t < 50; ++t) {
    const RepPoint r = random_point(sp, 6.0, 10000 + t);
    const GroupElement k = random_unitary(sp, 11000 + t);
    CHECK(check_equivariance(sp, r, k, w) <= 1e-9 * (1.0 + norm_sq(sp, r)));
  }
}

TEST_CASE("equivariance rejects non-unitary k") {
  const RepSpace sp = kron1_space();
  GroupElement g = sp.identity_group();
  g.comps[0] *= 2.0;
  CHECK_THROWS_AS(check_equivariance(sp, sp.zero_point(), g,
                                     theta_of(sp, {Rational(0), Rational(0)})),
                  Error);
}

TEST_CASE("trace of the moment value sums to zero") {
  const RepSpace sp = mixed_space();
  for (int t = 0; t < 50; ++t) {
    const Weight w = random_theta(sp, 12000 + t);
    const RepPoint rho = random_point(sp, 8.0, 13000 + t);
    const MomentValue mv = moment(sp, rho, w);
    Complex tr{0.0, 0.0};
    for (const auto& m : mv.comps)
      tr += (Complex{0.0, -1.0} * m).trace();
    CHECK(std::abs(tr) <= 1e-9 * (1.0 + norm_sq(sp, rho)));
  }
}

TEST_CASE("the moment map is affine in theta with constant difference") {
  const RepSpace sp = mixed_space();
  const Weight w1 = random_theta(sp, 21);
  const Weight w2 = random_theta(sp, 22);
  const RepPoint r1 = random_point(sp, 5.0, 23);
  const RepPoint r2 = random_point(sp, 2.0, 24);
  const MomentValue d1 = moment(sp, r1, w1);
  const MomentValue d1b = moment(sp, r1, w2);
  const MomentValue d2 = moment(sp, r2, w1);
  const MomentValue d2b = moment(sp, r2, w2);
  for (int v = 0; v < sp.vertex_count(); ++v) {
    const Matrix diff1 = d1.comps[v] - d1b.comps[v];
    const Matrix diff2 = d2.comps[v] - d2b.comps[v];
    CHECK((diff1 - diff2).norm() <= 1e-9);
  }
}

TEST_CASE("reduced moment equals the moment under the slope convention") {
  const RepSpace sp = mixed_space();
  for (int t = 0; t < 25; ++t) {
    const Weight w = random_theta(sp, 14000 + t);
    const RepPoint rho = random_point(sp, 6.0, 15000 + t);
    const MomentValue a = moment(sp, rho, w);
    const MomentValue b = reduced_moment(sp, rho, w);
    for (int v = 0; v < sp.vertex_count(); ++v)
      CHECK((a.comps[v] - b.comps[v]).norm() <=
            1e-9 * (1.0 + norm_sq(sp, rho)));
  }
}

TEST_CASE("reduced moment of the zero point at theta = 0 is zero") {
  const RepSpace sp = mixed_space();
  const Weight w = theta_of(sp, {Rational(0), Rational(0), Rational(0)});
  const MomentValue mv = reduced_moment(sp, sp.zero_point(), w);
  CHECK(moment_value_norm_sq(sp, mv) == 0.0);
}

TEST_CASE("the traceless projection works for any normalization") {
  const RepSpace sp = mixed_space();
  const Weight w = random_theta(sp, 25);
  const RepPoint rho = random_point(sp, 5.0, 26);
  for (const Rational& mu : {Rational(0), Rational(3, 7), Rational(-5, 2)}) {
    const MomentValue perturbed = moment_with_mu(sp, rho, w, mu);
    const MomentValue projected = traceless_part(sp, perturbed);
    Complex tr{0.0, 0.0};
    for (const auto& m : projected.comps)
      tr += m.trace();
    CHECK(std::abs(tr) <= 1e-12 * (1.0 + norm_sq(sp, rho)));
  }
}
