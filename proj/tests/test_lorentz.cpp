#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "rankone/errors.hpp"
#include "rankone/lorentz_geom.hpp"
#include "rankone/specfun.hpp"
#include "rankone/spherical.hpp"

using namespace rankone;
using namespace rankone::lorentz;
namespace sf = rankone::specfun;

namespace {

constexpr double pi = 3.14159265358979323846;

double max_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Scaled-and-squared Taylor series for exp(A).
Matrix taylor_exp(const Matrix& a) {
  int squarings = 0;
  Matrix scaled = a;
  while (scaled.cwiseAbs().maxCoeff() > 0.1) {
    scaled /= 2.0;
    ++squarings;
  }
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / k;
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// Random rotation in SO(n) via QR of a Gaussian matrix.
Matrix random_rotation(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

Vector random_vector(int m, double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector x(m);
  for (int i = 0; i < m; ++i) x(i) = u(rng);
  return x;
}

LorentzMatrix random_element(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> r(-1.5, 1.5);
  return make_k(random_rotation(n, rng)) * make_a(r(rng), n) *
         make_n(random_vector(n - 1, 1.0, rng)) * make_k(random_rotation(n, rng));
}

SpherePoint random_point(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector z(n);
  for (int i = 0; i < n; ++i) z(i) = g(rng);
  return SpherePoint(z / z.norm());
}

QuadratureSpec tight() {
  QuadratureSpec spec;
  spec.relative_tolerance = 1e-11;
  spec.absolute_tolerance = 1e-15;
  return spec;
}

}  // namespace

TEST_CASE("make_a: identity, group law, matrix exponential") {
  CHECK(max_diff(make_a(0.0, 3).entries(), Matrix::Identity(4, 4)) == 0.0);
  for (double r : {-2.0, 0.3, 1.7}) {
    for (double r2 : {-0.4, 0.9}) {
      CHECK(max_diff((make_a(r, 3) * make_a(r2, 3)).entries(),
                     make_a(r + r2, 3).entries()) < 1e-12);
    }
  }
  Matrix h = Matrix::Zero(4, 4);
  h(0, 1) = h(1, 0) = 1.0;
  CHECK(max_diff(taylor_exp(0.7 * h), make_a(0.7, 3).entries()) < 1e-12);
}

TEST_CASE("make_n: identity, group law, invariants") {
  std::mt19937_64 rng(7);
  CHECK(max_diff(make_n(Vector::Zero(2)).entries(), Matrix::Identity(4, 4)) == 0.0);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 20; ++i) {
      const Vector x = random_vector(m, 2.0, rng);
      const Vector y = random_vector(m, 2.0, rng);
      CHECK(max_diff((make_n(x) * make_n(y)).entries(), make_n(x + y).entries()) < 1e-12);
      const Matrix g = make_n(x).entries();
      const Matrix j = minkowski_form(m + 1);
      CHECK(max_diff(g.transpose() * j * g, j) < 1e-12);
    }
  }
}

TEST_CASE("LorentzMatrix rejects non-members") {
  Matrix bad = Matrix::Identity(3, 3);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(LorentzMatrix{bad}, InvariantError);
  Matrix flip = Matrix::Identity(3, 3);
  flip(0, 0) = -1.0;
  flip(1, 1) = -1.0;
  CHECK_THROWS_AS(LorentzMatrix{flip}, InvariantError);
  Matrix reflect = Matrix::Identity(3, 3);
  reflect(2, 2) = -1.0;
  CHECK_THROWS_AS(LorentzMatrix{reflect}, InvariantError);
  CHECK_THROWS_AS(make_a(0.1, 1), DomainError);
}

TEST_CASE("lorentz_inverse") {
  std::mt19937_64 rng(11);
  CHECK(max_diff(lorentz_inverse(LorentzMatrix::identity(3)).entries(),
                 Matrix::Identity(4, 4)) == 0.0);
  CHECK(max_diff(lorentz_inverse(make_a(1.3, 2)).entries(), make_a(-1.3, 2).entries()) <
        1e-14);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < 20; ++i) {
      const LorentzMatrix g = random_element(n, rng);
      const Matrix prod = (g * lorentz_inverse(g)).entries();
      CHECK(max_diff(prod, Matrix::Identity(n + 1, n + 1)) < 1e-10);
    }
  }
}

TEST_CASE("a_r n_y a_{-r} = n_{e^r y}") {
  Vector y(2);
  y << 0.4, -1.1;
  for (double r : {-0.8, 0.5, 1.4}) {
    const Matrix lhs = (make_a(r, 3) * make_n(y) * make_a(-r, 3)).entries();
    CHECK(max_diff(lhs, make_n(std::exp(r) * y).entries()) < 1e-12);
  }
}

TEST_CASE("sphere action and cocycle") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n) {
    const SpherePoint z0 = zeta0(n);
    CHECK((act_on_sphere(make_a(0.9, n), z0).zeta() - z0.zeta()).norm() < 1e-14);
    CHECK(cocycle_r(make_a(0.9, n), z0) == doctest::Approx(0.9).epsilon(1e-14));
    for (int i = 0; i < 30; ++i) {
      const LorentzMatrix g = random_element(n, rng);
      const LorentzMatrix h = random_element(n, rng);
      const SpherePoint z = random_point(n, rng);
      CHECK((act_on_sphere(LorentzMatrix::identity(n), z).zeta() - z.zeta()).norm() < 1e-15);
      const SpherePoint hz = act_on_sphere(h, z);
      CHECK((act_on_sphere(g * h, z).zeta() - act_on_sphere(g, hz).zeta()).norm() < 1e-10);
      CHECK(std::abs(cocycle_r(g * h, z) - cocycle_r(g, hz) - cocycle_r(h, z)) < 1e-10);
      CHECK(std::abs(cocycle_r(make_k(random_rotation(n, rng)), z)) < 1e-15);
    }
  }
}

TEST_CASE("stereographic projection") {
  std::mt19937_64 rng(5);
  CHECK_THROWS_AS(stereographic(zeta0(3)), DomainError);
  Vector south = Vector::Zero(3);
  south(0) = -1.0;
  CHECK(stereographic(SpherePoint(south)).norm() == 0.0);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 50; ++i) {
      const Vector x = random_vector(m, 5.0, rng);
      CHECK((stereographic(inverse_stereographic(x)) - x).norm() < 1e-12 * (1 + x.norm()));
      const SpherePoint z = random_point(m + 1, rng);
      const double z1 = z.zeta()(0);
      CHECK(stereographic(z).squaredNorm() ==
            doctest::Approx((1 + z1) / (1 - z1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("stereographic change of variables is an isometry") {
  const QuadratureSpec spec = tight();
  const std::vector<std::function<cplx(const Vector&)>> samples = {
      [](const Vector&) { return cplx{1.0, 0.0}; },
      [](const Vector& z) { return cplx{z(0), 0.0}; },
      [](const Vector& z) { return std::exp(cplx{z(1), 2.0 * z(0)}); },
      [](const Vector& z) { return cplx{1.0 + z(0) * z(1), z(1) * z(1)}; },
      [](const Vector& z) { return cplx{std::cos(3.0 * z(0)), std::sin(z(1))}; },
  };
  for (int m = 1; m <= 2; ++m) {
    const int n = m + 1;
    const double c = sf::gamma(static_cast<double>(m)).real() /
                     (std::pow(pi, 0.5 * m) * sf::gamma(0.5 * m).real());
    for (const auto& h : samples) {
      const cplx lhs = sphere_average(
          n, [&](const Vector& z) { return cplx{std::norm(h(z)), 0.0}; }, spec);
      // |Uh|^2 integrated over R^m in the variable |x| = e^u.
      const auto radial = [&](double rho) -> cplx {
        const double weight = std::pow(rho * rho + 1.0, -m) * std::pow(rho, m);
        if (m == 1) {
          Vector xp(1), xm(1);
          xp << rho;
          xm << -rho;
          return weight * (std::norm(h(inverse_stereographic(xp).zeta())) +
                           std::norm(h(inverse_stereographic(xm).zeta())));
        }
        const sf::Integrand ang = [&](double phi) {
          Vector x(2);
          x << rho * std::cos(phi), rho * std::sin(phi);
          return cplx{std::norm(h(inverse_stereographic(x).zeta())), 0.0};
        };
        return weight * sf::integrate_periodic(ang, 2.0 * pi, spec);
      };
      const sf::Integrand f = [&](double u) { return radial(std::exp(u)); };
      const double rhs =
          c * (sf::integrate(f, sf::Interval::from_minus_infinity(0.0, m), spec).value +
               sf::integrate(f, sf::Interval::to_infinity(0.0, m), spec).value)
                  .real();
      CHECK(std::abs(lhs.real() - rhs) < 1e-6);
    }
  }
}

TEST_CASE("pi~ action law and unitarity on L^2(R)") {
  const QuadratureSpec spec = tight();
  const auto f = [](double x) { return std::exp(-x * x) * cplx{1.0, x}; };
  const auto act_a = [](double r, const std::function<cplx(double)>& g) {
    return [r, g](double x) { return std::exp(0.5 * r) * g(std::exp(r) * x); };
  };
  const auto act_n = [](double y, const std::function<cplx(double)>& g) {
    return [y, g](double x) { return std::exp(cplx{0.0, -y * x}) * g(x); };
  };
  const auto norm_sq = [&](const std::function<cplx(double)>& g) {
    const sf::Integrand h = [&](double x) { return cplx{std::norm(g(x)), 0.0}; };
    return sf::integrate_finite(h, -12.0, 12.0, spec).value.real();
  };
  const double base = norm_sq(f);
  CHECK(base == doctest::Approx(1.25 * std::sqrt(pi / 2.0)).epsilon(1e-10));
  for (double r : {-0.6, 0.4}) {
    for (double r2 : {-0.3, 0.8}) {
      const auto twice = act_a(r, act_a(r2, f));
      const auto once = act_a(r + r2, f);
      for (double x : {-1.3, 0.0, 0.7, 2.2}) CHECK(std::abs(twice(x) - once(x)) < 1e-14);
    }
    CHECK(std::abs(norm_sq(act_a(r, f)) - base) < 1e-8);
    // pi~(a_r) pi~(n_y) pi~(a_{-r}) = pi~(n_{e^r y}), matching the matrix identity.
    const double y = 0.9;
    const auto lhs = act_a(r, act_n(y, act_a(-r, f)));
    const auto rhs = act_n(std::exp(r) * y, f);
    for (double x : {-1.3, 0.5, 1.9}) CHECK(std::abs(lhs(x) - rhs(x)) < 1e-13);
  }
  for (double y : {-2.0, 0.5, 3.0}) CHECK(std::abs(norm_sq(act_n(y, f)) - base) < 1e-8);
}

TEST_CASE("phi_via_rho: identity and agreement with phi") {
  const QuadratureSpec spec = tight();
  const SpectralParameter s{0.3, 0.6};
  for (int n : {2, 3}) {
    const cplx v = phi_via_rho(n, s, LorentzMatrix::identity(n), spec);
    CHECK(std::abs(v - 1.0) < 1e-12);
  }
  const auto so2 = groups::lorentz_group(1);
  const cplx circle = phi_via_rho(2, s, make_a(1.2, 2), spec);
  CHECK(std::abs(circle - spherical::phi(so2, s, 1.2).value) < 1e-9);
  const auto so3 = groups::lorentz_group(2);
  for (double r : {0.4, 1.5}) {
    for (SpectralParameter s2 : {SpectralParameter{0.0, 1.1}, SpectralParameter{0.7, -0.4}}) {
      const cplx sphere = phi_via_rho(3, s2, make_a(r, 3), spec);
      CHECK(std::abs(sphere - spherical::phi(so3, s2, r).value) < 1e-9);
    }
  }
  // K-bi-invariance: k1 a_r k2 gives the same value.
  std::mt19937_64 rng(19);
  const LorentzMatrix g =
      make_k(random_rotation(3, rng)) * make_a(0.8, 3) * make_k(random_rotation(3, rng));
  CHECK(std::abs(phi_via_rho(3, s, g, spec) - spherical::phi(so3, s, 0.8).value) < 1e-8);
  CHECK_THROWS_AS(phi_via_rho(4, s, make_a(0.1, 4), spec), DomainError);
}

TEST_CASE("phi_via_rho on n_y matches phi_on_NA") {
  const QuadratureSpec spec = tight();
  for (SpectralParameter s : {SpectralParameter{0.2, 0.5}, SpectralParameter{0.0, 1.3}}) {
    for (double y : {0.5, 1.7}) {
      Vector yv(1);
      yv << y;
      const cplx via_rho = phi_via_rho(2, s, make_n(yv), spec);
      const cplx on_na = spherical::phi_on_NA(1, s, 0.0, {y});
      CHECK(std::abs(via_rho - on_na) < 1e-7);
    }
  }
  Vector yv(2);
  yv << 0.6, -0.8;
  const SpectralParameter s{0.4, 0.3};
  CHECK(std::abs(phi_via_rho(3, s, make_a(0.5, 3) * make_n(yv), spec) -
                 spherical::phi_on_NA(2, s, 0.5, {0.6, -0.8})) < 1e-7);
}

TEST_CASE("fhat_check: quadrature against the Bessel closed form") {
  const QuadratureSpec spec = tight();
  {
    const auto [direct, closed] = fhat_check(1, SpectralParameter{0.3, 0.7}, 1.0, spec);
    CHECK(std::abs(direct - closed) < 1e-6);
  }
  {
    const auto [direct, closed] = fhat_check(1, SpectralParameter{0.5, 0.0}, 2.0, spec);
    CHECK(std::abs(direct - closed) < 1e-9);
    // s = 1/2: c_1 sqrt(2) (y/2)^{1/2} K_{1/2}(y) = c_1 sqrt(pi/2) e^{-y} exactly.
    CHECK(std::abs(closed - std::sqrt(0.5) * std::exp(-2.0)) < 1e-14);
  }
  {
    const auto [direct, closed] = fhat_check(1, SpectralParameter{0.8, -1.2}, 10.0, spec);
    CHECK(std::abs(direct - closed) < 1e-9);
    CHECK(std::abs(closed) < std::exp(-10.0) * 10.0);
  }
  CHECK_THROWS_AS(fhat_check(2, SpectralParameter{0.3, 0.0}, 1.0, spec), DomainError);
  CHECK_THROWS_AS(fhat_check(1, SpectralParameter{0.0, 1.0}, 1.0, spec), DomainError);
}

TEST_CASE("coefficient pairing equals phi_on_NA (m = 1)") {
  const QuadratureSpec spec = tight();
  for (SpectralParameter s : {SpectralParameter{0.25, 0.5}, SpectralParameter{-0.1, 1.0},
                              SpectralParameter{0.0, 0.0}}) {
    for (double r : {-0.5, 0.0, 1.0}) {
      for (double y : {0.0, 0.7, 2.5}) {
        const cplx pairing = coefficient_pairing(s, r, y, spec);
        const cplx expected = spherical::phi_on_NA(1, s, r, {y});
        CHECK(std::abs(pairing - expected) < 1e-5);
      }
    }
  }
  // y = 0 reduces to phi on A.
  const SpectralParameter s{0.2, 0.4};
  CHECK(std::abs(coefficient_pairing(s, 0.9, 0.0, spec) -
                 spherical::phi(groups::lorentz_group(1), s, 0.9).value) < 1e-5);
}
