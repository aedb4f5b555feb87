#include "rankone/lorentz_geom.hpp"

#include <cmath>
#include <string>

#include "rankone/errors.hpp"
#include "rankone/specfun.hpp"
#include "rankone/spherical.hpp"

namespace rankone::lorentz {

namespace sf = rankone::specfun;
using specfun::Integrand;
using specfun::Interval;

namespace {

constexpr double pi = 3.14159265358979323846;

void require_n(int n, const char* who) {
  if (n < 2) throw DomainError(std::string(who) + ": n must be at least 2");
}

double cocycle_denominator(const Matrix& g, const Vector& zeta) {
  return g(0, 0) + g.row(0).tail(zeta.size()).dot(zeta);
}

}  // namespace

Matrix minkowski_form(int n) {
  Matrix j = Matrix::Identity(n + 1, n + 1);
  j(0, 0) = -1.0;
  return j;
}

void check_invariants(const Matrix& g) {
  if (g.rows() != g.cols() || g.rows() < 3) {
    throw InvariantError("Lorentz matrix must be square of size n+1 >= 3");
  }
  if (!g.allFinite()) throw InvariantError("Lorentz matrix has non-finite entries");
  const int n = static_cast<int>(g.rows()) - 1;
  const Matrix j = minkowski_form(n);
  // Relative to the entry scale so that large boosts are not rejected by drift.
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  const double defect = (g.transpose() * j * g - j).cwiseAbs().maxCoeff();
  if (defect > kInvariantTolerance * scale * scale) {
    throw InvariantError("g^T J g != J (defect " + std::to_string(defect) + ")");
  }
  const double det = g.determinant();
  if (std::abs(det - 1.0) > kInvariantTolerance * std::pow(scale, 2)) {
    throw InvariantError("det g != 1 (det " + std::to_string(det) + ")");
  }
  if (g(0, 0) < 1.0 - 1e-12) throw InvariantError("g00 < 1");
}

LorentzMatrix::LorentzMatrix(Matrix entries) : g_(std::move(entries)) {
  check_invariants(g_);
}

LorentzMatrix LorentzMatrix::identity(int n) {
  require_n(n, "LorentzMatrix::identity");
  return LorentzMatrix(Matrix::Identity(n + 1, n + 1));
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& other) const {
  if (other.n() != n()) throw DomainError("Lorentz product: size mismatch");
  return LorentzMatrix(g_ * other.g_);
}

LorentzMatrix make_a(double r, int n) {
  require_n(n, "make_a");
  Matrix g = Matrix::Identity(n + 1, n + 1);
  g(0, 0) = g(1, 1) = std::cosh(r);
  g(0, 1) = g(1, 0) = std::sinh(r);
  return LorentzMatrix(std::move(g));
}

LorentzMatrix make_n(const Vector& x) {
  const int m = static_cast<int>(x.size());
  if (m < 1) throw DomainError("make_n: x must be nonempty");
  const int n = m + 1;
  const double half = 0.5 * x.squaredNorm();
  Matrix g = Matrix::Identity(n + 1, n + 1);
  g(0, 0) = 1.0 + half;
  g(0, 1) = -half;
  g(1, 0) = half;
  g(1, 1) = 1.0 - half;
  for (int i = 0; i < m; ++i) {
    g(0, 2 + i) = x(i);
    g(1, 2 + i) = x(i);
    g(2 + i, 0) = x(i);
    g(2 + i, 1) = -x(i);
  }
  return LorentzMatrix(std::move(g));
}

LorentzMatrix make_k(const Matrix& rotation) {
  const int n = static_cast<int>(rotation.rows());
  if (rotation.cols() != n) throw DomainError("make_k: rotation must be square");
  require_n(n, "make_k");
  Matrix g = Matrix::Identity(n + 1, n + 1);
  g.bottomRightCorner(n, n) = rotation;
  return LorentzMatrix(std::move(g));
}

LorentzMatrix lorentz_inverse(const LorentzMatrix& g) {
  const Matrix j = minkowski_form(g.n());
  return LorentzMatrix(j * g.entries().transpose() * j);
}

SpherePoint::SpherePoint(Vector zeta) : zeta_(std::move(zeta)) {
  if (zeta_.size() < 2) throw DomainError("SpherePoint: dimension must be at least 2");
  if (std::abs(zeta_.norm() - 1.0) > 1e-12) {
    throw InvariantError("SpherePoint: not a unit vector");
  }
}

SpherePoint zeta0(int n) {
  Vector z = Vector::Zero(n);
  z(0) = 1.0;
  return SpherePoint(std::move(z));
}

SpherePoint act_on_sphere(const LorentzMatrix& g, const SpherePoint& zeta) {
  const Matrix& e = g.entries();
  const int n = g.n();
  if (zeta.dim() != n) throw DomainError("act_on_sphere: dimension mismatch");
  const Vector& z = zeta.zeta();
  const double den = cocycle_denominator(e, z);
  Vector out = (e.block(1, 0, n, 1) + e.block(1, 1, n, n) * z) / den;
  // Remove rounding drift off the sphere.
  out /= out.norm();
  return SpherePoint(std::move(out));
}

double cocycle_r(const LorentzMatrix& g, const SpherePoint& zeta) {
  if (zeta.dim() != g.n()) throw DomainError("cocycle_r: dimension mismatch");
  return std::log(cocycle_denominator(g.entries(), zeta.zeta()));
}

Vector stereographic(const SpherePoint& zeta) {
  const Vector& z = zeta.zeta();
  const double den = 1.0 - z(0);
  if (den <= 1e-14) throw DomainError("stereographic: undefined at zeta0");
  return z.tail(z.size() - 1) / den;
}

SpherePoint inverse_stereographic(const Vector& x) {
  if (x.size() < 1) throw DomainError("inverse_stereographic: x must be nonempty");
  const double q = x.squaredNorm();
  Vector z(x.size() + 1);
  z(0) = (q - 1.0) / (q + 1.0);
  z.tail(x.size()) = 2.0 * x / (q + 1.0);
  return SpherePoint(z / z.norm());
}

cplx sphere_average(int n, const std::function<cplx(const Vector&)>& h,
                    const QuadratureSpec& spec) {
  if (n == 2) {
    const Integrand f = [&](double theta) {
      Vector z(2);
      z << std::cos(theta), std::sin(theta);
      return h(z);
    };
    return sf::integrate_periodic(f, 2.0 * pi, spec) / (2.0 * pi);
  }
  if (n == 3) {
    const Integrand outer = [&](double theta) {
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Integrand inner = [&](double az) {
        Vector z(3);
        z << c, s * std::cos(az), s * std::sin(az);
        return h(z);
      };
      return sf::integrate_periodic(inner, 2.0 * pi, spec) * s;
    };
    return sf::integrate_finite(outer, 0.0, pi, spec).value / (4.0 * pi);
  }
  throw DomainError("sphere_average: n must be 2 or 3");
}

cplx phi_via_rho(int n, SpectralParameter s, const LorentzMatrix& g,
                 const QuadratureSpec& spec) {
  if (n != 2 && n != 3) throw DomainError("phi_via_rho: n must be 2 or 3");
  if (g.n() != n) throw DomainError("phi_via_rho: matrix size does not match n");
  const int m = n - 1;
  if (std::abs(s.sigma) > 0.5 * m + 1e-12) {
    throw DomainError("phi_via_rho: s outside the closed strip");
  }
  const Matrix inv = lorentz_inverse(g).entries();
  const cplx exponent = -(0.5 * m + s.value());
  return sphere_average(
      n,
      [&](const Vector& z) {
        return std::exp(exponent * std::log(cocycle_denominator(inv, z)));
      },
      spec);
}

std::pair<cplx, cplx> fhat_check(int m, SpectralParameter s, double y_norm,
                                 const QuadratureSpec& spec) {
  if (m != 1) throw DomainError("fhat_check: only m = 1 is supported");
  if (!(s.sigma > 0.0)) throw DomainError("fhat_check: requires Re s > 0");
  if (!(y_norm > 0.0)) throw DomainError("fhat_check: y must be positive");
  const cplx sv = s.value();
  const double c1 = 1.0 / std::sqrt(pi);
  const cplx power = -(sv + 0.5);
  // Both half-lines rotated into the lower half-plane by pi/4, where
  // e^{-ixy} decays like e^{-y rho / sqrt 2}.
  const cplx w = std::polar(1.0, pi / 4.0);
  const auto f = [&](cplx x) {
    return std::exp(power * std::log(1.0 + x * x)) *
           std::exp(cplx{0.0, -1.0} * x * y_norm);
  };
  const Integrand rotated = [&](double rho) {
    return f(rho * std::conj(w)) * std::conj(w) + f(-rho * w) * w;
  };
  const auto integral = sf::integrate(
      rotated, Interval::to_infinity(0.0, y_norm / std::sqrt(2.0)), spec);
  const cplx direct = c1 / std::sqrt(2.0 * pi) * integral.value;
  const cplx closed = c1 * std::sqrt(2.0) * std::pow(0.5 * y_norm, sv) *
                      sf::bessel_k(sv, y_norm) * sf::rgamma(0.5 + sv);
  return {direct, closed};
}

cplx coefficient_pairing(SpectralParameter s, double r, double y,
                         const QuadratureSpec& spec) {
  const int m = 1;
  const SpectralParameter dual{-s.sigma, s.t};  // -conj(s)
  const double er = std::exp(r);
  const auto term = [&](double x) {
    const double ax = std::abs(x);
    return std::exp(0.5 * r) * std::exp(cplx{0.0, -y * er * x}) *
           spherical::f_tilde(m, s, er * ax) *
           std::conj(spherical::f_tilde(m, dual, ax));
  };
  // Near 0 the product behaves like |x|^{-2|sigma|}.
  const double near_rate = 1.0 - 2.0 * std::abs(s.sigma);
  const Integrand near = [&](double u) {
    const double x = std::exp(u);
    return (term(x) + term(-x)) * x;
  };
  const Integrand far = [&](double x) { return term(x) + term(-x); };
  const double width = y != 0.0 ? std::min(1.0, pi / (std::abs(y) * er)) : 1.0;
  const auto a = sf::integrate(near, Interval::from_minus_infinity(0.0, near_rate), spec);
  // Oscillatory tail: panels of half a period out to where e^{-(1+e^r)x} is negligible.
  const double cutoff =
      1.0 + (-std::log(spec.relative_tolerance * 1e-3) + spec.truncation_margin) /
                (1.0 + er);
  const auto b = sf::integrate_panels(far, 1.0, cutoff, width, spec);
  return a.value + b.value;
}

}  // namespace rankone::lorentz
