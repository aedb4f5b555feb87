#pragma once

// Matrices of SO0(1,n) acting on the light cone and on S^m (m = n-1), the
// representations rho_s realized on L^2(S^m), and their transport to
// L^2(R^m) by stereographic projection.

#include <complex>
#include <functional>
#include <utility>

#include <Eigen/Dense>

#include "rankone/groups.hpp"
#include "rankone/quadrature.hpp"

namespace rankone::lorentz {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using groups::SpectralParameter;
using specfun::QuadratureSpec;

/// Tolerance for g^T J g = J and det g = 1.
inline constexpr double kInvariantTolerance = 1e-10;

/// diag(-1, 1, ..., 1) of size n+1.
Matrix minkowski_form(int n);

/// Element of SO0(1,n), stored as its (n+1)x(n+1) matrix. Construction
/// checks g^T J g = J, det g = 1 and g00 >= 1 (InvariantError otherwise).
class LorentzMatrix {
 public:
  explicit LorentzMatrix(Matrix entries);

  static LorentzMatrix identity(int n);

  const Matrix& entries() const { return g_; }
  int n() const { return static_cast<int>(g_.rows()) - 1; }
  double operator()(int i, int j) const { return g_(i, j); }

  LorentzMatrix operator*(const LorentzMatrix& other) const;

 private:
  Matrix g_;
};

/// Throws InvariantError when `g` is not in SO0(1,n).
void check_invariants(const Matrix& g);

/// a_r = exp(rH): the boost in the (0,1) plane.
LorentzMatrix make_a(double r, int n);

/// n_x for x in R^{n-1}.
LorentzMatrix make_n(const Vector& x);

/// 1 x k for k in SO(n).
LorentzMatrix make_k(const Matrix& rotation);

/// g^{-1} = J g^T J.
LorentzMatrix lorentz_inverse(const LorentzMatrix& g);

/// Unit vector in R^{m+1} = R^n.
class SpherePoint {
 public:
  explicit SpherePoint(Vector zeta);
  const Vector& zeta() const { return zeta_; }
  int dim() const { return static_cast<int>(zeta_.size()); }

 private:
  Vector zeta_;
};

/// North pole (1, 0, ..., 0) of S^{n-1}.
SpherePoint zeta0(int n);

/// g zeta on the sphere, induced by the action on rays of the light cone.
SpherePoint act_on_sphere(const LorentzMatrix& g, const SpherePoint& zeta);

/// r(g zeta) = ln(g00 + sum_q g0q zeta_q).
double cocycle_r(const LorentzMatrix& g, const SpherePoint& zeta);

/// Projection of zeta != zeta0 from zeta0 onto R^m.
Vector stereographic(const SpherePoint& zeta);

/// Inverse of `stereographic`.
SpherePoint inverse_stereographic(const Vector& x);

/// <rho_s(g) 1, 1> on L^2(S^m) with the normalized measure, n in {2, 3}.
/// For n = 2 a trapezoid rule on the circle; for n = 3 adaptive in the polar
/// angle with a trapezoid rule in the azimuth.
cplx phi_via_rho(int n, SpectralParameter s, const LorentzMatrix& g,
                 const QuadratureSpec& spec);

/// Integral of a function over S^{n-1} against the normalized measure
/// (n in {2, 3}), by the same rules as phi_via_rho.
cplx sphere_average(int n, const std::function<cplx(const Vector&)>& h,
                    const QuadratureSpec& spec);

/// For m = 1 and Re s > 0: the Fourier transform of
/// c_1 (x^2 + 1)^{-s-1/2} at y by quadrature, and its Bessel closed form
/// c_1 sqrt(2) (y/2)^s K_s(y) / Gamma(1/2 + s), with c_1 = pi^{-1/2}.
std::pair<cplx, cplx> fhat_check(int m, SpectralParameter s, double y_norm,
                                 const QuadratureSpec& spec);

/// <pi~(a_r n_y) f~_s, f~_{-conj s}> on L^2(R) (m = 1) by quadrature over
/// the line, where (pi~(a_r n_y) f)(x) = e^{r/2} e^{-i y e^r x} f(e^r x).
cplx coefficient_pairing(SpectralParameter s, double r, double y,
                         const QuadratureSpec& spec);

}  // namespace rankone::lorentz
