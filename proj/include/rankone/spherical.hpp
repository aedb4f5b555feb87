#pragma once

// Spherical functions phi_s(a_r) on rank-one groups, the c-function, and the
// Bessel-kernel realization used for the completely bounded multiplier norm
// on SO0(1, m+1).

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "rankone/groups.hpp"
#include "rankone/quadrature.hpp"

namespace rankone::spherical {

using cplx = std::complex<double>;
using groups::RankOneGroup;
using groups::SpectralParameter;
using specfun::QuadratureSpec;

enum class Method {
  HypergeometricStable,  // cosh(r)^{s-m/2} F(.,.;.;tanh^2 r)
  HypergeometricDirect,  // F(m/4+s/2, m/4-s/2; (m+m0)/4; -sinh^2 r)
  IntegralQuadrature,    // theta-integral, SO0 only
  Asymptotic,            // c(s) e^{(s-m/2) r}
};

std::string to_string(Method method);

struct SphericalValue {
  cplx value;
  Method method = Method::HypergeometricStable;
};

struct CFunctionValue {
  cplx value;
};

/// Default quadrature settings for the integral-based evaluations here.
QuadratureSpec default_spec();

/// Radius beyond which phi hands off to the asymptotic form (Re s > 0).
double r_switch(SpectralParameter s);

/// phi_s(a_r). Uses phi_{-s} = phi_s and phi(a_{-r}) = phi(a_r) to reduce to
/// Re s >= 0, r >= 0, then the tanh^2 form (or the asymptotic form past
/// r_switch). Falls back to the -sinh^2 form if the series stalls.
SphericalValue phi(const RankOneGroup& group, SpectralParameter s, double r);

/// phi_s(a_r) forced through one method. IntegralQuadrature needs an SO0
/// group; Asymptotic needs Re s != 0.
cplx phi_with(const RankOneGroup& group, SpectralParameter s, double r,
              Method method, const QuadratureSpec& spec = default_spec());

/// Gamma((m+1)/2)/(sqrt(pi) Gamma(m/2)) int_0^pi sin^{m-1} / (cosh r + sinh r cos)^{s+m/2}.
/// Requires s in the closed strip |Re s| <= m/2.
cplx phi_lorentz_integral(int m, SpectralParameter s, double r,
                          const QuadratureSpec& spec = default_spec());

/// e^{-(m/2+s) r} F(m/2+s, m/2; m; 1 - e^{-2r}) for r >= 0.
cplx phi_lorentz_hyp2(int m, SpectralParameter s, double r);

/// Harish-Chandra c-function; Re s > 0.
CFunctionValue c_function(const RankOneGroup& group, SpectralParameter s);

/// c(s) e^{(s - m/2) r}; Re s > 0.
cplx phi_asymptotic(const RankOneGroup& group, SpectralParameter s, double r);

/// Completely bounded multiplier norm of phi_s on SO0(1, m+1). Exactly 1 at
/// s = +-m/2; NotAMultiplierError on the rest of the boundary and outside.
double cb_norm_lorentz(int m, SpectralParameter s);

/// Radial profile of the L^2(R^m) vector f~_s at |x| = x_norm.
cplx f_tilde(int m, SpectralParameter s, double x_norm);

/// ||f~_s||_2^2 in closed form (interior s only).
double f_tilde_norm_sq(int m, SpectralParameter s);

/// ||f~_s||_2^2 by radial quadrature of K_s K_{conj s}.
double f_tilde_norm_sq_quadrature(int m, SpectralParameter s,
                                  const QuadratureSpec& spec = default_spec());

/// ||h_s||_1 with h_s = f~_s conj(f~_{-conj s}), by radial quadrature.
double h_s_l1_norm(int m, SpectralParameter s,
                   const QuadratureSpec& spec = default_spec());

/// phi_s(a_r n_y) = <pi~(a_r n_y) f~_s, f~_{-conj s}> by quadrature, m in {1,2,3}.
cplx phi_on_NA(int m, SpectralParameter s, double r, const std::vector<double>& y,
               const QuadratureSpec& spec = default_spec());

/// (1/n) int_n^{2n} e^{i r x0} phi(r) dr.
cplx cesaro_extract(const std::function<cplx(double)>& phi_samples, double x0,
                    int n);

}  // namespace rankone::spherical
