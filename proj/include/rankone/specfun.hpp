#pragma once

// Complex-parameter special functions: Gamma and friends, the Gauss
// hypergeometric function on the real segments the spherical-function
// formulas need, and modified Bessel functions of the second kind with
// complex order.

#include <complex>

#include "rankone/quadrature.hpp"

namespace rankone::specfun {

using cplx = std::complex<double>;

/// Distance from a non-positive integer below which Gamma reports a pole.
inline constexpr double kPoleTolerance = 1e-12;

/// Gamma function (Lanczos, g = 7, with reflection for Re z < 1/2).
/// Throws PoleError within kPoleTolerance of {0, -1, -2, ...}.
cplx gamma(cplx z);

/// 1/Gamma(z); entire, so poles of Gamma map to exact zeros.
cplx rgamma(cplx z);

/// Digamma psi(z) = Gamma'(z)/Gamma(z).
cplx digamma(cplx z);

/// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b); requires Re a, Re b > 0.
cplx beta(cplx a, cplx b);

/// Pochhammer-series controls for hyp2f1.
struct SeriesControl {
  /// A term counts as negligible once |term| <= this * |partial sum|.
  double relative_tolerance = 1e-16;
  /// Consecutive negligible terms required before stopping.
  int quiet_terms = 3;
  int max_terms = 100000;
};

/// Gauss hypergeometric F(a, b; c; z).
///
/// Supported region: |z| <= 0.9 (direct power series, any complex z),
/// real z in (0.9, 1) (connection formula around z = 1, including the
/// logarithmic cases c - a - b in Z), and real z < 0 of any size (Pfaff
/// transformation onto (0, 1)). Terminating series (a or b a non-positive
/// integer) are summed directly for any z. Anything else is a DomainError.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl = {});

/// F(a, b; c; 1 - w) for 0 < w <= 1, taking the complement w directly so
/// that arguments extremely close to 1 keep full relative precision.
cplx hyp2f1_complement(cplx a, cplx b, cplx c, double w,
                       const SeriesControl& ctl = {});

/// F(a, b; c; 1 - w) given log(w) <= 0; w itself may underflow.
cplx hyp2f1_complement_log(cplx a, cplx b, cplx c, double log_w,
                           const SeriesControl& ctl = {});

/// Default quadrature settings for bessel_k.
QuadratureSpec bessel_default_spec();

/// Modified Bessel function of the second kind, complex order, positive
/// real argument, from K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
/// The integral is truncated at T with
///   x cosh T - |Re nu| T >= -ln(eps) + truncation_margin
/// measured from the integrand's peak, eps = relative_tolerance * 1e-4.
cplx bessel_k(cplx nu, double x, const QuadratureSpec& spec = bessel_default_spec());

/// Closed form of int_0^inf K_nu(r) K_mu(r) r^{-rho} dr, i.e.
///   prod_{+-,+-} Gamma((1 +- nu +- mu - rho)/2) / (2^{rho+2} Gamma(1-rho)).
/// DomainError unless Re(1 +- nu +- mu - rho) > 0 for all four signs.
cplx weber_schafheitlin_rhs(cplx nu, cplx mu, cplx rho);

/// The same integral evaluated by quadrature of the Bessel product.
QuadratureResult weber_schafheitlin_quadrature(cplx nu, cplx mu, cplx rho,
                                               const QuadratureSpec& spec);

}  // namespace rankone::specfun
