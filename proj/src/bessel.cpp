#include <cmath>
#include <limits>

#include "rankone/errors.hpp"
#include "rankone/specfun.hpp"

namespace rankone::specfun {

namespace {

// Truncation point T > t_peak where x(cosh T - 1) - sigma T first exceeds
// `level` (everything measured after factoring out e^{-x}).
double truncation_point(double sigma, double x, double level) {
  const double t_peak = std::asinh(sigma / x);
  auto excess = [&](double t) {
    return x * (std::cosh(t) - 1.0) - sigma * t - level;
  };
  double lo = t_peak;
  double hi = t_peak + 1.0;
  while (excess(hi) < 0.0) {
    lo = hi;
    hi = t_peak + 2.0 * (hi - t_peak);
    if (hi > 1e4) {
      throw ConvergenceError("bessel_k: no truncation point found", 0.0, 0.0,
                             std::numeric_limits<double>::infinity());
    }
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

QuadratureSpec bessel_default_spec() {
  QuadratureSpec spec;
  spec.relative_tolerance = 1e-12;
  spec.absolute_tolerance = 1e-300;
  return spec;
}

cplx bessel_k(cplx nu, double x, const QuadratureSpec& spec) {
  spec.validate();
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_k: argument must be positive");
  }
  // K_{-nu} = K_nu: fold onto Re nu >= 0 so both orders share one integral.
  if (nu.real() < 0.0 || (nu.real() == 0.0 && nu.imag() < 0.0)) nu = -nu;
  const double sigma = nu.real();

  const double t_peak = std::asinh(sigma / x);
  const double log_peak = sigma * t_peak - x * (std::cosh(t_peak) - 1.0);
  const double eps = spec.relative_tolerance * 1e-4;
  const double level = -log_peak - std::log(eps) + spec.truncation_margin;
  const double t_max = truncation_point(sigma, x, level);

  const Integrand f = [nu, x](double t) {
    const double base = -x * (std::cosh(t) - 1.0);
    return 0.5 * (std::exp(nu * t + base) + std::exp(-nu * t + base));
  };
  QuadratureResult r = integrate_finite(f, 0.0, t_max, spec);

  // Tail bound past T relative to the value found.
  const double slope = x * std::sinh(t_max) - sigma;
  const double tail =
      std::exp(sigma * t_max - x * (std::cosh(t_max) - 1.0)) / std::max(slope, 1e-300);
  const double goal = std::max(spec.absolute_tolerance,
                               spec.relative_tolerance * std::abs(r.value));
  if (tail > goal && tail > std::exp(log_peak) * eps) {
    throw ConvergenceError("bessel_k: truncated tail exceeds tolerance",
                           r.value.real(), r.value.imag(), tail);
  }
  return r.value * std::exp(-x);
}

cplx weber_schafheitlin_rhs(cplx nu, cplx mu, cplx rho) {
  cplx product = 1.0;
  for (double sn : {1.0, -1.0}) {
    for (double sm : {1.0, -1.0}) {
      const cplx arg = 1.0 + sn * nu + sm * mu - rho;
      if (!(arg.real() > 0.0)) {
        throw DomainError(
            "weber_schafheitlin_rhs: need Re(1 +- nu +- mu - rho) > 0");
      }
      product *= gamma(0.5 * arg);
    }
  }
  return product * rgamma(1.0 - rho) / std::pow(cplx{2.0, 0.0}, rho + 2.0);
}

QuadratureResult weber_schafheitlin_quadrature(cplx nu, cplx mu, cplx rho,
                                               const QuadratureSpec& spec) {
  double rate = std::numeric_limits<double>::infinity();
  for (double sn : {1.0, -1.0}) {
    for (double sm : {1.0, -1.0}) {
      rate = std::min(rate, (1.0 + sn * nu + sm * mu - rho).real());
    }
  }
  if (!(rate > 0.0)) {
    throw DomainError("weber_schafheitlin_quadrature: integral diverges at 0");
  }
  const QuadratureSpec inner = bessel_default_spec();
  // (0, 1] in the logarithmic variable r = e^u.
  const Integrand near = [&](double u) {
    const double r = std::exp(u);
    return bessel_k(nu, r, inner) * bessel_k(mu, r, inner) *
           std::exp((1.0 - rho) * u);
  };
  // [1, inf) directly; K_nu K_mu ~ e^{-2r}.
  const Integrand far = [&](double r) {
    return bessel_k(nu, r, inner) * bessel_k(mu, r, inner) *
           std::pow(cplx{r, 0.0}, -rho);
  };
  QuadratureResult a = integrate(near, Interval::from_minus_infinity(0.0, rate), spec);
  QuadratureResult b = integrate(far, Interval::to_infinity(1.0, 2.0), spec);
  return {a.value + b.value, a.error_estimate + b.error_estimate,
          a.panels + b.panels};
}

}  // namespace rankone::specfun
