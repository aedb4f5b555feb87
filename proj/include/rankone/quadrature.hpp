#pragma once

#include <complex>
#include <functional>
#include <limits>

namespace rankone::specfun {

using cplx = std::complex<double>;

/// Integrand type used throughout: real abscissa, complex value.
using Integrand = std::function<cplx(double)>;

/// Tolerances and limits shared by every numerical integral.
struct QuadratureSpec {
  double relative_tolerance = 1e-8;
  double absolute_tolerance = 1e-14;
  int max_panels = 20000;
  /// Extra nats of safety added when truncating semi-infinite domains.
  double truncation_margin = 5.0;

  /// Throws DomainError when a field violates its invariant.
  void validate() const;

  /// Copy with both tolerances replaced.
  QuadratureSpec with_tolerance(double rel, double abs) const {
    QuadratureSpec out = *this;
    out.relative_tolerance = rel;
    out.absolute_tolerance = abs;
    return out;
  }
};

struct QuadratureResult {
  cplx value;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Exponential envelope |f(x)| <= C exp(-rate * |x - anchor|) used to
/// truncate a semi-infinite domain.
struct DecayEnvelope {
  double rate = 1.0;
};

/// Interval of integration. `upper` may be +infinity and `lower` may be
/// -infinity, in which case `decay` must describe the tail on that side.
struct Interval {
  double lower = 0.0;
  double upper = 1.0;
  DecayEnvelope decay{};

  static Interval finite(double a, double b) { return {a, b, {}}; }
  static Interval to_infinity(double a, double rate) {
    return {a, std::numeric_limits<double>::infinity(), {rate}};
  }
  static Interval from_minus_infinity(double b, double rate) {
    return {-std::numeric_limits<double>::infinity(), b, {rate}};
  }
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [a, b].
/// Throws ConvergenceError (best estimate attached) when the requested
/// tolerance is not met within spec.max_panels subdivisions. Stops early,
/// reporting the achieved error, once the estimate is dominated by the
/// rounding floor 50 eps int|f|.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec);

/// Integrates over a finite or half-infinite interval. Semi-infinite ends
/// are swept outward in panels of width ~1/rate until the envelope tail
/// |f(end)|/rate drops below the tolerance.
QuadratureResult integrate(const Integrand& f, const Interval& domain,
                           const QuadratureSpec& spec);

/// Sum of adaptive integrals over consecutive panels [p_i, p_{i+1}];
/// used for oscillatory integrands where the caller knows the period.
QuadratureResult integrate_panels(const Integrand& f, double a, double b,
                                  double panel_width,
                                  const QuadratureSpec& spec);

/// Composite trapezoid on one period of a smooth periodic function with
/// node doubling until successive estimates agree to tolerance.
cplx integrate_periodic(const Integrand& f, double period,
                        const QuadratureSpec& spec, int min_nodes = 16);

}  // namespace rankone::specfun
