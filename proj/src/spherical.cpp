#include "rankone/spherical.hpp"

#include <cmath>
#include <numbers>

#include "rankone/errors.hpp"
#include "rankone/specfun.hpp"

namespace rankone::spherical {

namespace sf = rankone::specfun;
using groups::StripPosition;
using groups::classify;
using sf::Integrand;
using sf::Interval;
using std::numbers::pi;

namespace {

constexpr double kLn2 = std::numbers::ln2;

double log_cosh(double r) {
  r = std::abs(r);
  if (r < 1.0) return std::log(std::cosh(r));
  return r + std::log1p(std::exp(-2.0 * r)) - kLn2;
}

cplx folded(SpectralParameter s) {
  const cplx v = s.value();
  return v.real() < 0.0 ? -v : v;
}

void require_interior(int m, SpectralParameter s, const char* who) {
  if (classify(s, m) != StripPosition::Interior) {
    throw DomainError(std::string(who) + ": s must lie in the open strip |Re s| < m/2");
  }
}

void require_m(int m, const char* who) {
  if (m < 1) throw DomainError(std::string(who) + ": m must be at least 1");
}

cplx stable_form(const RankOneGroup& g, cplx s, double r) {
  const double m = g.m;
  const double m0 = g.m0;
  const double lc = log_cosh(r);
  const cplx f = sf::hyp2f1_complement_log(m / 4.0 - s / 2.0, m0 / 4.0 - s / 2.0,
                                           (m + m0) / 4.0, -2.0 * lc);
  return std::exp((s - m / 2.0) * lc) * f;
}

cplx direct_form(const RankOneGroup& g, cplx s, double r) {
  const double m = g.m;
  const double m0 = g.m0;
  const double sh = std::sinh(r);
  return sf::hyp2f1(m / 4.0 + s / 2.0, m / 4.0 - s / 2.0, (m + m0) / 4.0,
                    -sh * sh);
}

cplx c_value(const RankOneGroup& g, cplx s) {
  const double m = g.m;
  const double m0 = g.m0;
  return std::pow(cplx{2.0, 0.0}, m / 2.0 - s) * sf::gamma((m + m0) / 4.0) *
         sf::gamma(s) * sf::rgamma(m / 4.0 + s / 2.0) *
         sf::rgamma(m0 / 4.0 + s / 2.0);
}

// Gamma(m/2 + sigma) Gamma(m/2 - sigma) |Gamma(m/2 + i t)|^2 / Gamma(m/2)^2,
// the common numerator of the norm formulas.
double norm_numerator(int m, SpectralParameter s) {
  const double h = 0.5 * m;
  const double g_plus = sf::gamma(h + s.sigma).real();
  const double g_minus = sf::gamma(h - s.sigma).real();
  const double g_t = std::abs(sf::gamma(cplx{h, s.t}));
  const double g_h = sf::gamma(h).real();
  return (g_plus / g_h) * (g_minus / g_h) * g_t * g_t;
}

// int_0^inf kernel(rho) rho^{m-1} d rho where kernel ~ rho^{-2|sigma|} at 0
// and decays like e^{-far_rate rho}: log variable on (0, 1], direct beyond.
cplx radial_integral(const std::function<cplx(double)>& kernel, int m,
                     double near_rate, double far_rate,
                     const QuadratureSpec& spec) {
  const Integrand near = [&](double u) {
    const double rho = std::exp(u);
    return kernel(rho) * std::exp(m * u);
  };
  const Integrand far = [&](double rho) {
    return kernel(rho) * std::pow(rho, m - 1);
  };
  const auto a = sf::integrate(near, Interval::from_minus_infinity(0.0, near_rate), spec);
  const auto b = sf::integrate(far, Interval::to_infinity(1.0, far_rate), spec);
  return a.value + b.value;
}

double sphere_area(int m) {
  // |S^{m-1}| = 2 pi^{m/2} / Gamma(m/2); |S^0| = 2.
  return 2.0 * std::pow(pi, 0.5 * m) / sf::gamma(0.5 * m).real();
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::HypergeometricStable: return "hypergeometric_stable";
    case Method::HypergeometricDirect: return "hypergeometric_direct";
    case Method::IntegralQuadrature: return "integral_quadrature";
    case Method::Asymptotic: return "asymptotic";
  }
  return "?";
}

QuadratureSpec default_spec() {
  QuadratureSpec spec;
  spec.relative_tolerance = 1e-10;
  spec.absolute_tolerance = 1e-16;
  return spec;
}

double r_switch(SpectralParameter s) {
  const double sigma = std::abs(s.sigma);
  if (sigma == 0.0) return std::numeric_limits<double>::infinity();
  return std::max(18.0, 20.0 / sigma);
}

SphericalValue phi(const RankOneGroup& group, SpectralParameter s, double r) {
  r = std::abs(r);
  if (r == 0.0) return {1.0, Method::HypergeometricStable};
  const cplx sv = folded(s);
  if (sv.real() > 0.0 && r > r_switch(s)) {
    return {c_value(group, sv) * std::exp((sv - 0.5 * group.m) * r),
            Method::Asymptotic};
  }
  try {
    return {stable_form(group, sv, r), Method::HypergeometricStable};
  } catch (const ConvergenceError&) {
    return {direct_form(group, s.value(), r), Method::HypergeometricDirect};
  }
}

cplx phi_with(const RankOneGroup& group, SpectralParameter s, double r,
              Method method, const QuadratureSpec& spec) {
  r = std::abs(r);
  switch (method) {
    case Method::HypergeometricStable:
      return r == 0.0 ? cplx{1.0, 0.0} : stable_form(group, folded(s), r);
    case Method::HypergeometricDirect:
      return direct_form(group, s.value(), r);
    case Method::IntegralQuadrature:
      if (group.m0 != group.m + 2) {
        throw DomainError("phi_with: the integral form is only available for SO0");
      }
      return phi_lorentz_integral(group.m, s, r, spec);
    case Method::Asymptotic: {
      const cplx sv = folded(s);
      if (!(sv.real() > 0.0)) {
        throw DomainError("phi_with: asymptotic form needs Re s != 0");
      }
      return c_value(group, sv) * std::exp((sv - 0.5 * group.m) * r);
    }
  }
  throw DomainError("phi_with: unknown method");
}

cplx phi_lorentz_integral(int m, SpectralParameter s, double r,
                          const QuadratureSpec& spec) {
  require_m(m, "phi_lorentz_integral");
  if (classify(s, m) == StripPosition::Exterior) {
    throw DomainError("phi_lorentz_integral: s must lie in the closed strip");
  }
  r = std::abs(r);
  const cplx power = -(s.value() + 0.5 * m);
  const double er = std::exp(r);
  const double emr = std::exp(-r);
  const Integrand f = [&](double theta) {
    const double c = std::cos(0.5 * theta);
    const double sn = std::sin(0.5 * theta);
    // cosh r + sinh r cos(theta), without cancellation near theta = pi.
    const double base = er * c * c + emr * sn * sn;
    const double weight = (m == 1) ? 1.0 : std::pow(std::sin(theta), m - 1);
    return weight * std::exp(power * std::log(base));
  };
  const double constant = std::exp(std::lgamma(0.5 * (m + 1)) - std::lgamma(0.5 * m)) /
                          std::sqrt(pi);
  return constant * sf::integrate_finite(f, 0.0, pi, spec).value;
}

cplx phi_lorentz_hyp2(int m, SpectralParameter s, double r) {
  require_m(m, "phi_lorentz_hyp2");
  if (r < 0.0) throw DomainError("phi_lorentz_hyp2: r must be non-negative");
  // phi_{-s} = phi_s; taking Re s <= 0 keeps e^{-(m/2+s) r} bounded.
  cplx sv = s.value();
  if (sv.real() > 0.0) sv = -sv;
  const double h = 0.5 * m;
  const cplx f = sf::hyp2f1_complement_log(h + sv, h, static_cast<double>(m), -2.0 * r);
  return std::exp(-(h + sv) * r) * f;
}

CFunctionValue c_function(const RankOneGroup& group, SpectralParameter s) {
  if (!(s.sigma > 0.0)) throw DomainError("c_function: need Re s > 0");
  return {c_value(group, s.value())};
}

cplx phi_asymptotic(const RankOneGroup& group, SpectralParameter s, double r) {
  const cplx c = c_function(group, s).value;
  return c * std::exp((s.value() - 0.5 * group.m) * r);
}

double cb_norm_lorentz(int m, SpectralParameter s) {
  require_m(m, "cb_norm_lorentz");
  switch (classify(s, m)) {
    case StripPosition::BoundaryConstant:
      return 1.0;
    case StripPosition::BoundaryNontrivial:
    case StripPosition::Exterior:
      throw NotAMultiplierError("phi_s is not a completely bounded multiplier for this s");
    case StripPosition::Interior:
      break;
  }
  const double h = 0.5 * m;
  const cplx sv = s.value();
  // |Gamma(m/2 - s)| = |Gamma(conj(m/2 - s))|.
  const double denom = std::abs(sf::gamma(h + sv)) * std::abs(sf::gamma(h - sv));
  return norm_numerator(m, s) / denom;
}

cplx f_tilde(int m, SpectralParameter s, double x_norm) {
  require_m(m, "f_tilde");
  require_interior(m, s, "f_tilde");
  if (!(x_norm > 0.0)) throw DomainError("f_tilde: |x| must be positive");
  const double h = 0.5 * m;
  const double c2 = sf::gamma(static_cast<double>(m)).real() /
                    (std::pow(pi, h) * sf::gamma(h).real());
  return std::sqrt(c2) * std::pow(2.0, 1.0 - h) * sf::rgamma(h + s.value()) *
         sf::bessel_k(s.value(), x_norm);
}

double f_tilde_norm_sq(int m, SpectralParameter s) {
  require_m(m, "f_tilde_norm_sq");
  require_interior(m, s, "f_tilde_norm_sq");
  const double g = std::abs(sf::gamma(cplx{0.5 * m + s.sigma, s.t}));
  return norm_numerator(m, s) / (g * g);
}

double f_tilde_norm_sq_quadrature(int m, SpectralParameter s,
                                  const QuadratureSpec& spec) {
  require_m(m, "f_tilde_norm_sq_quadrature");
  require_interior(m, s, "f_tilde_norm_sq_quadrature");
  const cplx sv = s.value();
  const auto kernel = [&](double rho) {
    return sf::bessel_k(sv, rho) * sf::bessel_k(std::conj(sv), rho);
  };
  const cplx integral =
      radial_integral(kernel, m, m - 2.0 * std::abs(s.sigma), 2.0, spec);
  const double h = 0.5 * m;
  const double g = std::abs(sf::gamma(h + sv));
  const double g_h = sf::gamma(h).real();
  return std::pow(2.0, 3.0 - m) * sf::gamma(static_cast<double>(m)).real() /
         (g_h * g_h * g * g) * integral.real();
}

double h_s_l1_norm(int m, SpectralParameter s, const QuadratureSpec& spec) {
  require_m(m, "h_s_l1_norm");
  require_interior(m, s, "h_s_l1_norm");
  const cplx sv = s.value();
  const auto kernel = [&](double rho) {
    return cplx{std::norm(sf::bessel_k(sv, rho)), 0.0};
  };
  const cplx integral =
      radial_integral(kernel, m, m - 2.0 * std::abs(s.sigma), 2.0, spec);
  const double h = 0.5 * m;
  const double g_h = sf::gamma(h).real();
  const double denom = std::abs(sf::gamma(h + sv)) * std::abs(sf::gamma(h - sv));
  return std::pow(2.0, 3.0 - m) * sf::gamma(static_cast<double>(m)).real() /
         (g_h * g_h * denom) * integral.real();
}

cplx phi_on_NA(int m, SpectralParameter s, double r, const std::vector<double>& y,
               const QuadratureSpec& spec) {
  if (m < 1 || m > 3) throw DomainError("phi_on_NA: m must be 1, 2 or 3");
  if (static_cast<int>(y.size()) != m) {
    throw DomainError("phi_on_NA: y must have m components");
  }
  require_interior(m, s, "phi_on_NA");
  double y_norm = 0.0;
  for (double v : y) y_norm += v * v;
  y_norm = std::sqrt(y_norm);

  const double er = std::exp(r);
  const double k_scale = er * y_norm;
  // Normalized average of e^{-i<y, x>} over the sphere |x| = rho.
  const auto angular = [m](double k) -> double {
    if (k == 0.0) return 1.0;
    switch (m) {
      case 1: return std::cos(k);
      case 2: return std::cyl_bessel_j(0.0, k);
      default: return std::sin(k) / k;
    }
  };
  const cplx sv = s.value();
  const auto kernel = [&](double rho) {
    return sf::bessel_k(sv, er * rho) * sf::bessel_k(sv, rho) *
           angular(k_scale * rho);
  };
  // Near zero K_s(e^r rho) K_s(rho) ~ rho^{-2|sigma|}; far decay e^{-(1+e^r) rho}.
  const cplx integral = radial_integral(kernel, m, m - 2.0 * std::abs(s.sigma),
                                        1.0 + er, spec);
  const double h = 0.5 * m;
  const cplx constant = sf::gamma(static_cast<double>(m)).real() /
                        (std::pow(pi, h) * sf::gamma(h).real()) *
                        std::pow(2.0, 2.0 - m) * sf::rgamma(h + sv) *
                        sf::rgamma(h - sv);
  return constant * std::exp(h * r) * sphere_area(m) * integral;
}

cplx cesaro_extract(const std::function<cplx(double)>& phi_samples, double x0,
                    int n) {
  if (n < 1) throw DomainError("cesaro_extract: n must be at least 1");
  QuadratureSpec spec;
  spec.relative_tolerance = 1e-10;
  spec.absolute_tolerance = 1e-13;
  const Integrand f = [&](double r) {
    return std::exp(cplx{0.0, r * x0}) * phi_samples(r);
  };
  const double a = n;
  const auto result = sf::integrate_panels(f, a, 2.0 * a, 1.0, spec);
  return result.value / a;
}

}  // namespace rankone::spherical
