#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "rankone/errors.hpp"
#include "rankone/groups.hpp"
#include "rankone/lorentz_geom.hpp"
#include "rankone/specfun.hpp"
#include "rankone/spherical.hpp"
#include "rankone/tree_radial.hpp"

namespace rankone::cli {

namespace {

namespace sf = rankone::specfun;
namespace sph = rankone::spherical;
using cplx = std::complex<double>;
using groups::SpectralParameter;

constexpr double pi = 3.14159265358979323846;

double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

cplx random_z(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(0.6, 6.0);
  std::uniform_real_distribution<double> im(-5.0, 5.0);
  return {re(rng), im(rng)};
}

SpectralParameter random_interior(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> sig(-0.45 * m, 0.45 * m);
  std::uniform_real_distribution<double> t(-3.0, 3.0);
  return {sig(rng), t(rng)};
}

// Gamma as seen by the Gamma checks, with the optional perturbation.
cplx gamma_hook(cplx z, const SuiteOptions& o) {
  return sf::gamma(z) * (1.0 + o.perturb_gamma);
}

double gamma_duplication(const SuiteOptions& o) {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z = random_z(rng);
    const cplx lhs = gamma_hook(z, o) * gamma_hook(z + 0.5, o);
    const cplx rhs = std::pow(cplx{2.0, 0.0}, 1.0 - 2.0 * z) * std::sqrt(pi) *
                     gamma_hook(2.0 * z, o);
    worst = std::max(worst, rel_err(lhs, rhs));
  }
  return worst;
}

double gamma_recurrence(const SuiteOptions& o) {
  std::mt19937_64 rng(102);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z = random_z(rng);
    worst = std::max(worst, rel_err(gamma_hook(z + 1.0, o), z * gamma_hook(z, o)));
  }
  return worst;
}

double gamma_conjugation(const SuiteOptions& o) {
  std::mt19937_64 rng(103);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z = random_z(rng);
    worst = std::max(worst, rel_err(gamma_hook(std::conj(z), o), std::conj(gamma_hook(z, o))));
  }
  return worst;
}

double gamma_reflection(const SuiteOptions& o) {
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> re(0.05, 0.95);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z{re(rng), im(rng)};
    const cplx lhs = gamma_hook(z, o) * gamma_hook(1.0 - z, o);
    worst = std::max(worst, rel_err(lhs, pi / std::sin(pi * z)));
  }
  return worst;
}

double hyp2f1_euler(const SuiteOptions&) {
  std::mt19937_64 rng(105);
  std::uniform_real_distribution<double> p(-1.5, 1.5);
  std::uniform_real_distribution<double> x(-0.8, 0.85);
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const cplx a{p(rng), p(rng)};
    const cplx b{p(rng), p(rng)};
    const cplx c{2.0 + std::abs(p(rng)), p(rng)};
    const double z = x(rng);
    const cplx lhs = sf::hyp2f1(a, b, c, z);
    const cplx rhs = std::pow(1.0 - z, c - a - b) * sf::hyp2f1(c - a, c - b, c, z);
    worst = std::max(worst, rel_err(lhs, rhs));
  }
  return worst;
}

double bessel_half_order(const SuiteOptions&) {
  double worst = 0.0;
  for (double x : {0.1, 0.7, 2.0, 9.0, 30.0}) {
    const cplx want = std::sqrt(pi / (2.0 * x)) * std::exp(-x);
    worst = std::max(worst, rel_err(sf::bessel_k(0.5, x), want));
    worst = std::max(worst, rel_err(sf::bessel_k(-0.5, x), want));
  }
  return worst;
}

double weber_schafheitlin(const SuiteOptions&) {
  const cplx params[][3] = {{0.0, 0.0, 0.0},
                            {{0.3, 0.8}, {0.3, -0.8}, -1.0},
                            {{0.2, 0.4}, {0.1, -0.3}, 0.5},
                            {0.6, 0.0, -2.0}};
  sf::QuadratureSpec spec;
  spec.relative_tolerance = 1e-10;
  spec.absolute_tolerance = 1e-16;
  double worst = 0.0;
  for (const auto& p : params) {
    const auto quad = sf::weber_schafheitlin_quadrature(p[0], p[1], p[2], spec);
    worst = std::max(worst, rel_err(quad.value, sf::weber_schafheitlin_rhs(p[0], p[1], p[2])));
  }
  return worst;
}

double triple_formula(const SuiteOptions&) {
  std::mt19937_64 rng(106);
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m) {
    const auto g = groups::lorentz_group(m);
    for (int i = 0; i < 4; ++i) {
      const SpectralParameter s = random_interior(m, rng);
      for (double r : {0.1, 1.0, 5.0}) {
        const cplx integral = sph::phi_lorentz_integral(m, s, r);
        const cplx hyp2 = sph::phi_lorentz_hyp2(m, s, r);
        const cplx direct = sph::phi_with(g, s, r, sph::Method::HypergeometricDirect);
        worst = std::max({worst, rel_err(hyp2, integral), rel_err(direct, integral)});
      }
    }
  }
  return worst;
}

double norm_identity(const SuiteOptions&) {
  std::mt19937_64 rng(107);
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 2; ++i) {
      const SpectralParameter s = random_interior(m, rng);
      worst = std::max(worst, rel_err(sph::h_s_l1_norm(m, s), sph::cb_norm_lorentz(m, s)));
    }
  }
  return worst;
}

double axis_normalization(const SuiteOptions&) {
  std::mt19937_64 rng(108);
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m) {
    std::uniform_real_distribution<double> sig(-0.49 * m, 0.49 * m);
    std::uniform_real_distribution<double> t(-20.0, 20.0);
    for (int i = 0; i < 10; ++i) {
      worst = std::max(worst, std::abs(sph::cb_norm_lorentz(m, {0.0, t(rng)}) - 1.0));
      worst = std::max(worst, std::abs(sph::cb_norm_lorentz(m, {sig(rng), 0.0}) - 1.0));
    }
    worst = std::max(worst, std::abs(sph::cb_norm_lorentz(m, {0.5 * m, 0.0}) - 1.0));
    worst = std::max(worst, std::abs(sph::cb_norm_lorentz(m, {-0.5 * m, 0.0}) - 1.0));
  }
  return worst;
}

double c_function_edge(const SuiteOptions&) {
  double worst = 0.0;
  for (groups::Family f : {groups::Family::SO0, groups::Family::SU, groups::Family::Sp}) {
    const auto g = groups::params_for(f, 3);
    worst = std::max(worst, std::abs(sph::c_function(g, {0.5 * g.m, 0.0}).value - 1.0));
  }
  const auto f4 = groups::params_for(groups::Family::F4);
  return std::max(worst, std::abs(sph::c_function(f4, {0.5 * f4.m, 0.0}).value - 1.0));
}

double sphere_coefficient(const SuiteOptions&) {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> rr(0.1, 2.5);
  sf::QuadratureSpec spec;
  spec.relative_tolerance = 1e-10;
  spec.absolute_tolerance = 1e-14;
  double worst = 0.0;
  for (int n : {2, 3}) {
    const int m = n - 1;
    const auto g = groups::lorentz_group(m);
    for (int i = 0; i < 3; ++i) {
      const SpectralParameter s = random_interior(m, rng);
      const double r = rr(rng);
      const cplx via_rho = lorentz::phi_via_rho(n, s, lorentz::make_a(r, n), spec);
      worst = std::max(worst, std::abs(via_rho - sph::phi(g, s, r).value));
    }
  }
  return worst;
}

double coefficient_pairing(const SuiteOptions&) {
  double worst = 0.0;
  const SpectralParameter s{0.2, 0.6};
  for (double r : {-0.4, 0.8}) {
    for (double y : {0.0, 1.5}) {
      const cplx pairing = lorentz::coefficient_pairing(s, r, y, sph::default_spec());
      worst = std::max(worst, std::abs(pairing - sph::phi_on_NA(1, s, r, {y})));
    }
  }
  return worst;
}

double fourier_transform(const SuiteOptions&) {
  double worst = 0.0;
  for (SpectralParameter s : {SpectralParameter{0.3, 0.7}, SpectralParameter{0.8, -0.2}}) {
    for (double y : {0.5, 1.0, 2.0}) {
      const auto [direct, closed] = lorentz::fhat_check(1, s, y, sph::default_spec());
      worst = std::max(worst, std::abs(direct - closed));
    }
  }
  return worst;
}

double cesaro(const SuiteOptions&) {
  const auto phi = [](double r) { return 3.0 * std::exp(cplx{0.0, -2.0 * r}) + std::exp(-r); };
  const cplx hit = sph::cesaro_extract(phi, 2.0, 1000);
  const cplx miss = sph::cesaro_extract(phi, 1.0, 1000);
  return std::max(std::abs(hit - 3.0), std::abs(miss));
}

double tree_sphere_sizes(const SuiteOptions&) {
  double mismatches = 0.0;
  for (auto [M, N] : {std::pair{3, 0}, std::pair{0, 2}, std::pair{1, 1}}) {
    const tree::FreeProductSpec spec(M, N);
    for (int n = 0; n <= 6; ++n) {
      const auto words = tree::enumerate_sphere(spec, n);
      if (static_cast<std::int64_t>(words.size()) != tree::sphere_size(spec, n)) mismatches += 1;
    }
  }
  return mismatches;
}

double tree_bz_constancy(const SuiteOptions&) {
  double violations = 0.0;
  const tree::FreeProductSpec spec(1, 1);
  std::vector<tree::Word> ball;
  for (int n = 0; n <= 2; ++n) {
    const auto sphere = tree::enumerate_sphere(spec, n);
    ball.insert(ball.end(), sphere.begin(), sphere.end());
  }
  for (const auto& x : ball) {
    for (const auto& y : ball) {
      const auto counts = tree::bz_counts(spec, x, y, 4);
      const auto first = counts.begin()->second;
      for (const auto& [z, c] : counts) {
        if (c != first) violations += 1;
      }
    }
  }
  return violations;
}

double tree_commutativity(const SuiteOptions&) {
  double violations = 0.0;
  const tree::FreeProductSpec spec(3, 0);
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      const auto a = tree::shell_indicator<tree::Rational>(i);
      const auto b = tree::shell_indicator<tree::Rational>(j);
      if (!(tree::radial_convolve(spec, a, b) == tree::radial_convolve(spec, b, a))) {
        violations += 1;
      }
    }
  }
  return violations;
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"gamma_duplication", "Legendre duplication formula for Gamma", 1e-12, gamma_duplication},
      {"gamma_recurrence", "functional equation Gamma(z+1) = z Gamma(z)", 1e-12, gamma_recurrence},
      {"gamma_conjugation", "Gamma commutes with complex conjugation", 1e-12, gamma_conjugation},
      {"gamma_reflection", "Euler reflection formula", 1e-12, gamma_reflection},
      {"hyp2f1_euler", "Euler transformation of the Gauss hypergeometric function", 1e-11,
       hyp2f1_euler},
      {"bessel_half_order", "K of order 1/2 in closed form", 1e-11, bessel_half_order},
      {"weber_schafheitlin", "Gamma-product evaluation of int K_nu K_mu r^-rho", 1e-7,
       weber_schafheitlin},
      {"triple_formula", "integral and hypergeometric forms of the Lorentz spherical function",
       1e-8, triple_formula},
      {"norm_identity", "cb-norm equals the L1 norm of h_s", 1e-6, norm_identity},
      {"axis_normalization", "cb-norm is 1 on both axes and at s = +-m/2", 1e-12,
       axis_normalization},
      {"c_function_edge", "c(m/2) = 1", 1e-12, c_function_edge},
      {"sphere_coefficient", "phi_s as a coefficient of rho_s on L2 of the sphere", 1e-6,
       sphere_coefficient},
      {"coefficient_pairing", "phi_s(a_r n_y) as a pairing of f~_s and f~_{-conj s}", 1e-5,
       coefficient_pairing},
      {"fourier_transform", "Fourier transform of (x^2+1)^{-s-1/2} via K_s", 1e-6,
       fourier_transform},
      {"cesaro_extraction", "Cesaro mean isolates the e^{-i x0 r} coefficient", 1e-2, cesaro},
      {"tree_sphere_sizes", "|E_n| = (q+1) q^{n-1}", 0.0, tree_sphere_sizes},
      {"tree_bz_constancy", "|B_z| independent of z", 0.0, tree_bz_constancy},
      {"tree_commutativity", "radial functions on the tree commute under convolution", 0.0,
       tree_commutativity},
  };
  return checks;
}

CheckResult run_check(const Check& check, const SuiteOptions& options) {
  CheckResult result{check.id, check.anchor, std::numeric_limits<double>::infinity(),
                     check.tolerance, false};
  try {
    result.achieved_error = check.run(options);
    result.pass = result.achieved_error <= check.tolerance;
  } catch (const std::exception&) {
    result.pass = false;
  }
  return result;
}

}  // namespace rankone::cli
