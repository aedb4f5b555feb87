#include <array>
#include <cmath>
#include <numbers>

#include "rankone/errors.hpp"
#include "rankone/specfun.hpp"

namespace rankone::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(cplx z, double tol) {
  if (z.real() > 0.5) return false;
  const double nearest = std::round(z.real());
  return nearest <= 0.0 && std::abs(z - cplx{nearest, 0.0}) < tol;
}

// Gamma(z) for Re z >= 1/2.
cplx lanczos(cplx z) {
  z -= 1.0;
  cplx series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * series;
}

}  // namespace

cplx gamma(cplx z) {
  if (near_nonpositive_integer(z, kPoleTolerance)) {
    throw PoleError("gamma: pole at z=" + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * lanczos(1.0 - z));
  }
  return lanczos(z);
}

cplx rgamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
    return 0.0;
  }
  if (z.real() < 0.5) {
    return std::sin(kPi * z) * lanczos(1.0 - z) / kPi;
  }
  return 1.0 / lanczos(z);
}

cplx digamma(cplx z) {
  if (near_nonpositive_integer(z, kPoleTolerance)) {
    throw PoleError("digamma: pole at z=" + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  cplx acc = 0.0;
  while (std::abs(z) < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  // Bernoulli numbers B_{2k}/(2k) for k = 1..7.
  constexpr std::array<double, 7> coeff = {
      1.0 / 12.0,   -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0,   1.0 / 12.0};
  const cplx inv2 = 1.0 / (z * z);
  cplx power = inv2;
  cplx tail = 0.0;
  for (double c : coeff) {
    tail += c * power;
    power *= inv2;
  }
  return acc + std::log(z) - 0.5 / z - tail;
}

cplx beta(cplx a, cplx b) {
  if (!(a.real() > 0.0) || !(b.real() > 0.0)) {
    throw DomainError("beta: both arguments need positive real part");
  }
  return gamma(a) * gamma(b) * rgamma(a + b);
}

}  // namespace rankone::specfun
