#include <array>
#include <cmath>
#include <optional>

#include "rankone/errors.hpp"
#include "rankone/specfun.hpp"

namespace rankone::specfun {

namespace {

// Half-width of the window around an integer c - a - b inside which the
// connection formula is replaced by interpolation in c.
constexpr double kDegenerateWindow = 1e-4;
// Closer than this the exact logarithmic formula is used as is.
constexpr double kExactDegenerate = 1e-13;

bool is_nonpositive_integer(cplx z, double tol) {
  const double nearest = std::round(z.real());
  return nearest <= 0.0 && std::abs(z - cplx{nearest, 0.0}) < tol;
}

// Number of terms N for a terminating series, if a or b is a non-positive
// integer.
std::optional<int> terminating_length(cplx a, cplx b) {
  std::optional<int> n;
  for (cplx p : {a, b}) {
    if (p.imag() == 0.0 && p.real() <= 0.0 && p.real() == std::round(p.real())) {
      const int k = static_cast<int>(-p.real());
      if (!n || k < *n) n = k;
    }
  }
  return n;
}

cplx power_series(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl) {
  cplx sum = 1.0;
  cplx term = 1.0;
  int quiet = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= ctl.relative_tolerance * std::abs(sum)) {
      if (++quiet >= ctl.quiet_terms) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("hyp2f1: power series hit the term cap", sum.real(),
                         sum.imag(), std::abs(term));
}

cplx finite_sum(cplx a, cplx b, cplx c, cplx z, int n_terms) {
  cplx sum = 1.0;
  cplx term = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
  }
  return sum;
}

// F(a, b; a + b + m; 1 - w) for integer m >= 0 (logarithmic case).
cplx degenerate_connection(cplx a, cplx b, int m, double w, double log_w,
                           const SeriesControl& ctl) {
  const cplx c = a + b + static_cast<double>(m);
  cplx finite = 0.0;
  if (m > 0) {
    cplx term = 1.0;
    cplx part = 0.0;
    for (int n = 0; n < m; ++n) {
      if (n > 0) {
        const double dn = n - 1;
        term *= (a + dn) * (b + dn) / ((dn + 1.0) * (1.0 - m + dn)) * w;
      }
      part += term;
    }
    finite = gamma(static_cast<double>(m)) * gamma(c) * rgamma(a + double(m)) *
             rgamma(b + double(m)) * part;
  }

  // term_n = (a+m)_n (b+m)_n / (n! (n+m)!) w^n
  double m_fact = 1.0;
  for (int k = 2; k <= m; ++k) m_fact *= k;
  cplx term = 1.0 / m_fact;
  cplx sum = 0.0;
  int quiet = 0;
  bool done = false;
  for (int n = 0; n < ctl.max_terms; ++n) {
    if (n > 0) {
      const double dn = n - 1;
      term *= (a + double(m) + dn) * (b + double(m) + dn) /
              ((dn + 1.0) * (dn + 1.0 + m)) * w;
    }
    const cplx bracket = log_w - digamma(n + 1.0) - digamma(n + m + 1.0) +
                         digamma(a + double(n + m)) + digamma(b + double(n + m));
    const cplx contrib = term * bracket;
    sum += contrib;
    if (std::abs(contrib) <= ctl.relative_tolerance * std::abs(sum)) {
      if (++quiet >= ctl.quiet_terms) {
        done = true;
        break;
      }
    } else {
      quiet = 0;
    }
  }
  if (!done) {
    throw ConvergenceError("hyp2f1: logarithmic series hit the term cap",
                           sum.real(), sum.imag(), std::abs(term));
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx log_part =
      -sign * std::exp(m * log_w) * gamma(c) * rgamma(a) * rgamma(b) * sum;
  return finite + log_part;
}

// F(a, b; c; 1 - w) with c - a - b an exact integer m.
cplx integer_connection(cplx a, cplx b, cplx c, int m, double w, double log_w,
                        const SeriesControl& ctl) {
  if (m >= 0) return degenerate_connection(a, b, m, w, log_w, ctl);
  // Euler: F(a,b;c;z) = (1-z)^{c-a-b} F(c-a, c-b; c; z).
  return std::exp(m * log_w) *
         degenerate_connection(c - a, c - b, -m, w, log_w, ctl);
}

cplx generic_connection(cplx a, cplx b, cplx c, double w, double log_w,
                        const SeriesControl& ctl) {
  const cplx d = c - a - b;
  const cplx gc = gamma(c);
  const cplx first = gc * gamma(d) * rgamma(c - a) * rgamma(c - b) *
                     power_series(a, b, 1.0 - d, w, ctl);
  const cplx second = gc * gamma(-d) * rgamma(a) * rgamma(b) *
                      std::exp(d * log_w) *
                      power_series(c - a, c - b, d + 1.0, w, ctl);
  return first + second;
}

cplx connection(cplx a, cplx b, cplx c, double w, double log_w,
                const SeriesControl& ctl) {
  const cplx d = c - a - b;
  const double m_real = std::round(d.real());
  const cplx eps = d - m_real;
  if (std::abs(eps) >= kDegenerateWindow) {
    return generic_connection(a, b, c, w, log_w, ctl);
  }
  const int m = static_cast<int>(m_real);
  if (std::abs(eps) < kExactDegenerate) {
    return integer_connection(a, b, a + b + m_real, m, w, log_w, ctl);
  }
  // Five-point Lagrange interpolation in c across the logarithmic point.
  const double h = kDegenerateWindow;
  const std::array<double, 5> nodes = {-2.0 * h, -h, 0.0, h, 2.0 * h};
  std::array<cplx, 5> values;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const cplx ck = a + b + m_real + nodes[k];
    values[k] = (nodes[k] == 0.0)
                    ? integer_connection(a, b, ck, m, w, log_w, ctl)
                    : generic_connection(a, b, ck, w, log_w, ctl);
  }
  cplx result = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    cplx weight = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != k) weight *= (eps - nodes[j]) / (nodes[k] - nodes[j]);
    }
    result += weight * values[k];
  }
  return result;
}

void check_c(cplx c) {
  if (is_nonpositive_integer(c, kPoleTolerance)) {
    throw DomainError("hyp2f1: c is a non-positive integer");
  }
}

}  // namespace

cplx hyp2f1_complement(cplx a, cplx b, cplx c, double w,
                       const SeriesControl& ctl) {
  if (!(w > 0.0) || !(w <= 1.0)) {
    throw DomainError("hyp2f1_complement: complement must lie in (0, 1]");
  }
  return hyp2f1_complement_log(a, b, c, std::log(w), ctl);
}

cplx hyp2f1_complement_log(cplx a, cplx b, cplx c, double log_w,
                           const SeriesControl& ctl) {
  check_c(c);
  if (!(log_w <= 0.0) || std::isinf(log_w)) {
    throw DomainError("hyp2f1_complement_log: need -inf < log(w) <= 0");
  }
  if (log_w == 0.0) return 1.0;
  const double w = std::exp(log_w);
  const double z = -std::expm1(log_w);
  if (auto n = terminating_length(a, b)) return finite_sum(a, b, c, z, *n);
  if (z <= 0.9) return power_series(a, b, c, z, ctl);
  return connection(a, b, c, w, log_w, ctl);
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl) {
  check_c(c);
  if (z == cplx{0.0, 0.0}) return 1.0;
  if (auto n = terminating_length(a, b)) return finite_sum(a, b, c, z, *n);
  if (std::abs(z) <= 0.9) return power_series(a, b, c, z, ctl);
  if (z.imag() == 0.0) {
    const double x = z.real();
    if (x > 0.9 && x < 1.0) return hyp2f1_complement(a, b, c, 1.0 - x, ctl);
    if (x < 0.0) {
      // Pfaff: F(a,b;c;x) = (1-x)^{-a} F(a, c-b; c; x/(x-1)).
      const double one_minus = 1.0 - x;
      const cplx prefactor = std::pow(cplx{one_minus, 0.0}, -a);
      return prefactor * hyp2f1_complement(a, c - b, c, 1.0 / one_minus, ctl);
    }
  }
  throw DomainError("hyp2f1: argument outside the supported region");
}

}  // namespace rankone::specfun
