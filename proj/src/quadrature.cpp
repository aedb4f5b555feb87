#include "rankone/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "rankone/errors.hpp"

namespace rankone::specfun {

namespace {

// Kronrod abscissae on [0,1); the odd-indexed ones are the 7-point Gauss
// nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  // Part of `error` that is pure rounding (50 eps * int |f|).
  double floor;
  bool operator<(const Panel& other) const { return error < other.error; }
};

cplx checked(const Integrand& f, double x) {
  const cplx v = f(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw ConvergenceError("integrand is not finite at x=" + std::to_string(x),
                           0.0, 0.0,
                           std::numeric_limits<double>::infinity());
  }
  return v;
}

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<cplx, 15> fv;
  fv[7] = checked(f, center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = checked(f, center - dx);
    fv[14 - j] = checked(f, center + dx);
  }
  cplx kronrod = fv[7] * kWgk[7];
  cplx gauss = fv[7] * kWg[3];
  double abs_sum = std::abs(fv[7]) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const cplx pair = fv[j] + fv[14 - j];
    kronrod += kWgk[j] * pair;
    abs_sum += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const cplx mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  }
  const double scale = std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  const double resasc = asc * scale;
  const double resabs = abs_sum * scale;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double floor = 50.0 * kEps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(floor, err);
  }
  return {a, b, kronrod * half, err, floor};
}

double target_error(const QuadratureSpec& spec, cplx value) {
  return std::max(spec.absolute_tolerance,
                  spec.relative_tolerance * std::abs(value));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (max_panels < 1) throw DomainError("max_panels must be at least 1");
  if (!(truncation_margin >= 0.0)) {
    throw DomainError("truncation_margin must be non-negative");
  }
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_finite needs finite endpoints");
  }
  if (a == b) return {cplx{0.0, 0.0}, 0.0, 0};

  std::priority_queue<Panel> heap;
  Panel first = gauss_kronrod(f, a, b);
  cplx total = first.value;
  double total_err = first.error;
  double total_floor = first.floor;
  heap.push(first);
  int panels = 1;

  while (total_err > target_error(spec, total)) {
    // Rounding dominates the estimate: further bisection cannot help.
    if (total_err <= 2.0 * total_floor) break;
    if (panels >= spec.max_panels) {
      throw ConvergenceError("adaptive quadrature exhausted max_panels",
                             total.real(), total.imag(), total_err);
    }
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      // Panel cannot be split further in double precision.
      if (total_err <= 1e3 * target_error(spec, total)) break;
      throw ConvergenceError("quadrature panel collapsed to machine width",
                             total.real(), total.imag(), total_err);
    }
    heap.pop();
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_floor += left.floor + right.floor - worst.floor;
    heap.push(left);
    heap.push(right);
    ++panels;
    if (panels % 64 == 0) {
      // Resum to shed accumulated cancellation in the running totals.
      auto copy = heap;
      total = 0.0;
      total_err = 0.0;
      total_floor = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_err += copy.top().error;
        total_floor += copy.top().floor;
        copy.pop();
      }
    }
  }
  return {total, total_err, panels};
}

namespace {

QuadratureResult sweep_to_infinity(const Integrand& f, double start,
                                   double direction, double rate,
                                   const QuadratureSpec& spec, cplx scale) {
  if (!(rate > 0.0)) {
    throw DomainError("semi-infinite integral needs a positive decay rate");
  }
  const double width = 2.0 / rate;
  const double margin = std::exp(-spec.truncation_margin);
  cplx total = 0.0;
  double total_err = 0.0;
  int panels = 0;
  double x = start;
  for (int k = 0; k < 100000; ++k) {
    const double next = x + direction * width;
    QuadratureSpec local = spec;
    local.absolute_tolerance = std::max(
        spec.absolute_tolerance,
        0.1 * spec.relative_tolerance * std::abs(total + scale));
    const double lo = std::min(x, next);
    const double hi = std::max(x, next);
    if (!std::isfinite(lo) || !std::isfinite(hi)) break;
    QuadratureResult piece = integrate_finite(f, lo, hi, local);
    total += piece.value;
    total_err += piece.error_estimate;
    panels += piece.panels;
    x = next;
    const double tail = std::abs(f(x)) / rate;
    const double goal =
        margin * std::max(spec.absolute_tolerance,
                          spec.relative_tolerance * std::abs(total + scale));
    if (k > 0 && std::abs(piece.value) <= goal && tail <= goal) {
      return {total, total_err + tail, panels};
    }
  }
  throw ConvergenceError("semi-infinite tail did not decay", total.real(),
                         total.imag(), std::numeric_limits<double>::infinity());
}

}  // namespace

QuadratureResult integrate(const Integrand& f, const Interval& domain,
                           const QuadratureSpec& spec) {
  spec.validate();
  const bool lo_inf = std::isinf(domain.lower);
  const bool hi_inf = std::isinf(domain.upper);
  if (lo_inf && hi_inf) {
    QuadratureResult right = sweep_to_infinity(f, 0.0, 1.0, domain.decay.rate,
                                               spec, cplx{0.0, 0.0});
    QuadratureResult left = sweep_to_infinity(f, 0.0, -1.0,
                                              domain.decay.rate, spec,
                                              right.value);
    return {left.value + right.value,
            left.error_estimate + right.error_estimate,
            left.panels + right.panels};
  }
  if (hi_inf) {
    return sweep_to_infinity(f, domain.lower, 1.0, domain.decay.rate, spec,
                             cplx{0.0, 0.0});
  }
  if (lo_inf) {
    QuadratureResult r = sweep_to_infinity(f, domain.upper, -1.0,
                                           domain.decay.rate, spec,
                                           cplx{0.0, 0.0});
    // Swept right-to-left over [lower, upper]: orientation already positive
    // because each panel is integrated from its smaller to larger end.
    return r;
  }
  return integrate_finite(f, domain.lower, domain.upper, spec);
}

QuadratureResult integrate_panels(const Integrand& f, double a, double b,
                                  double panel_width,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!(panel_width > 0.0)) throw DomainError("panel width must be positive");
  const double length = b - a;
  const auto count = static_cast<long>(std::ceil(std::abs(length) / panel_width));
  if (count <= 1) return integrate_finite(f, a, b, spec);
  const double step = length / static_cast<double>(count);
  QuadratureResult total{cplx{0.0, 0.0}, 0.0, 0};
  for (long i = 0; i < count; ++i) {
    const double lo = a + step * static_cast<double>(i);
    const double hi = (i + 1 == count) ? b : a + step * static_cast<double>(i + 1);
    QuadratureResult piece = integrate_finite(f, lo, hi, spec);
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
    total.panels += piece.panels;
  }
  return total;
}

cplx integrate_periodic(const Integrand& f, double period,
                        const QuadratureSpec& spec, int min_nodes) {
  spec.validate();
  int nodes = std::max(min_nodes, 4);
  double h = period / nodes;
  cplx sum = 0.0;
  for (int i = 0; i < nodes; ++i) sum += checked(f, h * i);
  cplx estimate = sum * h;
  while (nodes < (1 << 22)) {
    cplx extra = 0.0;
    for (int i = 0; i < nodes; ++i) extra += checked(f, h * (i + 0.5));
    sum += extra;
    nodes *= 2;
    h *= 0.5;
    const cplx refined = sum * h;
    const double change = std::abs(refined - estimate);
    estimate = refined;
    if (change <= target_error(spec, refined)) return refined;
  }
  throw ConvergenceError("periodic trapezoid did not converge",
                         estimate.real(), estimate.imag(),
                         std::numeric_limits<double>::infinity());
}

}  // namespace rankone::specfun
