#include "rankone/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "rankone/errors.hpp"

namespace rankone::groups {

namespace {

// Real dimension of the underlying division algebra.
int algebra_dim(Family family) {
  switch (family) {
    case Family::SO0: return 1;
    case Family::SU: return 2;
    case Family::Sp: return 4;
    case Family::F4: return 8;
  }
  return 1;
}

StripPosition from_sign(int cmp_sigma, bool t_zero) {
  if (cmp_sigma < 0) return StripPosition::Interior;
  if (cmp_sigma > 0) return StripPosition::Exterior;
  return t_zero ? StripPosition::BoundaryConstant
                : StripPosition::BoundaryNontrivial;
}

}  // namespace

RankOneGroup params_for(Family family, int n) {
  RankOneGroup g;
  g.family = family;
  const int d = algebra_dim(family);
  if (family == Family::F4) {
    g.n = 1;
    g.p = 8;
  } else {
    if (n < 2) throw DomainError("params_for: n must be at least 2");
    g.n = n;
    g.p = (n - 1) * d;
  }
  g.q = d - 1;
  g.m = g.p + 2 * g.q;
  g.m0 = g.p + 2;
  return g;
}

RankOneGroup lorentz_group(int m) {
  if (m < 1) throw DomainError("lorentz_group: m must be at least 1");
  return params_for(Family::SO0, m + 1);
}

StripPosition classify(SpectralParameter s, int m) {
  const double half = 0.5 * m;
  const double gap = std::abs(s.sigma) - half;
  int cmp = 0;
  if (gap < -kBoundaryTolerance) cmp = -1;
  if (gap > kBoundaryTolerance) cmp = 1;
  return from_sign(cmp, std::abs(s.t) <= kBoundaryTolerance);
}

StripPosition classify(const Rational& sigma, const Rational& t, int m) {
  const Rational half(m, 2);
  const Rational a = boost::abs(sigma);
  const int cmp = (a < half) ? -1 : (a > half ? 1 : 0);
  return from_sign(cmp, t == Rational(0));
}

Family parse_family(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (key == "SO0" || key == "SO") return Family::SO0;
  if (key == "SU") return Family::SU;
  if (key == "SP") return Family::Sp;
  if (key == "F4") return Family::F4;
  throw DomainError("unknown group family '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::SO0: return "SO0";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::F4: return "F4";
  }
  return "?";
}

std::string to_string(StripPosition position) {
  switch (position) {
    case StripPosition::Interior: return "INTERIOR";
    case StripPosition::BoundaryConstant: return "BOUNDARY_CONSTANT";
    case StripPosition::BoundaryNontrivial: return "BOUNDARY_NONTRIVIAL";
    case StripPosition::Exterior: return "EXTERIOR";
  }
  return "?";
}

std::string describe(const RankOneGroup& g) {
  if (g.family == Family::F4) return "F4(-20)";
  return to_string(g.family) + "(1," + std::to_string(g.n) + ")";
}

}  // namespace rankone::groups
