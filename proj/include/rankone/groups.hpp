#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace rankone::groups {

using cplx = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

enum class Family { SO0, SU, Sp, F4 };

/// Parameter block of a connected simple Lie group of real rank one with
/// finite center: G = SO0(1,n), SU(1,n), Sp(1,n) or F4(-20).
struct RankOneGroup {
  Family family = Family::SO0;
  int n = 2;
  int p = 1;
  int q = 0;
  int m = 1;
  int m0 = 3;
};

/// Fills p, q and the derived m = p + 2q, m0 = p + 2.
/// n must be >= 2 except for F4, which ignores n.
RankOneGroup params_for(Family family, int n = 1);

/// SO0(1, m+1), the group whose root multiplicity is m.
RankOneGroup lorentz_group(int m);

/// s = sigma + i t.
struct SpectralParameter {
  double sigma = 0.0;
  double t = 0.0;

  cplx value() const { return {sigma, t}; }
  static SpectralParameter from(cplx s) { return {s.real(), s.imag()}; }
};

enum class StripPosition { Interior, BoundaryConstant, BoundaryNontrivial, Exterior };

/// Absolute tolerance for deciding |sigma| = m/2 (and t = 0) on floats.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Position of s relative to the strip |Re s| < m/2.
StripPosition classify(SpectralParameter s, int m);

/// Exact classification for rational sigma and t.
StripPosition classify(const Rational& sigma, const Rational& t, int m);

Family parse_family(const std::string& name);
std::string to_string(Family family);
std::string to_string(StripPosition position);
std::string describe(const RankOneGroup& group);

}  // namespace rankone::groups
