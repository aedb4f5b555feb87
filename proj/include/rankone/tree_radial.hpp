#pragma once

// Reduced words in Gamma = (*_M Z/2Z) * (*_N Z), whose Cayley graph is the
// homogeneous tree of degree q+1 (q = M + 2N - 1), together with spheres,
// radialization and convolution of radial functions.
//
// Shell arithmetic is generic in the value type T: groups::Rational gives
// exact results, std::complex<double> or double give floating ones.

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "rankone/errors.hpp"
#include "rankone/groups.hpp"

namespace rankone::tree {

using groups::Rational;

/// Default cap on the number of words enumerated in one sphere.
inline constexpr std::int64_t kDefaultSphereCap = 1'000'000;

struct FreeProductSpec {
  int M = 0;  // Z/2Z factors, ids 0..M-1
  int N = 0;  // Z factors, ids M..M+N-1
  std::int64_t sphere_cap = kDefaultSphereCap;

  /// Throws DomainError unless M, N >= 0 and M + 2N >= 3.
  FreeProductSpec(int M, int N, std::int64_t sphere_cap = kDefaultSphereCap);

  int q() const { return M + 2 * N - 1; }
  int degree() const { return M + 2 * N; }
  int factors() const { return M + N; }
  bool is_involution(int factor) const { return factor < M; }
};

/// Parses "M,N" (e.g. "3,0").
FreeProductSpec parse_free_product(const std::string& text);

struct Letter {
  int factor = 0;
  int exponent = 1;  // always +1 in a Z/2Z factor

  auto operator<=>(const Letter&) const = default;
};

/// Reduced word; construction reduces the given letters.
class Word {
 public:
  Word() = default;
  Word(const FreeProductSpec& spec, std::vector<Letter> letters);

  static Word identity() { return Word(); }

  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  auto operator<=>(const Word&) const = default;

 private:
  friend Word multiply(const FreeProductSpec&, const Word&, const Word&);
  friend Word inverse(const FreeProductSpec&, const Word&);
  std::vector<Letter> letters_;
};

std::string to_string(const FreeProductSpec& spec, const Word& w);

/// The q+1 generators (each Z/2Z letter, each Z letter with both signs).
std::vector<Letter> generators(const FreeProductSpec& spec);

Word multiply(const FreeProductSpec& spec, const Word& a, const Word& b);
Word inverse(const FreeProductSpec& spec, const Word& w);

/// |E_n| = (q+1) q^{n-1} for n >= 1; OverflowError past int64.
std::int64_t sphere_size(const FreeProductSpec& spec, int n);

/// All words of length n in lexicographic order, by breadth-first extension.
/// CapacityError when |E_n| exceeds spec.sphere_cap.
std::vector<Word> enumerate_sphere(const FreeProductSpec& spec, int n);

/// A fixed word of length n (first admissible generator at each step).
Word representative(const FreeProductSpec& spec, int n);

template <class T>
using WordFn = std::map<Word, T>;

/// Radial function given by its shell values; absent shells are zero.
template <class T>
struct RadialFn {
  std::map<int, T> shells;

  T at(int n) const {
    const auto it = shells.find(n);
    return it == shells.end() ? T(0) : it->second;
  }
  int max_shell() const { return shells.empty() ? -1 : shells.rbegin()->first; }
  bool operator==(const RadialFn&) const = default;
};

template <class T>
RadialFn<T> shell_indicator(int n) {
  RadialFn<T> f;
  f.shells[n] = T(1);
  return f;
}

/// Extends a radial function to the words of the ball of its support.
template <class T>
WordFn<T> expand(const FreeProductSpec& spec, const RadialFn<T>& f) {
  WordFn<T> out;
  for (const auto& [n, v] : f.shells) {
    if (v == T(0)) continue;
    for (const Word& w : enumerate_sphere(spec, n)) out[w] = v;
  }
  return out;
}

namespace detail {

template <class T>
T from_count(std::int64_t n) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(n);
  } else {
    return T(static_cast<double>(n));
  }
}

template <class T>
double magnitude(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return std::abs(boost::rational_cast<double>(v));
  } else {
    return std::abs(v);
  }
}

// counts[b] = #{x in E_a : |x^{-1} z| = b} for a fixed z in E_c.
std::vector<std::int64_t> pair_counts(const FreeProductSpec& spec, int a, int c);

}  // namespace detail

/// h^nat: shell n carries (1/|E_n|) sum_{|y|=n} h(y).
template <class T>
RadialFn<T> radialize(const FreeProductSpec& spec, const WordFn<T>& h) {
  std::map<int, T> sums;
  for (const auto& [w, v] : h) {
    auto it = sums.find(w.length());
    if (it == sums.end()) {
      sums.emplace(w.length(), v);
    } else {
      it->second += v;
    }
  }
  RadialFn<T> out;
  for (const auto& [n, total] : sums) {
    if (total == T(0)) continue;
    out.shells[n] = total / detail::from_count<T>(sphere_size(spec, n));
  }
  return out;
}

/// l^1 norm of a radial function: sum_n |E_n| |value_n|.
template <class T>
double l1_norm(const FreeProductSpec& spec, const RadialFn<T>& f) {
  double total = 0.0;
  for (const auto& [n, v] : f.shells) {
    total += static_cast<double>(sphere_size(spec, n)) * detail::magnitude(v);
  }
  return total;
}

template <class T>
double l1_norm(const WordFn<T>& f) {
  double total = 0.0;
  for (const auto& [w, v] : f) total += detail::magnitude(v);
  return total;
}

/// (f * g) for radial f, g, per shell through the pair counts
/// #{x in E_a : |x^{-1} z| = b} at a representative z in E_c. OverflowError
/// when the result would reach past `max_radius`.
template <class T>
RadialFn<T> radial_convolve(const FreeProductSpec& spec, const RadialFn<T>& f,
                            const RadialFn<T>& g, int max_radius = 12) {
  const int reach = f.max_shell() + g.max_shell();
  if (reach > max_radius) {
    throw OverflowError("radial_convolve: support radius " + std::to_string(reach) +
                        " exceeds ball radius " + std::to_string(max_radius));
  }
  RadialFn<T> out;
  if (f.shells.empty() || g.shells.empty()) return out;
  for (int c = 0; c <= reach; ++c) {
    T total(0);
    for (const auto& [a, fa] : f.shells) {
      if (fa == T(0)) continue;
      // |x^{-1} z| ranges over [|a - c|, a + c] only.
      const auto counts = detail::pair_counts(spec, a, c);
      for (const auto& [b, gb] : g.shells) {
        if (b >= static_cast<int>(counts.size()) || counts[b] == 0) continue;
        total += fa * gb * detail::from_count<T>(counts[b]);
      }
    }
    if (total != T(0)) out.shells[c] = total;
  }
  return out;
}

/// (f * h)(z) = sum_x f(x) h(x^{-1} z) for finitely supported f, h, by
/// enumeration of both supports.
template <class T>
WordFn<T> convolve(const FreeProductSpec& spec, const WordFn<T>& f, const WordFn<T>& h) {
  WordFn<T> out;
  for (const auto& [x, fx] : f) {
    for (const auto& [y, hy] : h) {
      // z = x y gives x^{-1} z = y.
      const Word z = multiply(spec, x, y);
      auto it = out.find(z);
      if (it == out.end()) {
        out.emplace(z, fx * hy);
      } else {
        it->second += fx * hy;
      }
    }
  }
  return out;
}

/// |B_z| for every z in E_{|y^{-1}x|}, where
/// B_z = {(s, t) : |s| = |x|, |t| = |y|, t^{-1} s = z}. CapacityError when a
/// sphere involved exceeds the cap; DomainError past `ball_radius`.
std::map<Word, std::int64_t> bz_counts(const FreeProductSpec& spec, const Word& x,
                                       const Word& y, int ball_radius);

/// (1/|B|) sum_{(s,t) in B} h(t^{-1} s).
template <class T>
T radialize_two_point(const FreeProductSpec& spec,
                      const std::function<T(const Word&)>& h, const Word& x,
                      const Word& y, int ball_radius) {
  const auto counts = bz_counts(spec, x, y, ball_radius);
  std::int64_t total = 0;
  T sum(0);
  for (const auto& [z, count] : counts) {
    total += count;
    sum += detail::from_count<T>(count) * h(z);
  }
  return sum / detail::from_count<T>(total);
}

/// <f, phi> = sum_x f(x) phi(x) over the support of f.
template <class T>
T pairing(const WordFn<T>& f, const std::function<T(const Word&)>& phi) {
  T sum(0);
  for (const auto& [w, v] : f) sum += v * phi(w);
  return sum;
}

/// <f, phi> for radial f and a radial phi given by its shell values.
template <class T>
T pairing(const FreeProductSpec& spec, const RadialFn<T>& f, const RadialFn<T>& phi) {
  T sum(0);
  for (const auto& [n, v] : f.shells) {
    sum += detail::from_count<T>(sphere_size(spec, n)) * v * phi.at(n);
  }
  return sum;
}

/// Shell values phi_0 = 1, phi_1 = z, phi_2, ..., phi_max_shell making
/// f -> <f, phi> multiplicative on radial functions: phi_{n+1} is solved from
/// <1_{E_1} * 1_{E_n}, phi> = <1_{E_1}, phi> <1_{E_n}, phi> using the
/// convolution table.
template <class T>
RadialFn<T> character_shell_function(const FreeProductSpec& spec, const T& z,
                                     int max_shell) {
  RadialFn<T> phi;
  phi.shells[0] = T(1);
  if (max_shell >= 1) phi.shells[1] = z;
  const RadialFn<T> e1 = shell_indicator<T>(1);
  for (int n = 1; n < max_shell; ++n) {
    const RadialFn<T> prod = radial_convolve(spec, e1, shell_indicator<T>(n), n + 1);
    const T target = pairing(spec, e1, phi) * pairing(spec, shell_indicator<T>(n), phi);
    T known(0);
    for (const auto& [c, v] : prod.shells) {
      if (c == n + 1) continue;
      known += detail::from_count<T>(sphere_size(spec, c)) * v * phi.at(c);
    }
    const T lead = detail::from_count<T>(sphere_size(spec, n + 1)) * prod.at(n + 1);
    phi.shells[n + 1] = (target - known) / lead;
  }
  return phi;
}

}  // namespace rankone::tree
