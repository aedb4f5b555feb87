#include "rankone/tree_radial.hpp"

#include <limits>
#include <sstream>

namespace rankone::tree {

namespace {

bool cancels(const FreeProductSpec& spec, const Letter& a, const Letter& b) {
  if (a.factor != b.factor) return false;
  return spec.is_involution(a.factor) || a.exponent == -b.exponent;
}

void check_letter(const FreeProductSpec& spec, const Letter& l) {
  if (l.factor < 0 || l.factor >= spec.factors()) {
    throw DomainError("letter factor " + std::to_string(l.factor) + " out of range");
  }
  if (spec.is_involution(l.factor) ? l.exponent != 1
                                   : (l.exponent != 1 && l.exponent != -1)) {
    throw DomainError("letter exponent must be +1 (Z/2Z) or +-1 (Z)");
  }
}

void push_reduced(const FreeProductSpec& spec, std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && cancels(spec, out.back(), l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

FreeProductSpec::FreeProductSpec(int M_, int N_, std::int64_t cap)
    : M(M_), N(N_), sphere_cap(cap) {
  if (M < 0 || N < 0) throw DomainError("free product: M and N must be nonnegative");
  if (M + 2 * N < 3) throw DomainError("free product: need M + 2N >= 3");
  if (cap < 1) throw DomainError("free product: sphere cap must be positive");
}

FreeProductSpec parse_free_product(const std::string& text) {
  std::istringstream in(text);
  int m = -1;
  int n = -1;
  char comma = 0;
  if (!(in >> m >> comma >> n) || comma != ',' || !(in >> std::ws).eof()) {
    throw DomainError("free product must be given as M,N (got '" + text + "')");
  }
  return FreeProductSpec(m, n);
}

Word::Word(const FreeProductSpec& spec, std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    check_letter(spec, l);
    push_reduced(spec, letters_, l);
  }
}

std::string to_string(const FreeProductSpec& spec, const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (spec.is_involution(l.factor)) {
      out += "a" + std::to_string(l.factor + 1);
    } else {
      out += "b" + std::to_string(l.factor - spec.M + 1);
      if (l.exponent < 0) out += "'";
    }
  }
  return out;
}

std::vector<Letter> generators(const FreeProductSpec& spec) {
  std::vector<Letter> out;
  for (int i = 0; i < spec.factors(); ++i) {
    if (spec.is_involution(i)) {
      out.push_back({i, 1});
    } else {
      out.push_back({i, -1});
      out.push_back({i, 1});
    }
  }
  return out;
}

Word multiply(const FreeProductSpec& spec, const Word& a, const Word& b) {
  Word out = a;
  for (const Letter& l : b.letters_) push_reduced(spec, out.letters_, l);
  return out;
}

Word inverse(const FreeProductSpec& spec, const Word& w) {
  Word out;
  out.letters_.reserve(w.letters_.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    out.letters_.push_back(
        {it->factor, spec.is_involution(it->factor) ? 1 : -it->exponent});
  }
  return out;
}

std::int64_t sphere_size(const FreeProductSpec& spec, int n) {
  if (n < 0) throw DomainError("sphere_size: n must be nonnegative");
  if (n == 0) return 1;
  const std::int64_t q = spec.q();
  std::int64_t size = q + 1;
  for (int i = 1; i < n; ++i) {
    if (size > std::numeric_limits<std::int64_t>::max() / q) {
      throw OverflowError("sphere_size: |E_n| exceeds 64-bit range");
    }
    size *= q;
  }
  return size;
}

std::vector<Word> enumerate_sphere(const FreeProductSpec& spec, int n) {
  if (n < 0) throw DomainError("enumerate_sphere: n must be nonnegative");
  for (int k = 0; k <= n; ++k) {
    if (sphere_size(spec, k) > spec.sphere_cap) {
      throw CapacityError("enumerate_sphere: |E_" + std::to_string(k) + "| = " +
                          std::to_string(sphere_size(spec, k)) + " exceeds cap " +
                          std::to_string(spec.sphere_cap));
    }
  }
  const auto gens = generators(spec);
  std::vector<Word> layer{Word::identity()};
  for (int k = 0; k < n; ++k) {
    std::vector<Word> next;
    next.reserve(static_cast<std::size_t>(sphere_size(spec, k + 1)));
    for (const Word& w : layer) {
      for (const Letter& g : gens) {
        if (!w.is_identity() && cancels(spec, w.letters().back(), g)) continue;
        std::vector<Letter> letters = w.letters();
        letters.push_back(g);
        next.emplace_back(spec, std::move(letters));
      }
    }
    layer = std::move(next);
  }
  return layer;
}

Word representative(const FreeProductSpec& spec, int n) {
  if (n < 0) throw DomainError("representative: n must be nonnegative");
  const auto gens = generators(spec);
  std::vector<Letter> letters;
  for (int k = 0; k < n; ++k) {
    for (const Letter& g : gens) {
      if (letters.empty() || !cancels(spec, letters.back(), g)) {
        letters.push_back(g);
        break;
      }
    }
  }
  return Word(spec, std::move(letters));
}

namespace detail {

std::vector<std::int64_t> pair_counts(const FreeProductSpec& spec, int a, int c) {
  const Word z = representative(spec, c);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(a + c + 1), 0);
  for (const Word& x : enumerate_sphere(spec, a)) {
    ++counts[static_cast<std::size_t>(multiply(spec, inverse(spec, x), z).length())];
  }
  return counts;
}

}  // namespace detail

std::map<Word, std::int64_t> bz_counts(const FreeProductSpec& spec, const Word& x,
                                       const Word& y, int ball_radius) {
  const Word yx = multiply(spec, inverse(spec, y), x);
  if (x.length() > ball_radius || y.length() > ball_radius || yx.length() > ball_radius) {
    throw DomainError("bz_counts: |x|, |y| and |y^{-1}x| must lie in the ball");
  }
  const auto ss = enumerate_sphere(spec, x.length());
  const auto ts = enumerate_sphere(spec, y.length());
  std::map<Word, std::int64_t> out;
  // Every (s, t) in E_|x| x E_|y| with |t^{-1} s| = |y^{-1} x| lands in B_{t^{-1} s}.
  for (const Word& t : ts) {
    const Word t_inv = inverse(spec, t);
    for (const Word& s : ss) {
      Word z = multiply(spec, t_inv, s);
      if (z.length() == yx.length()) ++out[std::move(z)];
    }
  }
  if (static_cast<std::int64_t>(out.size()) < sphere_size(spec, yx.length())) {
    for (const Word& z : enumerate_sphere(spec, yx.length())) out.emplace(z, 0);
  }
  return out;
}

}  // namespace rankone::tree
