#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratsurf {

inline constexpr std::size_t kMaxVars = 14;

/// Exponent vector with cached total degree. Exponents are 8-bit; products that would
/// overflow throw instead of wrapping.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  Monomial() = default;

  static Monomial from(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 255) throw std::out_of_range("exponent out of range");
      m.e[i] = static_cast<std::uint8_t>(exps[i]);
      m.deg = static_cast<std::uint16_t>(m.deg + exps[i]);
    }
    return m;
  }

  static Monomial var(std::size_t i, int power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  int operator[](std::size_t i) const { return e[i]; }
  bool is_one() const { return deg == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned s = unsigned{a.e[i]} + b.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
  }

  /// True iff this divides b.
  bool divides(const Monomial& b) const {
    if (deg > b.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] > b.e[i]) return false;
    }
    return true;
  }

  /// b / this; requires divides(b).
  Monomial quotient_of(const Monomial& b) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - e[i]);
    r.deg = static_cast<std::uint16_t>(b.deg - deg);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(a.e[i], b.e[i]);
      r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::min(a.e[i], b.e[i]);
      r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a.e[i] != 0 && b.e[i] != 0) return false;
    }
    return true;
  }

  /// Bit i set iff variable i occurs; a necessary condition filter for divisibility.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] != 0) m |= 1u << i;
    }
    return m;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// grevlex, lex, or block(k): grevlex on the first k variables dominates grevlex on the rest.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  int block = 0;

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block_order(int k) { return {Kind::Block, k}; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::Block || a.block == b.block);
  }
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.block < b.block;
  }

  std::string name() const {
    switch (kind) {
      case Kind::Grevlex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Block: return "block(" + std::to_string(block) + ")";
    }
    return "?";
  }

  /// Three-way comparison of a and b over the first nvars variables: 1 if a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
    switch (kind) {
      case Kind::Grevlex:
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        return revlex(a, b, 0, nvars);
      case Kind::Lex:
        for (std::size_t i = 0; i < nvars; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case Kind::Block: {
        const auto k = static_cast<std::size_t>(block);
        if (int c = graded_revlex(a, b, 0, k); c != 0) return c;
        return graded_revlex(a, b, k, nvars);
      }
    }
    return 0;
  }

 private:
  static int revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
  static int graded_revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    return revlex(a, b, lo, hi);
  }
};

/// Binomial coefficient C(m, k) mod 2 via Lucas: 1 iff the bits of k are a submask of m's.
constexpr bool binom_mod2(unsigned m, unsigned k) { return k <= m && (k & ~m) == 0; }

/// Componentwise product of binomials mod 2 for exponent vectors.
inline bool multi_binom_mod2(const Monomial& top, const Monomial& bottom) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!binom_mod2(top.e[i], bottom.e[i])) return false;
  }
  return true;
}

/// Coefficient relating composed Hasse derivatives: D^b D^a = C(a+b, a) D^(a+b), mod 2.
inline bool hasse_composition_check(const Monomial& alpha, const Monomial& beta) {
  return multi_binom_mod2(alpha * beta, alpha);
}

}  // namespace ratsurf
