#pragma once

// Arithmetic in F_2 and in the extensions GF(2^n) = F_2[t]/(m(t)), n <= 63.
// Elements are bitvectors of length n holding the coefficients of 1, t, ..., t^(n-1).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratsurf {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace gf2x {

/// Carry-less product of two polynomials over F_2 of degree < 64.
inline unsigned __int128 clmul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = 0;
  unsigned __int128 aa = a;
  while (b != 0) {
    if (b & 1u) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return r;
}

inline int degree(unsigned __int128 p) {
  if (p == 0) return -1;
  auto hi = static_cast<std::uint64_t>(p >> 64);
  if (hi != 0) return 127 - std::countl_zero(hi);
  return 63 - std::countl_zero(static_cast<std::uint64_t>(p));
}

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

/// Remainder of p modulo m (m != 0, deg m <= 63).
inline std::uint64_t mod(unsigned __int128 p, std::uint64_t m) {
  const int dm = degree(m);
  for (int d = degree(p); d >= dm; d = degree(p)) {
    p ^= static_cast<unsigned __int128>(m) << (d - dm);
  }
  return static_cast<std::uint64_t>(p);
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return mod(clmul(a, b), m);
}

/// Exact quotient a / b over F_2[t].
inline std::uint64_t div(std::uint64_t a, std::uint64_t b) {
  std::uint64_t q = 0;
  const int db = degree(b);
  for (int d = degree(a); d >= db; d = degree(a)) {
    q |= std::uint64_t{1} << (d - db);
    a ^= b << (d - db);
  }
  return q;
}

/// Nontrivial factor of m, or nullopt when m is irreducible (deg m >= 1).
/// Square-free part first, then distinct-degree gcds with t^(2^d) - t, then trace splitting
/// for products of equal-degree factors.
inline std::optional<std::uint64_t> find_factor(std::uint64_t m) {
  const int n = degree(m);
  if (n <= 0) throw FieldError("modulus must have positive degree");
  if (n == 1) return std::nullopt;
  if ((m & 1u) == 0) return std::uint64_t{2};  // t divides m
  // derivative: odd-degree terms shifted down
  const std::uint64_t deriv = (m >> 1) & 0x5555555555555555ull;
  if (deriv == 0) {
    std::uint64_t root = 0;  // m = h^2
    for (int i = 0; 2 * i <= n; ++i) root |= ((m >> (2 * i)) & 1u) << i;
    return root;
  }
  if (std::uint64_t g = gcd(m, deriv); g != 1) return g;
  std::uint64_t x = 2;
  for (int d = 1; 2 * d <= n; ++d) {
    x = mulmod(x, x, m);
    const std::uint64_t g = gcd(x ^ 2u, m);
    if (g == 1) continue;
    if (g != m) return g;
    // m is a product of distinct degree-d factors
    for (std::uint64_t a = 2;; ++a) {
      std::uint64_t tr = 0, cur = mod(a, m);
      for (int i = 0; i < d; ++i) {
        tr ^= cur;
        cur = mulmod(cur, cur, m);
      }
      const std::uint64_t h = gcd(m, tr);
      if (h != 1 && h != m) return h;
    }
  }
  return std::nullopt;
}

inline bool is_irreducible(std::uint64_t m) { return degree(m) >= 1 && !find_factor(m); }

/// Renders a polynomial over F_2 in the variable `var`, descending powers.
inline std::string render(std::uint64_t p, char var = 't') {
  if (p == 0) return "0";
  std::string out;
  for (int i = degree(p); i >= 0; --i) {
    if (((p >> i) & 1u) == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else {
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

}  // namespace gf2x

/// Immutable description of GF(2^n). Obtain shared instances via field_new().
class FieldCtx {
 public:
  FieldCtx(int n, std::uint64_t modulus) : n_(n), modulus_(modulus) {
    if (n < 1 || n > 63) throw FieldError("extension degree must lie in [1, 63]");
    if (gf2x::degree(modulus) != n) {
      throw FieldError("modulus " + gf2x::render(modulus) + " does not have degree " +
                       std::to_string(n));
    }
    if (auto f = gf2x::find_factor(modulus)) {
      throw FieldError("modulus " + gf2x::render(modulus) + " is reducible: divisible by " +
                       gf2x::render(*f));
    }
  }
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  int degree() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t mask() const { return n_ == 64 ? ~0ull : ((std::uint64_t{1} << n_) - 1); }
  std::uint64_t order() const { return std::uint64_t{1} << n_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return gf2x::mulmod(a, b, modulus_); }
  std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1u) r = mul(r, a);
      a = sqr(a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw FieldError("inverse of zero");
    // a^(2^n - 2)
    return pow(a, order() - 2);
  }

  /// t^e reduced; e may exceed the modulus degree.
  std::uint64_t t_pow(std::uint64_t e) const { return pow(gf2x::mod(static_cast<unsigned __int128>(2), modulus_), e); }

  std::string render(std::uint64_t a) const { return gf2x::render(a); }

  /// Parses "0", "1", "t", "t^k" or '+'-joined sums thereof; whitespace is ignored.
  std::uint64_t parse(std::string_view text) const {
    std::uint64_t acc = 0;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty field element", i);
    while (true) {
      skip();
      if (i >= text.size()) throw ParseError("expected term", i);
      std::uint64_t term = 0;
      if (text[i] == 't') {
        ++i;
        std::uint64_t e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          if (i >= text.size() || text[i] < '0' || text[i] > '9') {
            throw ParseError("expected exponent", i);
          }
          e = 0;
          while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            if (e > (1ull << 40)) throw ParseError("exponent too large", i);
            e = e * 10 + static_cast<std::uint64_t>(text[i] - '0');
            ++i;
          }
        }
        term = t_pow(e);
      } else if (text[i] == '0' || text[i] == '1') {
        term = text[i] == '1' ? 1 : 0;
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
      }
      acc ^= term;
      skip();
      if (i == text.size()) break;
      if (text[i] != '+') throw ParseError("expected '+'", i);
      ++i;
    }
    return acc;
  }

 private:
  int n_;
  std::uint64_t modulus_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

namespace detail {

inline std::uint64_t smallest_irreducible(int n) {
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t low = 0; low < top; ++low) {
    std::uint64_t m = top | low;
    if (gf2x::is_irreducible(m)) return m;
  }
  throw FieldError("no irreducible polynomial of degree " + std::to_string(n));
}

}  // namespace detail

// t^14+t^13+t^11+t^10+t^8+t^6+t^4+t+1
inline constexpr std::uint64_t kModulus14 = 0b110110101010011;
// t^5+t^3+t^2+t+1
inline constexpr std::uint64_t kModulus5 = 0b101111;

/// Default modulus for GF(2^n): the fixed moduli for n = 14 and n = 5, otherwise the
/// lexicographically smallest irreducible polynomial of degree n.
inline std::uint64_t default_modulus(int n) {
  if (n == 14) return kModulus14;
  if (n == 5) return kModulus5;
  return detail::smallest_irreducible(n);
}

/// Returns a shared context; contexts with equal (n, modulus) are interned, so pointer
/// equality is context equality.
inline FieldPtr field_new(int n, std::optional<std::uint64_t> modulus = std::nullopt) {
  static std::mutex mu;
  static std::map<std::pair<int, std::uint64_t>, FieldPtr> cache;
  if (n < 1 || n > 63) throw FieldError("extension degree must lie in [1, 63]");
  const std::uint64_t m = modulus ? *modulus : default_modulus(n);
  std::lock_guard lock(mu);
  auto key = std::make_pair(n, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto ctx = std::make_shared<const FieldCtx>(n, m);
  cache.emplace(key, ctx);
  return ctx;
}

/// Parses a modulus given as a polynomial in t over F_2 ("t^5+t^3+t^2+t+1").
inline std::uint64_t parse_modulus(std::string_view text) {
  std::uint64_t acc = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    int e = 0;
    if (text[i] == 't') {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || text[i] < '0' || text[i] > '9') throw ParseError("expected exponent", i);
        e = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') e = e * 10 + (text[i++] - '0');
      }
    } else if (text[i] == '1') {
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    if (e > 63) throw ParseError("modulus degree exceeds 63", i);
    acc ^= std::uint64_t{1} << e;
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size()) {
      if (text[i] != '+') throw ParseError("expected '+'", i);
      ++i;
    }
  }
  return acc;
}

/// Element of GF(2^n). Holds a non-owning pointer to its (interned) context.
class FieldElem {
 public:
  using Ctx = const FieldCtx*;

  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, std::uint64_t bits) : ctx_(ctx), bits_(bits & ctx->mask()) {}

  static FieldElem zero(const FieldCtx* ctx) { return {ctx, 0}; }
  static FieldElem one(const FieldCtx* ctx) { return {ctx, 1}; }
  static FieldElem gen(const FieldCtx* ctx) { return {ctx, ctx->t_pow(1)}; }

  const FieldCtx* ctx() const { return ctx_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }
  bool bit(int i) const { return ((bits_ >> i) & 1u) != 0; }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    check_same(a, b);
    return FieldElem(a.ctx_, a.bits_ ^ b.bits_, raw_tag{});
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) { return a + b; }
  FieldElem operator-() const { return *this; }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    check_same(a, b);
    return FieldElem(a.ctx_, a.ctx_->mul(a.bits_, b.bits_), raw_tag{});
  }
  FieldElem& operator+=(FieldElem o) { return *this = *this + o; }
  FieldElem& operator-=(FieldElem o) { return *this = *this + o; }
  FieldElem& operator*=(FieldElem o) { return *this = *this * o; }
  friend bool operator==(FieldElem a, FieldElem b) { return a.ctx_ == b.ctx_ && a.bits_ == b.bits_; }

  FieldElem inv() const {
    if (bits_ == 0) throw FieldError("inverse of zero");
    return FieldElem(ctx_, ctx_->inv(bits_), raw_tag{});
  }
  FieldElem pow(std::uint64_t e) const { return FieldElem(ctx_, ctx_->pow(bits_, e), raw_tag{}); }
  FieldElem frobenius() const { return FieldElem(ctx_, ctx_->sqr(bits_), raw_tag{}); }

  std::string render() const { return ctx_->render(bits_); }

 private:
  struct raw_tag {};
  FieldElem(const FieldCtx* ctx, std::uint64_t bits, raw_tag) : ctx_(ctx), bits_(bits) {}
  static void check_same(FieldElem a, FieldElem b) {
    if (a.ctx_ != b.ctx_) throw FieldError("operands belong to different fields");
  }

  const FieldCtx* ctx_ = nullptr;
  std::uint64_t bits_ = 0;
};

inline FieldElem parse_elem(const FieldCtx& ctx, std::string_view text) {
  return FieldElem(&ctx, ctx.parse(text));
}

inline FieldElem frobenius(FieldElem x) { return x.frobenius(); }

/// The prime field as a coefficient type. Every stored coefficient of a Poly<F2> is 1.
struct F2 {
  struct Tag {
    friend bool operator==(Tag, Tag) { return true; }
  };
  using Ctx = Tag;

  bool v = false;

  static F2 zero(Ctx = {}) { return {false}; }
  static F2 one(Ctx = {}) { return {true}; }
  Ctx ctx() const { return {}; }
  bool is_zero() const { return !v; }
  bool is_one() const { return v; }
  friend F2 operator+(F2 a, F2 b) { return {a.v != b.v}; }
  friend F2 operator-(F2 a, F2 b) { return {a.v != b.v}; }
  F2 operator-() const { return *this; }
  friend F2 operator*(F2 a, F2 b) { return {a.v && b.v}; }
  F2& operator+=(F2 o) { return *this = *this + o; }
  F2& operator-=(F2 o) { return *this = *this + o; }
  F2& operator*=(F2 o) { return *this = *this * o; }
  friend bool operator==(F2 a, F2 b) { return a.v == b.v; }
  F2 inv() const {
    if (!v) throw FieldError("inverse of zero");
    return *this;
  }
  std::string render() const { return v ? "1" : "0"; }
};

/// Coefficient-type glue used by the polynomial templates.
template <class K>
struct Coeff;

template <>
struct Coeff<F2> {
  using Ctx = F2::Ctx;
  static F2 zero(Ctx) { return F2{false}; }
  static F2 one(Ctx) { return F2{true}; }
  static F2 from_bit(Ctx, bool b) { return F2{b}; }
  static constexpr bool is_prime_field = true;
};

template <>
struct Coeff<FieldElem> {
  using Ctx = const FieldCtx*;
  static FieldElem zero(Ctx c) { return FieldElem::zero(c); }
  static FieldElem one(Ctx c) { return FieldElem::one(c); }
  static FieldElem from_bit(Ctx c, bool b) { return FieldElem(c, b ? 1 : 0); }
  static constexpr bool is_prime_field = false;
};

/// Field embedding GF(2^a) -> GF(2^b) for a | b, sending t to a root of the source
/// modulus in the target field. The root is found by trace splitting.
class FieldEmbedding {
 public:
  FieldEmbedding(const FieldCtx& from, const FieldCtx& to);
  FieldElem operator()(FieldElem x) const;

 private:
  const FieldCtx* from_;
  const FieldCtx* to_;
  std::vector<std::uint64_t> images_;  // image of t^i
};

namespace detail {

// Dense univariate polynomials over a GF(2^n), low degree first; used for root finding.
using UPoly = std::vector<std::uint64_t>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly umod(UPoly a, const UPoly& b, const FieldCtx& f) {
  trim(a);
  const std::uint64_t lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint64_t c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] ^= f.mul(c, b[i]);
    trim(a);
  }
  return a;
}

inline UPoly umulmod(const UPoly& a, const UPoly& b, const UPoly& m, const FieldCtx& f) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= f.mul(a[i], b[j]);
  }
  return umod(std::move(r), m, f);
}

inline UPoly ugcd(UPoly a, UPoly b, const FieldCtx& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

inline UPoly udiv(UPoly a, const UPoly& b, const FieldCtx& f) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t li = f.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint64_t c = f.mul(a.back(), li);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] ^= f.mul(c, b[i]);
    trim(a);
  }
  return q;
}

/// A root in `f` of the squarefree polynomial p that splits into linear factors over f.
/// Distinct roots are separated by Tr(delta * x) for some delta in the basis 1, t, ..., t^(n-1).
inline std::uint64_t find_root(UPoly p, const FieldCtx& f) {
  trim(p);
  int k = 0;
  int stalls = 0;
  while (p.size() > 2) {
    const std::uint64_t delta = f.t_pow(static_cast<std::uint64_t>(k));
    k = (k + 1) % f.degree();
    UPoly cur = umod(UPoly{0, delta}, p, f);
    UPoly acc = cur;
    for (int i = 1; i < f.degree(); ++i) {
      cur = umulmod(cur, cur, p, f);
      acc.resize(std::max(acc.size(), cur.size()), 0);
      for (std::size_t j = 0; j < cur.size(); ++j) acc[j] ^= cur[j];
      trim(acc);
    }
    UPoly g = ugcd(p, acc, f);
    if (g.size() > 1 && g.size() < p.size()) {
      UPoly h = udiv(p, g, f);
      p = g.size() <= h.size() ? std::move(g) : std::move(h);
      stalls = 0;
    } else if (++stalls > f.degree()) {
      throw FieldError("polynomial does not split into distinct linear factors");
    }
  }
  return f.mul(p[0], f.inv(p[1]));
}

}  // namespace detail

inline FieldEmbedding::FieldEmbedding(const FieldCtx& from, const FieldCtx& to)
    : from_(&from), to_(&to) {
  if (to.degree() % from.degree() != 0) {
    throw FieldError("GF(2^" + std::to_string(from.degree()) + ") does not embed in GF(2^" +
                     std::to_string(to.degree()) + ")");
  }
  std::uint64_t root = 0;
  if (from.degree() == 1) {
    root = 1;
  } else if (&from == &to) {
    root = to.t_pow(1);
  } else {
    detail::UPoly p(from.degree() + 1, 0);
    for (int i = 0; i <= from.degree(); ++i) p[i] = (from.modulus() >> i) & 1u;
    root = detail::find_root(p, to);
  }
  images_.resize(from.degree());
  std::uint64_t acc = 1;
  for (int i = 0; i < from.degree(); ++i) {
    images_[i] = acc;
    acc = to.mul(acc, root);
  }
}

inline FieldElem FieldEmbedding::operator()(FieldElem x) const {
  if (x.ctx() != from_) throw FieldError("element is not in the embedding's source field");
  std::uint64_t r = 0;
  for (int i = 0; i < from_->degree(); ++i) {
    if (x.bit(i)) r ^= images_[i];
  }
  return FieldElem(to_, r);
}

}  // namespace ratsurf
