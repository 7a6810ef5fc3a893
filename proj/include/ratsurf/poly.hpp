#pragma once

// Sparse multivariate polynomials over F_2 or GF(2^n).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratsurf/field.hpp"
#include "ratsurf/monomial.hpp"

namespace ratsurf {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial ring K[v_0, ..., v_{n-1}] with a fixed monomial order. Weights define the
/// grading used for homogeneity tests and pair selection; they default to 1.
template <class K>
class Ring {
 public:
  using CoeffCtx = typename Coeff<K>::Ctx;

  Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
       CoeffCtx ctx = {}, std::vector<int> weights = {})
      : names_(std::move(names)), order_(order), ctx_(ctx), weights_(std::move(weights)) {
    if (names_.size() > kMaxVars) throw RingError("at most 14 variables are supported");
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size()) throw RingError("weight vector has wrong length");
    if (order_.kind == MonomialOrder::Kind::Block &&
        (order_.block < 0 || order_.block > static_cast<int>(names_.size()))) {
      throw RingError("block size out of range");
    }
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const MonomialOrder& order() const { return order_; }
  CoeffCtx ctx() const { return ctx_; }
  const std::vector<int>& weights() const { return weights_; }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, nvars()); }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  int weighted_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < nvars(); ++i) d += weights_[i] * m.e[i];
    return d;
  }

  K zero() const { return Coeff<K>::zero(ctx_); }
  K one() const { return Coeff<K>::one(ctx_); }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    throw RingError("unknown variable '" + std::string(name) + "'");
  }

  bool same_as(const Ring& o) const {
    return names_ == o.names_ && order_ == o.order_ && ctx_ == o.ctx_ && weights_ == o.weights_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
  CoeffCtx ctx_;
  std::vector<int> weights_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex(),
                     typename Coeff<K>::Ctx ctx = {}, std::vector<int> weights = {}) {
  return std::make_shared<const Ring<K>>(std::move(names), order, ctx, std::move(weights));
}

template <class K>
struct Term {
  Monomial m;
  K c;
};

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  Poly(RingPtr<K> ring, std::vector<Term<K>> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Poly constant(RingPtr<K> ring, K c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Poly one(RingPtr<K> ring) {
    auto c = ring->one();
    return constant(std::move(ring), c);
  }
  static Poly monomial(RingPtr<K> ring, const Monomial& m, K c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Poly monomial(RingPtr<K> ring, const Monomial& m) {
    auto c = ring->one();
    return monomial(std::move(ring), m, c);
  }
  static Poly var(RingPtr<K> ring, std::size_t i) { return monomial(ring, Monomial::var(i)); }

  /// Trusted constructor: terms already sorted descending with nonzero coefficients.
  static Poly from_sorted(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Monomial& lead() const { return terms_.front().m; }
  K lead_coeff() const { return terms_.front().c; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.m.deg);
    return d;
  }

  int weighted_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.m));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = ring_->weighted_degree(terms_[0].m);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term<K>& t) { return ring_->weighted_degree(t.m) == d; });
  }

  K coeff(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.m == m) return t.c;
    }
    return ring_->zero();
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    }
    return true;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_ring(a, b);
    return Poly::from_sorted(a.ring_, merge(*a.ring_, a.terms_, b.terms_, a.ring_->one(), Monomial{}));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    check_ring(a, b);
    return Poly::from_sorted(a.ring_,
                             merge(*a.ring_, a.terms_, b.terms_, -a.ring_->one(), Monomial{}));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;
    std::vector<Term<K>> acc;
    for (const auto& t : small.terms_) {
      acc = merge(*a.ring_, acc, big.terms_, t.c, t.m);
    }
    return Poly::from_sorted(a.ring_, std::move(acc));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(K c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c = t.c * c;
    return r;
  }

  Poly mul_term(const Monomial& m, K c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.m = t.m * m;
      t.c = t.c * c;
    }
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(lead_coeff().inv());
  }

  Poly pow(unsigned k) const {
    Poly r = Poly::one(ring_);
    Poly b = *this;
    while (k != 0) {
      if (k & 1u) r = r * b;
      k >>= 1;
      if (k != 0) b = b * b;
    }
    return r;
  }

  /// Value at a point given as one coefficient per variable.
  K eval(const std::vector<K>& point) const {
    if (point.size() != ring_->nvars()) throw RingError("point has wrong dimension");
    K acc = ring_->zero();
    std::vector<std::vector<K>> powers(point.size());
    for (const auto& t : terms_) {
      K v = t.c;
      for (std::size_t i = 0; i < point.size(); ++i) {
        const int e = t.m.e[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(ring_->one());
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[i]);
        v = v * pw[e];
      }
      acc = acc + v;
    }
    return acc;
  }

  /// Ring homomorphism sending variable i to images[i] (all in the same target ring).
  Poly<K> subst(const std::vector<Poly<K>>& images, const RingPtr<K>& target) const {
    if (images.size() != ring_->nvars()) throw RingError("substitution needs one image per variable");
    for (const auto& im : images) {
      if (im.ring_ && !im.ring_->same_as(*target)) throw RingError("images lie in different rings");
    }
    std::vector<std::vector<Poly<K>>> powers(images.size());
    Poly<K> acc(target);
    for (const auto& t : terms_) {
      Poly<K> v = Poly<K>::constant(target, t.c);
      for (std::size_t i = 0; i < images.size(); ++i) {
        const int e = t.m.e[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Poly<K>::one(target));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
        v = v * pw[e];
      }
      acc += v;
    }
    return acc;
  }

  /// Same polynomial in a ring with the same coefficients but possibly other variable
  /// positions or order: variable i maps to variable var_map[i] of target.
  Poly<K> relabel(const RingPtr<K>& target, const std::vector<std::size_t>& var_map) const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.m.e[i] == 0) continue;
        m.e[var_map[i]] = t.m.e[i];
      }
      m.deg = t.m.deg;
      out.push_back({m, t.c});
    }
    return Poly<K>(target, std::move(out));
  }

  /// Reinterprets in a ring with identical variables and coefficients (e.g. another order).
  Poly<K> in_ring(const RingPtr<K>& target) const {
    if (target->nvars() != ring_->nvars()) throw RingError("variable count mismatch");
    return Poly<K>(target, terms_);
  }

  /// Hasse derivative D^alpha: x^beta -> C(beta, alpha) x^(beta - alpha), binomials mod 2.
  Poly hasse(const Monomial& alpha) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      if (!alpha.divides(t.m) || !multi_binom_mod2(t.m, alpha)) continue;
      out.push_back({alpha.quotient_of(t.m), t.c});
    }
    return Poly(ring_, std::move(out));
  }

  /// Ordinary partial derivative; in characteristic 2 equal to the first Hasse derivative.
  Poly partial(std::size_t var) const { return hasse(Monomial::var(var)); }

  /// Part of weighted degree d.
  Poly homogeneous_part(int d) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      if (ring_->weighted_degree(t.m) == d) out.push_back(t);
    }
    return Poly::from_sorted(ring_, std::move(out));
  }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      if (!out.empty()) out += '+';
      std::string mono;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.m.e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += ring_->name(i);
        if (t.m.e[i] > 1) mono += '^' + std::to_string(t.m.e[i]);
      }
      if constexpr (Coeff<K>::is_prime_field) {
        out += mono.empty() ? "1" : mono;
      } else {
        if (t.c.is_one()) {
          out += mono.empty() ? "1" : mono;
        } else {
          out += '(' + t.c.render() + ')';
          if (!mono.empty()) out += '*' + mono;
        }
      }
    }
    return out;
  }

  /// Merge of sorted term lists: a + c * m * b.
  static std::vector<Term<K>> merge(const Ring<K>& ring, const std::vector<Term<K>>& a,
                                    const std::vector<Term<K>>& b, K c, const Monomial& m) {
    std::vector<Term<K>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const bool shift = !m.is_one();
    while (i < a.size() && j < b.size()) {
      Monomial bm = shift ? b[j].m * m : b[j].m;
      const int cmp = ring.compare(a[i].m, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({bm, b[j++].c * c});
      } else {
        K s = a[i].c + b[j].c * c;
        if (!s.is_zero()) out.push_back({a[i].m, s});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({shift ? b[j].m * m : b[j].m, b[j].c * c});
    return out;
  }

 private:
  static void check_ring(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) {
      throw RingError("polynomials belong to different rings");
    }
  }

  void normalize() {
    const Ring<K>& r = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<K>& x, const Term<K>& y) { return r.greater(x.m, y.m); });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = out.back().c + t.c;
        if (out.back().c.is_zero()) out.pop_back();
      } else if (!t.c.is_zero()) {
        out.push_back(t);
      }
    }
    terms_ = std::move(out);
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

/// All monomials of total degree d in the ring's variables, descending in the ring's order.
template <class K>
std::vector<Monomial> monomials_of_degree(const Ring<K>& ring, int d) {
  std::vector<Monomial> out;
  const std::size_t n = ring.nvars();
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(n, 0);
  // enumerate compositions of d into n parts
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial::from(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

/// Parses a polynomial over F_2 written with the ring's variable names, e.g. "x^2*y+z+1".
/// Coefficient 1 is implicit; a repeated term cancels.
inline Poly<F2> parse_poly(const RingPtr<F2>& ring, std::string_view text) {
  std::vector<Term<F2>> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto read_int = [&] {
    skip();
    if (i >= text.size() || text[i] < '0' || text[i] > '9') throw ParseError("expected integer", i);
    int v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
    return v;
  };
  skip();
  if (i == text.size()) throw ParseError("empty polynomial", i);
  while (true) {
    Monomial m;
    bool zero = false;
    bool any = false;
    while (true) {
      skip();
      if (i < text.size() && (text[i] == '0' || text[i] == '1')) {
        zero = zero || text[i] == '0';
        ++i;
      } else {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        if (start == i) throw ParseError("expected variable or constant", i);
        const std::size_t v = ring->index_of(text.substr(start, i - start));
        int e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = read_int();
        }
        m = m * Monomial::var(v, e);
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (any && !zero) terms.push_back({m, F2{true}});
    skip();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-') throw ParseError("expected '+'", i);
    ++i;
  }
  return Poly<F2>(ring, std::move(terms));
}

/// Maps a polynomial over F_2 into a ring over GF(2^n) with the same variables.
template <class K>
Poly<K> lift_coefficients(const Poly<F2>& p, const RingPtr<K>& target) {
  std::vector<Term<K>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.m, target->one()});
  return Poly<K>(target, std::move(out));
}

}  // namespace ratsurf
