#pragma once

// Hilbert series numerators of monomial ideals and the derived projective invariants
// (dimension, codimension, degree, genera) of homogeneous ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratsurf/groebner.hpp"

namespace ratsurf {

/// Integer polynomial in tau, low degree first.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline IntPoly shift(const IntPoly& a, int k) {
  if (a.empty()) return a;
  IntPoly r(a.size() + static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(k)] = a[i];
  return r;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Removes generators divisible by another; sorts canonically.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

struct MonoVecLess {
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].e != b[i].e) return a[i].e < b[i].e;
    }
    return false;
  }
};

class HilbertRecursion {
 public:
  explicit HilbertRecursion(std::size_t nvars) : nvars_(nvars) {}

  /// Numerator N with HS(R/M) = N / (1 - tau)^nvars, for minimalized generators.
  IntPoly numerator(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    IntPoly result;
    // base case: pairwise coprime generators give prod (1 - tau^deg)
    bool pairwise_coprime = true;
    Monomial seen;
    for (const auto& g : gens) {
      if (!coprime(seen, g)) {
        pairwise_coprime = false;
        break;
      }
      seen = seen * g;
    }
    if (pairwise_coprime) {
      result = {1};
      for (const auto& g : gens) {
        IntPoly f(static_cast<std::size_t>(g.deg) + 1, 0);
        f[0] = 1;
        f[g.deg] -= 1;
        result = mul(result, f);
      }
    } else {
      // pivot: the variable occurring in most generators, raised to the smallest of its
      // positive exponents among generators that are not pure powers
      std::vector<int> count(nvars_, 0);
      for (const auto& g : gens) {
        int support = 0;
        for (std::size_t v = 0; v < nvars_; ++v) support += g.e[v] != 0;
        if (support < 2) continue;
        for (std::size_t v = 0; v < nvars_; ++v) count[v] += g.e[v] != 0;
      }
      std::size_t var = 0;
      for (std::size_t v = 1; v < nvars_; ++v) {
        if (count[v] > count[var]) var = v;
      }
      int e = 255;
      for (const auto& g : gens) {
        int support = 0;
        for (std::size_t v = 0; v < nvars_; ++v) support += g.e[v] != 0;
        if (support >= 2 && g.e[var] != 0) e = std::min<int>(e, g.e[var]);
      }
      const Monomial pivot = Monomial::var(var, e);
      // HS(M) = HS(M + (p)) + tau^deg(p) HS(M : p)
      std::vector<Monomial> plus = gens;
      plus.push_back(pivot);
      std::vector<Monomial> colon;
      colon.reserve(gens.size());
      for (const auto& g : gens) {
        Monomial q;
        for (std::size_t v = 0; v < nvars_; ++v) {
          q.e[v] = static_cast<std::uint8_t>(v == var ? std::max(0, g.e[v] - e) : g.e[v]);
          q.deg = static_cast<std::uint16_t>(q.deg + q.e[v]);
        }
        colon.push_back(q);
      }
      result = add(numerator(minimalize(std::move(plus))), shift(numerator(minimalize(std::move(colon))), e));
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  std::size_t nvars_;
  std::map<std::vector<Monomial>, IntPoly, MonoVecLess> memo_;
};

/// Binomial polynomial C(x, r) evaluated at an integer x (r >= 0): x(x-1)...(x-r+1)/r!.
inline std::int64_t binom_poly(std::int64_t x, int r) {
  if (r < 0) return 0;
  // exact: successive products of consecutive integers stay divisible
  __int128 acc = 1;
  for (int i = 0; i < r; ++i) {
    acc = acc * (x - i) / (i + 1);
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace detail

/// Hilbert series numerator N(tau) of R/M, HS = N / (1 - tau)^nvars.
inline IntPoly hilbert_series_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  detail::HilbertRecursion rec(nvars);
  return rec.numerator(detail::minimalize(gens));
}

/// Hilbert polynomial stored as HS = Q(tau) / (1 - tau)^D with Q(1) != 0; evaluation uses
/// P(k) = sum_i q_i C(k - i + D - 1, D - 1), exact over the integers.
class HilbertPoly {
 public:
  HilbertPoly() = default;
  HilbertPoly(IntPoly reduced_numerator, int pole_order) : q_(std::move(reduced_numerator)), pole_(pole_order) {}

  /// Pole order D at tau = 1 of the Hilbert series (affine dimension of R/I).
  int pole_order() const { return pole_; }
  /// Projective dimension; -1 for the empty scheme.
  int dimension() const { return pole_ - 1; }
  /// Q(1): the degree of the scheme (0 for the empty scheme).
  std::int64_t degree() const {
    if (pole_ == 0) return 0;
    std::int64_t s = 0;
    for (auto c : q_) s += c;
    return s;
  }
  const IntPoly& reduced_numerator() const { return q_; }

  std::int64_t operator()(std::int64_t k) const {
    if (pole_ == 0) return 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < q_.size(); ++i) {
      s += q_[i] * detail::binom_poly(k - static_cast<std::int64_t>(i) + pole_ - 1, pole_ - 1);
    }
    return s;
  }

  /// Hilbert function value (for every k, not only large k) from the full series.
  std::int64_t series_coeff(std::int64_t k) const {
    if (k < 0) return 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < q_.size(); ++i) {
      const std::int64_t m = k - static_cast<std::int64_t>(i);
      if (m < 0) continue;
      s += pole_ == 0 ? (m == 0 ? q_[i] : 0) : q_[i] * detail::binom_poly(m + pole_ - 1, pole_ - 1);
    }
    return s;
  }

  /// g_0..g_n with P_0 = P, P_i(tau) = P_{i-1}(tau) - P_{i-1}(tau - 1) and
  /// g_i = (-1)^(n-i) (P_i(0) - 1). For a surface, g_1 is the sectional genus.
  std::vector<std::int64_t> genera() const {
    const int n = dimension();
    std::vector<std::int64_t> out;
    for (int i = 0; i <= n; ++i) {
      // P_i(0) = sum_j (-1)^j C(i, j) P(-j)
      std::int64_t v = 0;
      for (int j = 0; j <= i; ++j) {
        const std::int64_t term = detail::binom_poly(i, j) * (*this)(-j);
        v += (j % 2 == 0) ? term : -term;
      }
      const std::int64_t g = v - 1;
      out.push_back(((n - i) % 2 == 0) ? g : -g);
    }
    return out;
  }

 private:
  IntPoly q_;
  int pole_ = 0;
};

/// Hilbert polynomial data of R/M for the monomial ideal M.
inline HilbertPoly hilbert_poly_of_monomials(const std::vector<Monomial>& gens, std::size_t nvars) {
  IntPoly num = hilbert_series_numerator(gens, nvars);
  int pole = static_cast<int>(nvars);
  // divide by (1 - tau) while N(1) == 0
  while (pole > 0 && !num.empty()) {
    std::int64_t at1 = 0;
    for (auto c : num) at1 += c;
    if (at1 != 0) break;
    // synthetic division by (1 - tau): N = (1 - tau) Q, q_i = sum_{j<=i} n_j
    IntPoly q(num.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    detail::trim(q);
    num = std::move(q);
    --pole;
  }
  if (num.empty()) pole = 0;  // unit ideal
  return HilbertPoly(std::move(num), pole);
}

template <class K>
HilbertPoly hilbert_poly(const Ideal<K>& ideal) {
  const auto& w = ideal.ring()->weights();
  if (std::any_of(w.begin(), w.end(), [](int x) { return x != 1; })) {
    throw RingError("Hilbert computations need the standard grading");
  }
  if (!ideal.is_homogeneous()) throw RingError("Hilbert computations need a homogeneous ideal");
  return hilbert_poly_of_monomials(ideal.lead_monomials(), ideal.ring()->nvars());
}

/// Projective dimension (-1 for the empty scheme).
template <class K>
int dimension(const Ideal<K>& ideal) {
  return hilbert_poly(ideal).dimension();
}

/// Codimension in the affine cone: nvars - affine dimension.
template <class K>
int codim(const Ideal<K>& ideal) {
  return static_cast<int>(ideal.ring()->nvars()) - hilbert_poly(ideal).pole_order();
}

template <class K>
std::int64_t degree(const Ideal<K>& ideal) {
  return hilbert_poly(ideal).degree();
}

template <class K>
std::vector<std::int64_t> genera(const Ideal<K>& ideal) {
  return hilbert_poly(ideal).genera();
}

}  // namespace ratsurf
