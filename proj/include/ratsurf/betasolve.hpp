#pragma once

// Invariants of the blow-up of P^2 embedded by a plane system of degree a, and the inverse
// problem: all multiplicity vectors beta with prescribed (d, pi, K^2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ratsurf {

struct Invariants {
  std::int64_t d;
  std::int64_t pi;
  std::int64_t k2;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

inline std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

/// d = a^2 - sum b_i^2, pi = C(a-1, 2) - sum C(b_i, 2), K^2 = 9 - l for l points.
inline Invariants invariants_from_multiplicities(int a, const std::vector<int>& b) {
  if (a < 1) throw std::invalid_argument("degree a must be positive");
  Invariants inv{std::int64_t{a} * a, binom2(a - 1), 9 - static_cast<std::int64_t>(b.size())};
  for (int bi : b) {
    if (bi < 1) throw std::invalid_argument("multiplicities must be positive");
    inv.d -= std::int64_t{bi} * bi;
    inv.pi -= binom2(bi);
  }
  return inv;
}

/// beta_j for j = 1..a-1; entries with beta_j = 0 are omitted.
struct BetaVector {
  int a = 0;
  std::map<int, int> beta;

  /// Multiplicity list with beta_j copies of j, largest first.
  std::vector<int> expand() const {
    std::vector<int> b;
    for (auto it = beta.rbegin(); it != beta.rend(); ++it) b.insert(b.end(), static_cast<std::size_t>(it->second), it->first);
    return b;
  }

  int points() const {
    int s = 0;
    for (const auto& [j, c] : beta) s += c;
    return s;
  }

  friend bool operator==(const BetaVector&, const BetaVector&) = default;
};

inline nlohmann::json to_json(const BetaVector& v) {
  nlohmann::json beta = nlohmann::json::object();
  for (auto it = v.beta.rbegin(); it != v.beta.rend(); ++it) beta[std::to_string(it->first)] = it->second;
  return {{"a", v.a}, {"beta", beta}};
}

struct BetaSolutions {
  bool infeasible = false;  // targets inconsistent before any search
  std::vector<BetaVector> solutions;
};

/// All beta >= 0 with sum beta_j = 9 - K^2, sum beta_j j^2 = a^2 - d and
/// sum beta_j C(j, 2) = C(a-1, 2) - pi, over 1 <= j <= a-1. Solutions are listed in
/// lexicographic order of (beta_{a-1}, ..., beta_1), descending.
inline BetaSolutions solve_beta(std::int64_t d, std::int64_t pi, std::int64_t k2, int a) {
  BetaSolutions out;
  const std::int64_t npts = 9 - k2;
  const std::int64_t sq = std::int64_t{a} * a - d;
  const std::int64_t bn = binom2(a - 1) - pi;
  if (a < 1 || npts < 0 || sq < 0 || bn < 0) {
    out.infeasible = true;
    return out;
  }
  std::vector<int> beta(static_cast<std::size_t>(a), 0);
  // assign from the largest multiplicity down; beta_1 is forced by the point count
  auto rec = [&](auto&& self, int j, std::int64_t left_pts, std::int64_t left_sq, std::int64_t left_bn) -> void {
    if (j == 1) {
      if (left_bn != 0 || left_sq != left_pts) return;
      beta[1] = static_cast<int>(left_pts);
      BetaVector v{a, {}};
      for (int i = a - 1; i >= 1; --i) {
        if (beta[static_cast<std::size_t>(i)] > 0) v.beta[i] = beta[static_cast<std::size_t>(i)];
      }
      out.solutions.push_back(std::move(v));
      beta[1] = 0;
      return;
    }
    const std::int64_t jj = std::int64_t{j} * j;
    const std::int64_t cap = std::min({left_pts, left_sq / jj, left_bn / binom2(j)});
    for (std::int64_t c = cap; c >= 0; --c) {
      beta[static_cast<std::size_t>(j)] = static_cast<int>(c);
      self(self, j - 1, left_pts - c, left_sq - c * jj, left_bn - c * binom2(j));
    }
    beta[static_cast<std::size_t>(j)] = 0;
  };
  if (a == 1) {
    if (npts == 0 && sq == 0 && bn == 0) out.solutions.push_back(BetaVector{a, {}});
    return out;
  }
  rec(rec, a - 1, npts, sq, bn);
  return out;
}

/// Union of solve_beta over a in [a_min, a_max], sorted by a.
inline std::vector<BetaVector> scan_a(std::int64_t d, std::int64_t pi, std::int64_t k2, int a_min, int a_max) {
  std::vector<BetaVector> out;
  for (int a = std::max(1, a_min); a <= a_max; ++a) {
    auto s = solve_beta(d, pi, k2, a);
    out.insert(out.end(), s.solutions.begin(), s.solutions.end());
  }
  return out;
}

}  // namespace ratsurf
