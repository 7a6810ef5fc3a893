#pragma once

// Multiplicity conditions on plane curves of degree a as an F_2 matrix: one row per
// (orbit, Hasse multi-index alpha with |alpha| < m, F_2-basis slot of GF(2^n)), one column
// per monomial of degree a. The kernel is the degree-a piece of the orbit-multiplicity ideal.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ratsurf/bitmatrix.hpp"
#include "ratsurf/orbits.hpp"

namespace ratsurf {

class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orbit representative with the multiplicity imposed at each of its points.
struct OrbitGroup {
  OrbitSpec orbit;
  unsigned mult;
};

struct RowTag {
  std::size_t group;
  int alpha_x;
  int alpha_y;
  int slot;  // coefficient of t^slot
};

struct ConditionMatrix {
  int degree = 0;
  BitMatrix matrix;
  std::vector<RowTag> provenance;
  std::vector<Monomial> columns;
};

/// Hasse multi-indices (ax, ay) with ax + ay < m, ordered by total order then ax descending.
inline std::vector<std::pair<int, int>> hasse_indices(unsigned m) {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < static_cast<int>(m); ++s) {
    for (int ax = s; ax >= 0; --ax) out.emplace_back(ax, s - ax);
  }
  return out;
}

namespace detail {

/// Powers u^0..u^a of a field element.
inline std::vector<std::uint64_t> powers(const FieldCtx& f, std::uint64_t u, int a) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(a) + 1);
  p[0] = 1;
  for (int i = 1; i <= a; ++i) p[static_cast<std::size_t>(i)] = f.mul(p[static_cast<std::size_t>(i) - 1], u);
  return p;
}

/// Value of D^(ax,ay) (x^i y^j) at (u, v): C(i,ax) C(j,ay) u^(i-ax) v^(j-ay), binomials mod 2.
inline std::uint64_t hasse_monomial_value(const FieldCtx& f, const std::vector<std::uint64_t>& up,
                                          const std::vector<std::uint64_t>& vp, int i, int j, int ax, int ay) {
  if (i < ax || j < ay) return 0;
  if (!binom_mod2(static_cast<unsigned>(i), static_cast<unsigned>(ax)) ||
      !binom_mod2(static_cast<unsigned>(j), static_cast<unsigned>(ay))) {
    return 0;
  }
  return f.mul(up[static_cast<std::size_t>(i - ax)], vp[static_cast<std::size_t>(j - ay)]);
}

}  // namespace detail

inline std::vector<Monomial> plane_monomials(int a) { return monomials_of_degree(*plane_ring(), a); }

inline ConditionMatrix condition_matrix(int a, const std::vector<OrbitGroup>& groups) {
  ConditionMatrix cm;
  cm.degree = a;
  cm.columns = plane_monomials(a);
  std::size_t nrows = 0;
  for (const auto& g : groups) {
    if (!g.orbit.representative.in_z_chart()) {
      throw ChartError("orbit representative " + g.orbit.representative.render() +
                       " has z = 0; change coordinates so all points lie in the chart z = 1");
    }
    nrows += static_cast<std::size_t>(g.orbit.representative.field()->degree()) * g.mult * (g.mult + 1) / 2;
  }
  cm.matrix = BitMatrix(nrows, cm.columns.size());
  cm.provenance.reserve(nrows);
  std::size_t row = 0;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    const ProjPoint& p = g.orbit.representative;
    const FieldCtx& f = *p.field();
    const int n = f.degree();
    const auto up = detail::powers(f, p[0].bits(), a);
    const auto vp = detail::powers(f, p[1].bits(), a);
    for (auto [ax, ay] : hasse_indices(g.mult)) {
      for (std::size_t c = 0; c < cm.columns.size(); ++c) {
        const Monomial& mono = cm.columns[c];
        const std::uint64_t val = detail::hasse_monomial_value(f, up, vp, mono[0], mono[1], ax, ay);
        for (int s = 0; s < n; ++s) {
          if ((val >> s) & 1u) cm.matrix.set(row + static_cast<std::size_t>(s), c, true);
        }
      }
      for (int s = 0; s < n; ++s) cm.provenance.push_back(RowTag{gi, ax, ay, s});
      row += static_cast<std::size_t>(n);
    }
  }
  return cm;
}

/// Forms f = sum of v_c * columns[c] for the rows v of a kernel basis.
inline std::vector<Poly<F2>> forms_from_vectors(const BitMatrix& vectors, const std::vector<Monomial>& columns) {
  std::vector<Poly<F2>> out;
  for (std::size_t r = 0; r < vectors.rows(); ++r) {
    std::vector<Term<F2>> terms;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (vectors.get(r, c)) terms.push_back({columns[c], F2{true}});
    }
    out.push_back(Poly<F2>::from_sorted(plane_ring(), std::move(terms)));
  }
  return out;
}

/// Basis of the degree-a forms satisfying all conditions, from the canonical kernel basis.
inline std::vector<Poly<F2>> system_basis(const ConditionMatrix& cm) {
  return forms_from_vectors(cm.matrix.kernel(), cm.columns);
}

}  // namespace ratsurf
