#pragma once

// Tangent-space test for lifting a configuration to characteristic zero. For the condition
// matrix M0 of rank k with right kernel K and left kernel C, the rank-k locus has tangent
// space {M1 : C M1 K = 0} at M0. Pulling back along first-order deformations of the orbit
// representatives gives an F_2-linear map from the deformation space to the (f-k)(g-k)
// entries of C M1 K; the check passes when that map is onto.

#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratsurf/conditions.hpp"

namespace ratsurf {

/// Per orbit, 2n F_2-directions: (t^b, 0) and (0, t^b) perturbations of the representative.
struct DeformationSpace {
  std::vector<int> blocks;
  int total = 0;
};

inline DeformationSpace deformation_space(const std::vector<OrbitGroup>& groups) {
  DeformationSpace d;
  for (const auto& g : groups) {
    const int n = g.orbit.representative.field()->degree();
    d.blocks.push_back(2 * n);
    d.total += 2 * n;
  }
  return d;
}

/// epsilon-part of the condition rows of (p + eps w, m) in degree a:
/// D^alpha f~ (p + eps w) = D^alpha f~ (p) + eps sum_j w_j (alpha_j + 1) D^(alpha + e_j) f~ (p),
/// with the factor alpha_j + 1 = C(alpha + e_j, alpha) taken mod 2. Row layout matches
/// condition_matrix for one group.
inline BitMatrix first_order_rows(const ProjPoint& p, unsigned m, int a, const FieldElem& w1, const FieldElem& w2) {
  if (!p.in_z_chart()) throw ChartError("first_order_rows needs a representative with z = 1");
  const FieldCtx& f = *p.field();
  const int n = f.degree();
  const auto cols = plane_monomials(a);
  const auto idx = hasse_indices(m);
  BitMatrix out(idx.size() * static_cast<std::size_t>(n), cols.size());
  const auto up = detail::powers(f, p[0].bits(), a);
  const auto vp = detail::powers(f, p[1].bits(), a);
  std::size_t row = 0;
  for (auto [ax, ay] : idx) {
    const bool bump_x = (ax % 2) == 0;  // alpha_x + 1 odd
    const bool bump_y = (ay % 2) == 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const int i = cols[c][0], j = cols[c][1];
      std::uint64_t val = 0;
      if (bump_x) val ^= f.mul(w1.bits(), detail::hasse_monomial_value(f, up, vp, i, j, ax + 1, ay));
      if (bump_y) val ^= f.mul(w2.bits(), detail::hasse_monomial_value(f, up, vp, i, j, ax, ay + 1));
      for (int s = 0; s < n; ++s) {
        if ((val >> s) & 1u) out.set(row + static_cast<std::size_t>(s), c, true);
      }
    }
    row += static_cast<std::size_t>(n);
  }
  return out;
}

struct LiftReport {
  std::size_t rank_m0 = 0;
  std::size_t kernel_dim = 0;
  std::size_t cokernel_dim = 0;
  std::size_t deformation_dim = 0;
  std::size_t expected_codim = 0;  // kernel_dim * cokernel_dim
  std::size_t tangent_dim = 0;
  std::size_t tangent_codim = 0;
  bool passes = false;
  std::string failure;
};

/// Right-multiplies by K where `kernel_rows` holds the kernel basis as rows.
inline BitMatrix times_kernel(const BitMatrix& m, const BitMatrix& kernel_rows) {
  BitMatrix out(m.rows(), kernel_rows.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < kernel_rows.rows(); ++k) {
      bool acc = false;
      const std::uint64_t* a = m.row(r);
      const std::uint64_t* b = kernel_rows.row(k);
      for (std::size_t w = 0; w < m.words_per_row(); ++w) acc ^= (std::popcount(a[w] & b[w]) & 1) != 0;
      out.set(r, k, acc);
    }
  }
  return out;
}

/// Matrix of M1 -> C M1 K over the given directions: column d holds C M1_d K flattened
/// row by row. Its rank is the codimension of the tangent space of the rank-k locus pulled
/// back to the span of the directions.
inline BitMatrix pairing_matrix(const BitMatrix& kernel_rows, const BitMatrix& cokernel_rows,
                                const std::vector<BitMatrix>& directions) {
  const std::size_t kd = kernel_rows.rows(), cd = cokernel_rows.rows();
  BitMatrix sys(kd * cd, directions.size());
  for (std::size_t col = 0; col < directions.size(); ++col) {
    const BitMatrix ckm = times_kernel(cokernel_rows * directions[col], kernel_rows);
    for (std::size_t i = 0; i < cd; ++i) {
      for (std::size_t j = 0; j < kd; ++j) sys.set(i * kd + j, col, ckm.get(i, j));
    }
  }
  return sys;
}

/// First-order perturbations M1(w) of the condition matrix, one per F_2-basis direction
/// of the deformation space, in group order.
inline std::vector<BitMatrix> deformation_directions(int a, const std::vector<OrbitGroup>& groups,
                                                     const ConditionMatrix& cm) {
  std::vector<BitMatrix> out;
  std::size_t row_offset = 0;
  for (const auto& g : groups) {
    const ProjPoint& p = g.orbit.representative;
    const FieldCtx& f = *p.field();
    const int n = f.degree();
    const std::size_t block_rows = hasse_indices(g.mult).size() * static_cast<std::size_t>(n);
    for (int slot = 0; slot < 2; ++slot) {
      for (int b = 0; b < n; ++b) {
        const FieldElem e(&f, f.t_pow(static_cast<std::uint64_t>(b)));
        const FieldElem z = FieldElem::zero(&f);
        const BitMatrix block = first_order_rows(p, g.mult, a, slot == 0 ? e : z, slot == 0 ? z : e);
        BitMatrix m1(cm.matrix.rows(), cm.matrix.cols());
        for (std::size_t r = 0; r < block.rows(); ++r) {
          for (std::size_t c = 0; c < block.cols(); ++c) {
            if (block.get(r, c)) m1.set(row_offset + r, c, true);
          }
        }
        out.push_back(std::move(m1));
      }
    }
    row_offset += block_rows;
  }
  return out;
}

/// Requires the linear system to have dimension `expected_kernel` (5 for a map to P^4).
inline LiftReport lifting_check(int a, const std::vector<OrbitGroup>& groups, std::size_t expected_kernel = 5) {
  LiftReport rep;
  const ConditionMatrix cm = condition_matrix(a, groups);
  rep.rank_m0 = cm.matrix.rank();
  const BitMatrix k = cm.matrix.kernel();
  const BitMatrix c = cm.matrix.left_kernel();
  rep.kernel_dim = k.rows();
  rep.cokernel_dim = c.rows();
  rep.deformation_dim = static_cast<std::size_t>(deformation_space(groups).total);
  rep.expected_codim = rep.kernel_dim * rep.cokernel_dim;
  if (rep.kernel_dim != expected_kernel) {
    rep.failure = "not on the expected determinantal stratum: kernel dimension " + std::to_string(rep.kernel_dim);
    return rep;
  }
  const std::size_t r = pairing_matrix(k, c, deformation_directions(a, groups, cm)).rank();
  rep.tangent_codim = r;
  rep.tangent_dim = rep.deformation_dim - r;
  rep.passes = r == rep.expected_codim;
  if (!rep.passes) rep.failure = "tangent codimension " + std::to_string(r) + " below " + std::to_string(rep.expected_codim);
  return rep;
}

inline nlohmann::json to_json(const LiftReport& r) {
  nlohmann::json j{{"rank_M0", r.rank_m0},
                   {"kernel_dim", r.kernel_dim},
                   {"cokernel_dim", r.cokernel_dim},
                   {"deformation_dim", r.deformation_dim},
                   {"expected_codim", r.expected_codim},
                   {"tangent_dim", r.tangent_dim},
                   {"tangent_codim", r.tangent_codim},
                   {"passes", r.passes}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

}  // namespace ratsurf
