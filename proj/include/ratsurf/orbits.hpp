#pragma once

// Projective points of P^2 over GF(2^n), their Frobenius orbits, and the F_2-rational
// ideals of orbits with multiplicity.

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratsurf/field.hpp"
#include "ratsurf/groebner.hpp"
#include "ratsurf/hilbert.hpp"

namespace ratsurf {

class PointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point of P^2 over a GF(2^n); coordinates normalized so the last nonzero one equals 1.
class ProjPoint {
 public:
  ProjPoint(FieldPtr ctx, FieldElem x, FieldElem y, FieldElem z) : ctx_(std::move(ctx)), c_{x, y, z} {
    for (const auto& c : c_) {
      if (c.ctx() != ctx_.get()) throw PointError("coordinate lies in a different field");
    }
    normalize();
  }

  static ProjPoint parse(const FieldPtr& ctx, const std::string& x, const std::string& y, const std::string& z) {
    return ProjPoint(ctx, parse_elem(*ctx, x), parse_elem(*ctx, y), parse_elem(*ctx, z));
  }

  const FieldPtr& field() const { return ctx_; }
  const FieldElem& operator[](std::size_t i) const { return c_[i]; }
  /// True when the point lies in the affine chart z = 1.
  bool in_z_chart() const { return c_[2].is_one(); }

  ProjPoint frobenius() const { return ProjPoint(ctx_, c_[0].frobenius(), c_[1].frobenius(), c_[2].frobenius()); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.ctx_.get() == b.ctx_.get() && a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
  }

  std::string render() const { return "(" + c_[0].render() + " : " + c_[1].render() + " : " + c_[2].render() + ")"; }

 private:
  void normalize() {
    int last = -1;
    for (int i = 2; i >= 0; --i) {
      if (!c_[static_cast<std::size_t>(i)].is_zero()) {
        last = i;
        break;
      }
    }
    if (last < 0) throw PointError("all coordinates are zero");
    const FieldElem inv = c_[static_cast<std::size_t>(last)].inv();
    for (auto& c : c_) c = c * inv;
  }

  FieldPtr ctx_;
  std::array<FieldElem, 3> c_;
};

/// Orbit representative together with the orbit degree demanded of it.
struct OrbitSpec {
  ProjPoint representative;
  int n;
};

/// Distinct coordinatewise Frobenius iterates of p.
inline std::vector<ProjPoint> orbit_points(const ProjPoint& p) {
  std::vector<ProjPoint> out{p};
  ProjPoint cur = p.frobenius();
  while (!(cur == p)) {
    out.push_back(cur);
    cur = cur.frobenius();
  }
  return out;
}

inline bool is_full(const OrbitSpec& spec) { return static_cast<int>(orbit_points(spec.representative).size()) == spec.n; }

/// The coordinate ring F_2[x, y, z] of the source plane.
inline RingPtr<F2> plane_ring() {
  static const RingPtr<F2> ring = make_ring<F2>({"x", "y", "z"});
  return ring;
}

namespace detail {

/// Linear generators of the ideal of p in a ring whose variables `tvar` (if >= 0) stands for
/// the field generator and x, y, z sit at positions xs[0..2].
inline std::vector<Poly<F2>> point_ideal_lifted(const ProjPoint& p, const RingPtr<F2>& ring, int tvar,
                                                const std::array<std::size_t, 3>& xs) {
  auto coord = [&](std::size_t i) {
    // element bits as a polynomial in t
    std::vector<Term<F2>> terms;
    const std::uint64_t bits = p[i].bits();
    for (int b = 0; b < 64; ++b) {
      if (((bits >> b) & 1u) == 0) continue;
      if (b > 0 && tvar < 0) throw PointError("point over an extension needs a field variable");
      terms.push_back({b == 0 ? Monomial{} : Monomial::var(static_cast<std::size_t>(tvar), b), F2{true}});
    }
    return Poly<F2>(ring, std::move(terms));
  };
  auto v = [&](std::size_t i) { return Poly<F2>::var(ring, xs[i]); };
  // chart of the last nonzero coordinate, which is 1
  if (p[2].is_one()) return {v(0) - coord(0) * v(2), v(1) - coord(1) * v(2)};
  if (p[1].is_one()) return {v(0) - coord(0) * v(1), v(2)};
  return {v(1), v(2)};
}

}  // namespace detail

/// F_2-rational ideal of the Frobenius orbit of p with multiplicity m: the kernel of
/// F_2[x,y,z] -> GF(2^n)[x,y,z]/I_p^m, computed by eliminating t from I_p^m + (modulus(t))
/// in F_2[t,x,y,z].
inline Ideal<F2> orbit_ideal(const ProjPoint& p, unsigned m, const GbOptions& opt = {}) {
  if (m == 0) throw PointError("multiplicity must be positive");
  const RingPtr<F2> s2 = plane_ring();
  const FieldCtx& f = *p.field();
  bool rational = true;
  for (std::size_t i = 0; i < 3; ++i) rational = rational && p[i].bits() <= 1;
  if (rational) {
    Ideal<F2> ip(s2, detail::point_ideal_lifted(p, s2, -1, {0, 1, 2}));
    Ideal<F2> pw = power(ip, m);
    pw.gb(opt);
    return pw;
  }
  // t weight 0 keeps the lifted generators homogeneous in x, y, z
  auto lifted = make_ring<F2>({"t", "x", "y", "z"}, MonomialOrder::block_order(1), {}, {0, 1, 1, 1});
  Ideal<F2> ip(lifted, detail::point_ideal_lifted(p, lifted, 0, {1, 2, 3}));
  std::vector<Poly<F2>> gens = power(ip, m).generators();
  std::vector<Term<F2>> mod_terms;
  for (int b = 0; b <= f.degree(); ++b) {
    if ((f.modulus() >> b) & 1u) mod_terms.push_back({b == 0 ? Monomial{} : Monomial::var(0, b), F2{true}});
  }
  gens.push_back(Poly<F2>(lifted, std::move(mod_terms)));
  auto basis = groebner_basis(lifted, gens, opt);
  auto kept = detail::filter_eliminated(basis, 1, s2);
  Ideal<F2> out(s2, kept);
  out.set_gb(std::move(kept));
  return out;
}

/// True iff every orbit is full and the orbit point sets are pairwise disjoint. Full orbits
/// of different degree have different fields of definition and never meet; equal degrees
/// are compared pointwise after identifying the two fields.
inline bool orbits_disjoint(const std::vector<OrbitSpec>& specs) {
  for (const auto& s : specs) {
    if (!is_full(s)) return false;
  }
  for (std::size_t a = 0; a < specs.size(); ++a) {
    for (std::size_t b = a + 1; b < specs.size(); ++b) {
      if (specs[a].n != specs[b].n) continue;
      const ProjPoint& pa = specs[a].representative;
      const ProjPoint& pb = specs[b].representative;
      const int na = pa.field()->degree(), nb = pb.field()->degree();
      const int l = std::lcm(na, nb);
      if (l > 63) throw PointError("compositum field of degree " + std::to_string(l) + " is not supported");
      FieldPtr common = na == l ? pa.field() : nb == l ? pb.field() : field_new(l);
      auto lift = [&](const ProjPoint& p) {
        if (p.field().get() == common.get()) return p;
        FieldEmbedding emb(*p.field(), *common);
        return ProjPoint(common, emb(p[0]), emb(p[1]), emb(p[2]));
      };
      const ProjPoint qa = lift(pa);
      const ProjPoint qb = lift(pb);
      for (const auto& q : orbit_points(qb)) {
        if (q == qa) return false;
      }
    }
  }
  return true;
}

/// {"n": 14, "coords": ["t^11898", "t^137", "1"], "modulus": "t^14+..."}; the modulus is
/// optional and defaults to the library default for n.
inline ProjPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("coords")) {
    throw PointError("point record needs \"n\" and \"coords\"");
  }
  const int n = j.at("n").get<int>();
  std::optional<std::uint64_t> modulus;
  if (j.contains("modulus")) modulus = parse_modulus(j.at("modulus").get<std::string>());
  FieldPtr ctx = field_new(n, modulus);
  const auto& c = j.at("coords");
  if (!c.is_array() || c.size() != 3) throw PointError("coords must hold three field elements");
  return ProjPoint::parse(ctx, c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>());
}

inline nlohmann::json point_to_json(const ProjPoint& p) {
  nlohmann::json j;
  j["n"] = p.field()->degree();
  j["coords"] = {p[0].render(), p[1].render(), p[2].render()};
  if (p.field()->modulus() != default_modulus(p.field()->degree())) {
    j["modulus"] = gf2x::render(p.field()->modulus());
  }
  return j;
}

}  // namespace ratsurf
