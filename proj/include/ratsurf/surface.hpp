#pragma once

// From a configuration of Frobenius orbits with multiplicities to a verified surface in
// P^4: linear system, base locus, image ideal, invariants, smoothness and 6-secant lines.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <type_traits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratsurf/betasolve.hpp"
#include "ratsurf/conditions.hpp"
#include "ratsurf/hilbert.hpp"

namespace ratsurf {

/// The coordinate ring F_2[x0, ..., x4] of the target P^4.
inline RingPtr<F2> target_ring() {
  static const RingPtr<F2> ring = make_ring<F2>({"x0", "x1", "x2", "x3", "x4"});
  return ring;
}

struct SurfaceConfig {
  int a = 0;
  std::vector<OrbitGroup> groups;

  /// Multiplicity list with one entry per geometric point (orbit sizes as specified).
  std::vector<int> multiplicities() const {
    std::vector<int> b;
    for (const auto& g : groups) b.insert(b.end(), static_cast<std::size_t>(g.orbit.n), static_cast<int>(g.mult));
    return b;
  }

  /// Expected base locus degree sum n_i C(m_i + 1, 2).
  std::int64_t condition_count() const {
    std::int64_t s = 0;
    for (const auto& g : groups) s += std::int64_t{g.orbit.n} * g.mult * (g.mult + 1) / 2;
    return s;
  }
};

enum class Stage { Orbit, Rank, Baselocus, Image, Smooth, Secants, Hit };

inline const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Orbit: return "orbit";
    case Stage::Rank: return "rank";
    case Stage::Baselocus: return "baselocus";
    case Stage::Image: return "image";
    case Stage::Smooth: return "smooth";
    case Stage::Secants: return "secants";
    case Stage::Hit: return "HIT";
  }
  return "?";
}

inline constexpr Stage kStages[] = {Stage::Orbit, Stage::Rank,    Stage::Baselocus, Stage::Image,
                                    Stage::Smooth, Stage::Secants, Stage::Hit};

struct SecantLine {
  std::vector<std::string> forms;  // three linear forms over GF(2^field_degree) or F_2
  int field_degree = 1;            // size of the Frobenius orbit of the line
  int enumeration_degree = 1;      // k with the line found over GF(2^k)
  std::int64_t intersection_degree = 0;
  int intersection_codim = 0;
};

struct UnresolvedComponent {
  int codim;
  std::int64_t degree;
};

struct SecantAnalysis {
  int codim = 0;
  std::int64_t degree = 0;
  std::vector<SecantLine> lines;  // conjugate lines listed individually
  std::vector<UnresolvedComponent> unresolved;
};

struct SurfaceReport {
  int codim = 0;
  std::int64_t degree = 0;
  std::vector<std::int64_t> genera;
  std::vector<int> min_gen_degrees;
  bool smooth = false;
  int minor_codim = 0;
  std::optional<SecantAnalysis> secants;
  std::map<std::string, double> stage_timings;

  int secant_count() const { return secants ? static_cast<int>(secants->lines.size()) : 0; }
};

namespace detail {

/// Row echelon form of a small dense matrix over GF(2^k), reduced and with unit pivots.
inline std::vector<std::size_t> rref(std::vector<std::vector<FieldElem>>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const FieldElem inv = m[r][c].inv();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElem f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] + f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Value of an F_2 polynomial at a point with coordinates in ctx.
inline std::uint64_t eval_at(const Poly<F2>& f, const FieldCtx& ctx, const std::vector<std::uint64_t>& pt) {
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < pt.size() && v != 0; ++i) {
      if (t.m.e[i] != 0) v = ctx.mul(v, ctx.pow(pt[i], t.m.e[i]));
    }
    acc ^= v;
  }
  return acc;
}

/// Points of V(gens) in P^4(GF(2^k)), normalized with last nonzero coordinate 1.
inline std::vector<std::vector<std::uint64_t>> rational_points(const std::vector<Poly<F2>>& gens,
                                                               const FieldCtx& ctx) {
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t q = std::uint64_t{1} << ctx.degree();
  const std::size_t n = 5;
  std::vector<std::uint64_t> pt(n);
  for (std::size_t last = n; last-- > 0;) {
    // coordinates after `last` are 0, coordinate `last` is 1, the ones before range freely
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < last; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < last; ++i) {
        pt[i] = rest % q;
        rest /= q;
      }
      pt[last] = 1;
      for (std::size_t i = last + 1; i < n; ++i) pt[i] = 0;
      bool on = true;
      for (const auto& g : gens) {
        if (eval_at(g, ctx, pt) != 0) {
          on = false;
          break;
        }
      }
      if (on) out.push_back(pt);
    }
  }
  return out;
}

}  // namespace detail

/// True iff the forms cut out a zero-dimensional scheme of the expected degree in P^2
/// (the empty scheme counts as degree 0).
inline bool baselocus_check(const std::vector<Poly<F2>>& forms, std::int64_t expected_degree) {
  const HilbertPoly hp = hilbert_poly(Ideal<F2>(plane_ring(), forms));
  if (hp.dimension() > 0) return false;
  return hp.degree() == expected_degree;
}

/// Ideal of the image of P^2 under the given forms of one degree.
inline Ideal<F2> image_ideal(const std::vector<Poly<F2>>& forms, const GbOptions& opt = {}) {
  if (forms.size() != 5) throw MapError("image_ideal: a map to P^4 needs exactly 5 forms");
  return kernel_of_map(forms, target_ring(), opt);
}

/// minors(c, J) + I for the Jacobian J of the generators and c = codim I.
template <class K>
Ideal<K> jacobian_minor_ideal(const Ideal<K>& ideal, const std::vector<Poly<K>>& gens, int c) {
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::vector<Poly<K>>> jac;
  for (const auto& f : gens) {
    std::vector<Poly<K>> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(f.partial(i));
    jac.push_back(std::move(row));
  }
  // c x c minors by cofactor expansion over chosen rows and columns
  std::vector<Poly<K>> out = gens;
  std::vector<std::size_t> rows, cols;
  auto det = [&](auto&& self, std::vector<std::size_t> rs, std::vector<std::size_t> cs) -> Poly<K> {
    if (rs.size() == 1) return jac[rs[0]][cs[0]];
    Poly<K> acc(ideal.ring());
    std::vector<std::size_t> sub_rows(rs.begin() + 1, rs.end());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (jac[rs[0]][cs[k]].is_zero()) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t l = 0; l < cs.size(); ++l) {
        if (l != k) sub_cols.push_back(cs[l]);
      }
      Poly<K> term = jac[rs[0]][cs[k]] * self(self, sub_rows, sub_cols);
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  auto choose = [&](auto&& self, std::vector<std::size_t>& pick, std::size_t from, std::size_t total,
                    std::size_t want, std::vector<std::vector<std::size_t>>& sink) -> void {
    if (pick.size() == want) {
      sink.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < total; ++i) {
      pick.push_back(i);
      self(self, pick, i + 1, total, want, sink);
      pick.pop_back();
    }
  };
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  choose(choose, rows, 0, gens.size(), static_cast<std::size_t>(c), row_sets);
  choose(choose, cols, 0, n, static_cast<std::size_t>(c), col_sets);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      Poly<K> m = det(det, rs, cs);
      if (!m.is_zero()) out.push_back(std::move(m));
    }
  }
  return Ideal<K>(ideal.ring(), std::move(out));
}

/// Jacobian criterion for a codimension-c scheme in P^(n-1): smooth iff the minor ideal has
/// empty vanishing locus. Returns the codimension of the minor ideal.
inline int jacobian_minor_codim(const Ideal<F2>& ideal, const std::vector<Poly<F2>>& mingens, int c) {
  return codim(jacobian_minor_ideal(ideal, mingens, c));
}

inline bool smoothness_check(const Ideal<F2>& ideal) {
  const int c = codim(ideal);
  const auto mg = minimal_generators(ideal);
  return jacobian_minor_codim(ideal, mg, c) >= static_cast<int>(ideal.ring()->nvars());
}

namespace detail {

struct FoundLine {
  std::vector<std::vector<FieldElem>> basis;  // 2 x 5 reduced row echelon form
  std::vector<std::size_t> pivots;
};

inline bool same_line(const FoundLine& a, const FoundLine& b) {
  if (a.pivots != b.pivots) return false;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      if (!(a.basis[r][c] == b.basis[r][c])) return false;
    }
  }
  return true;
}

inline FoundLine conjugate(const FoundLine& l) {
  FoundLine out = l;
  for (auto& row : out.basis) {
    for (auto& x : row) x = x.frobenius();
  }
  return out;
}

/// The three linear forms vanishing on the line, one per non-pivot coordinate.
template <class K>
std::vector<Poly<K>> line_forms(const FoundLine& l, const RingPtr<K>& ring) {
  std::vector<Poly<K>> out;
  for (std::size_t f = 0; f < 5; ++f) {
    if (f == l.pivots[0] || f == l.pivots[1]) continue;
    std::vector<Term<K>> terms;
    terms.push_back({Monomial::var(f), ring->one()});
    for (std::size_t r = 0; r < 2; ++r) {
      const FieldElem& c = l.basis[r][f];
      if (c.is_zero()) continue;
      if constexpr (std::is_same_v<K, F2>) {
        terms.push_back({Monomial::var(l.pivots[r]), F2{true}});
      } else {
        terms.push_back({Monomial::var(l.pivots[r]), c});
      }
    }
    out.push_back(Poly<K>(ring, std::move(terms)));
  }
  return out;
}

/// Does every generator vanish identically on the line spanned by the basis rows?
inline bool line_in_locus(const FoundLine& l, const std::vector<Poly<F2>>& gens, const FieldPtr& ctx) {
  auto ring = make_ring<FieldElem>({"s", "u"}, MonomialOrder::grevlex(), ctx.get());
  std::vector<Poly<FieldElem>> images;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Term<FieldElem>> t;
    if (!l.basis[0][i].is_zero()) t.push_back({Monomial::var(0), l.basis[0][i]});
    if (!l.basis[1][i].is_zero()) t.push_back({Monomial::var(1), l.basis[1][i]});
    images.push_back(Poly<FieldElem>(ring, std::move(t)));
  }
  auto lifted = make_ring<FieldElem>(target_ring()->names(), MonomialOrder::grevlex(), ctx.get());
  for (const auto& g : gens) {
    if (!lift_coefficients(g, lifted).subst(images, ring).is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// 6-secant analysis: the ideal of the minimal generators of degree <= 5, its colon by the
/// surface ideal, and a splitting of the residual scheme into lines found by enumerating
/// its points over GF(2^k), k = 1, 2, 4, 6.
inline SecantAnalysis six_secants(const Ideal<F2>& surface, const std::vector<Poly<F2>>& mingens,
                                  const GbOptions& opt = {}) {
  const RingPtr<F2>& ring = surface.ring();
  std::vector<Poly<F2>> low;
  for (const auto& g : mingens) {
    if (g.weighted_degree() <= 5) low.push_back(g);
  }
  SecantAnalysis out;
  const Ideal<F2> secants = quotient(Ideal<F2>(ring, low), Ideal<F2>(ring, mingens), opt);
  const HilbertPoly hp = hilbert_poly(secants);
  out.codim = static_cast<int>(ring->nvars()) - hp.pole_order();
  out.degree = hp.degree();
  if (hp.dimension() < 0) return out;
  if (hp.dimension() != 1) {
    out.unresolved.push_back({out.codim, out.degree});
    return out;
  }
  const std::vector<Poly<F2>>& sec_gb = secants.gb();
  std::vector<detail::FoundLine> lines;
  FieldPtr ctx;
  int k_used = 0;
  for (int k : {1, 2, 4, 6}) {
    ctx = field_new(k);
    lines.clear();
    const auto pts = detail::rational_points(sec_gb, *ctx);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        std::vector<std::vector<FieldElem>> m(2, std::vector<FieldElem>(5));
        for (std::size_t c = 0; c < 5; ++c) {
          m[0][c] = FieldElem(ctx.get(), pts[i][c]);
          m[1][c] = FieldElem(ctx.get(), pts[j][c]);
        }
        detail::FoundLine l;
        l.pivots = detail::rref(m);
        l.basis = std::move(m);
        bool seen = false;
        for (const auto& o : lines) seen = seen || detail::same_line(o, l);
        if (seen || !detail::line_in_locus(l, sec_gb, ctx)) continue;
        lines.push_back(std::move(l));
      }
    }
    k_used = k;
    if (static_cast<std::int64_t>(lines.size()) >= out.degree) break;
  }
  // group into Frobenius orbits and intersect each line with the surface
  std::vector<bool> done(lines.size(), false);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit{i};
    detail::FoundLine cur = detail::conjugate(lines[i]);
    while (!detail::same_line(cur, lines[i])) {
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (detail::same_line(cur, lines[j])) orbit.push_back(j);
      }
      cur = detail::conjugate(cur);
    }
    const int r = static_cast<int>(orbit.size());
    std::int64_t ideg = 0;
    int icodim = 0;
    if (r == 1) {
      auto forms = detail::line_forms<F2>(lines[i], ring);
      std::vector<Poly<F2>> gens = mingens;
      gens.insert(gens.end(), forms.begin(), forms.end());
      const HilbertPoly h = hilbert_poly(Ideal<F2>(ring, gens));
      ideg = h.degree();
      icodim = static_cast<int>(ring->nvars()) - h.pole_order();
    } else {
      auto big = make_ring<FieldElem>(ring->names(), MonomialOrder::grevlex(), ctx.get());
      auto forms = detail::line_forms<FieldElem>(lines[i], big);
      std::vector<Poly<FieldElem>> gens;
      for (const auto& g : mingens) gens.push_back(lift_coefficients(g, big));
      gens.insert(gens.end(), forms.begin(), forms.end());
      const HilbertPoly h = hilbert_poly(Ideal<FieldElem>(big, gens));
      ideg = h.degree();
      icodim = static_cast<int>(ring->nvars()) - h.pole_order();
    }
    for (std::size_t j : orbit) {
      done[j] = true;
      SecantLine s;
      if (r == 1) {
        for (const auto& f : detail::line_forms<F2>(lines[j], ring)) s.forms.push_back(f.render());
      } else {
        auto big = make_ring<FieldElem>(ring->names(), MonomialOrder::grevlex(), ctx.get());
        for (const auto& f : detail::line_forms<FieldElem>(lines[j], big)) s.forms.push_back(f.render());
      }
      s.field_degree = r;
      s.enumeration_degree = k_used;
      s.intersection_degree = ideg;
      s.intersection_codim = icodim;
      out.lines.push_back(std::move(s));
    }
  }
  const auto found = static_cast<std::int64_t>(out.lines.size());
  if (found < out.degree) out.unresolved.push_back({out.codim, out.degree - found});
  return out;
}

struct PipelineOptions {
  GbOptions gb;
  bool secants = true;
  std::optional<int> expect_secants;  // a mismatch fails the secants stage
};

struct PipelineResult {
  Stage outcome = Stage::Orbit;
  std::string reason;
  std::vector<int> orbit_degrees;
  std::size_t matrix_rows = 0;
  std::size_t matrix_cols = 0;
  std::size_t matrix_rank = 0;
  std::size_t system_dim = 0;
  std::vector<Poly<F2>> forms;
  std::int64_t baselocus_degree = 0;
  int baselocus_dim = -1;
  Invariants expected{};
  std::optional<Ideal<F2>> surface;
  std::vector<Poly<F2>> mingens;
  std::optional<SurfaceReport> report;
  std::map<std::string, double> timings;
};

/// Runs the stages in order and stops at the first failure; `outcome` is the failing stage
/// or Hit. GB aborts propagate as GbAbort.
inline PipelineResult verify_pipeline(const SurfaceConfig& cfg, const PipelineOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  PipelineResult res;
  auto t0 = clock::now();
  auto lap = [&](const char* name) {
    const auto now = clock::now();
    res.timings[name] = std::chrono::duration<double>(now - t0).count();
    t0 = now;
  };
  auto fail = [&](Stage s, std::string why) {
    res.outcome = s;
    res.reason = std::move(why);
    return res;
  };

  // 1. orbits
  std::vector<OrbitSpec> specs;
  for (const auto& g : cfg.groups) {
    specs.push_back(g.orbit);
    res.orbit_degrees.push_back(static_cast<int>(orbit_points(g.orbit.representative).size()));
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (res.orbit_degrees[i] != specs[i].n) {
      return fail(Stage::Orbit, "orbit " + std::to_string(i) + " has degree " + std::to_string(res.orbit_degrees[i]) +
                                    ", expected " + std::to_string(specs[i].n));
    }
    if (!specs[i].representative.in_z_chart()) return fail(Stage::Orbit, "point outside the chart z = 1");
  }
  try {
    if (!orbits_disjoint(specs)) return fail(Stage::Orbit, "orbits intersect");
  } catch (const PointError& e) {
    return fail(Stage::Orbit, e.what());
  }
  lap("orbit");

  // 2. rank of the condition matrix
  const ConditionMatrix cm = condition_matrix(cfg.a, cfg.groups);
  res.matrix_rows = cm.matrix.rows();
  res.matrix_cols = cm.matrix.cols();
  BitMatrix red = cm.matrix;
  const auto pivots = red.rref();
  res.matrix_rank = pivots.size();
  res.system_dim = res.matrix_cols - res.matrix_rank;
  lap("rank");
  if (res.system_dim != 5) return fail(Stage::Rank, "linear system has dimension " + std::to_string(res.system_dim));
  res.forms = system_basis(cm);

  // 3. base locus
  const HilbertPoly base = hilbert_poly(Ideal<F2>(plane_ring(), res.forms));
  res.baselocus_dim = base.dimension();
  res.baselocus_degree = base.degree();
  lap("baselocus");
  if (res.baselocus_dim > 0) return fail(Stage::Baselocus, "base locus has positive dimension");
  if (res.baselocus_degree != cfg.condition_count()) {
    return fail(Stage::Baselocus, "base locus has degree " + std::to_string(res.baselocus_degree) + ", expected " +
                                      std::to_string(cfg.condition_count()));
  }

  // 4. image
  res.surface = image_ideal(res.forms, opt.gb);
  SurfaceReport rep;
  const HilbertPoly hp = hilbert_poly(*res.surface);
  rep.codim = static_cast<int>(res.surface->ring()->nvars()) - hp.pole_order();
  rep.degree = hp.degree();
  rep.genera = hp.genera();
  res.expected = invariants_from_multiplicities(cfg.a, cfg.multiplicities());
  lap("image");
  if (rep.codim != 2) {
    res.report = rep;
    return fail(Stage::Image, "image has codimension " + std::to_string(rep.codim) + ", not a surface");
  }
  if (rep.degree != res.expected.d || rep.genera.size() != 3 || rep.genera[1] != res.expected.pi) {
    res.report = rep;
    return fail(Stage::Image, "degree or sectional genus differs from the blow-up formulas");
  }

  // 5. smoothness
  res.mingens = minimal_generators(*res.surface);
  for (const auto& g : res.mingens) rep.min_gen_degrees.push_back(g.weighted_degree());
  rep.minor_codim = jacobian_minor_codim(*res.surface, res.mingens, rep.codim);
  rep.smooth = rep.minor_codim >= static_cast<int>(res.surface->ring()->nvars());
  lap("smooth");
  if (!rep.smooth) {
    res.report = rep;
    return fail(Stage::Smooth, "Jacobian minors have codimension " + std::to_string(rep.minor_codim));
  }

  // 6. secants
  if (opt.secants) {
    rep.secants = six_secants(*res.surface, res.mingens, opt.gb);
    lap("secants");
  }
  rep.stage_timings = res.timings;
  res.report = rep;
  if (opt.expect_secants && rep.secant_count() != *opt.expect_secants) {
    return fail(Stage::Secants, "found " + std::to_string(rep.secant_count()) + " secant lines, expected " +
                                    std::to_string(*opt.expect_secants));
  }
  res.outcome = Stage::Hit;
  return res;
}

inline nlohmann::json to_json(const SecantAnalysis& s) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : s.lines) {
    lines.push_back({{"forms", l.forms},
                     {"field_degree", l.field_degree},
                     {"enumeration_degree", l.enumeration_degree},
                     {"intersection_degree", l.intersection_degree},
                     {"intersection_codim", l.intersection_codim}});
  }
  nlohmann::json un = nlohmann::json::array();
  for (const auto& u : s.unresolved) un.push_back({{"codim", u.codim}, {"degree", u.degree}});
  return {{"codim", s.codim}, {"degree", s.degree}, {"count", s.lines.size()}, {"lines", lines}, {"unresolved", un}};
}

inline nlohmann::json to_json(const SurfaceReport& r, bool timings = false) {
  nlohmann::json j{{"codim", r.codim}, {"degree", r.degree}, {"genera", r.genera}};
  if (!r.min_gen_degrees.empty()) {
    j["min_gen_degrees"] = r.min_gen_degrees;
    j["smooth"] = r.smooth;
    j["minor_codim"] = r.minor_codim;
  }
  if (r.secants) j["secants"] = to_json(*r.secants);
  if (timings) j["stage_timings"] = r.stage_timings;
  return j;
}

/// Certificate: inputs, every computed stage value, and the surface equations.
inline nlohmann::json certificate(const SurfaceConfig& cfg, const PipelineResult& res, bool timings = false) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& g : cfg.groups) {
    nlohmann::json p = point_to_json(g.orbit.representative);
    p["orbit"] = g.orbit.n;
    p["mult"] = g.mult;
    pts.push_back(p);
  }
  nlohmann::json j{{"a", cfg.a}, {"points", pts}, {"outcome", stage_name(res.outcome)}};
  if (!res.reason.empty()) j["reason"] = res.reason;
  j["orbit_degrees"] = res.orbit_degrees;
  if (res.matrix_rows > 0) {
    j["matrix"] = {{"rows", res.matrix_rows}, {"cols", res.matrix_cols}, {"rank", res.matrix_rank}};
    j["system_dimension"] = res.system_dim;
  }
  if (!res.forms.empty()) {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& p : res.forms) f.push_back(p.render());
    j["forms"] = f;
    j["baselocus"] = {{"degree", res.baselocus_degree}, {"dimension", res.baselocus_dim},
                      {"expected", cfg.condition_count()}};
  }
  if (res.report) {
    j["surface"] = to_json(*res.report);
    j["surface"]["expected"] = {{"degree", res.expected.d}, {"sectional_genus", res.expected.pi},
                                {"K2", res.expected.k2}};
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& g : res.mingens) eqs.push_back(g.render());
    if (!eqs.empty()) j["surface"]["equations"] = eqs;
  }
  if (timings) j["timings"] = res.timings;
  return j;
}

}  // namespace ratsurf
