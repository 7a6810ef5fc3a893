#pragma once

// Buchberger engine (Gebauer-Moeller pair update, sugar selection) and the ideal toolbox
// built on it: normal forms, intersection, colon, powers, elimination, kernels of ring
// maps and minimal generators of homogeneous ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ratsurf/poly.hpp"

namespace ratsurf {

/// Raised when a configured pair or degree limit is exceeded. Never a partial answer.
class GbAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GbOptions {
  std::size_t max_pairs = 0;  // 0: unlimited
  int max_degree = 0;         // weighted sugar bound, 0: unlimited
};

struct GbStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

namespace detail {

/// Geobucket: a polynomial kept as a sum of sorted term lists of geometrically growing
/// length, so repeated additions during reduction cost O(len log len) overall. Lists are
/// stored in ascending order so the leading term sits at the back.
template <class K>
class Geobucket {
 public:
  explicit Geobucket(const Ring<K>& ring) : ring_(&ring) {}

  /// Adds c * m * terms, where terms is sorted descending.
  void add(typename std::vector<Term<K>>::const_iterator first, typename std::vector<Term<K>>::const_iterator last,
           K c, const Monomial& m) {
    std::vector<Term<K>> s;
    s.reserve(static_cast<std::size_t>(last - first));
    const bool shift = !m.is_one();
    for (auto it = last; it != first;) {
      --it;
      s.push_back({shift ? it->m * m : it->m, it->c * c});
    }
    insert(std::move(s));
  }

  /// Removes and returns the leading term; false when the polynomial is zero.
  bool pop_lead(Term<K>& out) {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i].empty()) continue;
        if (best < 0 || ring_->compare(b_[i].back().m, b_[static_cast<std::size_t>(best)].back().m) > 0) {
          best = static_cast<int>(i);
        }
      }
      if (best < 0) return false;
      Term<K> t = b_[static_cast<std::size_t>(best)].back();
      b_[static_cast<std::size_t>(best)].pop_back();
      for (std::size_t i = 0; i < b_.size(); ++i) {
        if (static_cast<int>(i) == best || b_[i].empty() || !(b_[i].back().m == t.m)) continue;
        t.c = t.c + b_[i].back().c;
        b_[i].pop_back();
      }
      if (!t.c.is_zero()) {
        out = t;
        return true;
      }
    }
  }

 private:
  static std::size_t slot_for(std::size_t n) {
    std::size_t i = 0, cap = 16;
    while (n > cap) {
      cap *= 4;
      ++i;
    }
    return i;
  }

  void insert(std::vector<Term<K>> s) {
    std::size_t i = slot_for(s.size());
    for (;;) {
      if (b_.size() <= i) b_.resize(i + 1);
      if (b_[i].empty()) {
        b_[i] = std::move(s);
        return;
      }
      s = merge_ascending(b_[i], s);
      b_[i].clear();
      const std::size_t j = slot_for(s.size());
      if (j <= i) {
        b_[i] = std::move(s);
        return;
      }
      i = j;
    }
  }

  std::vector<Term<K>> merge_ascending(const std::vector<Term<K>>& a, const std::vector<Term<K>>& b) const {
    std::vector<Term<K>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      const int cmp = ring_->compare(a[i].m, b[j].m);
      if (cmp < 0) {
        out.push_back(a[i++]);
      } else if (cmp > 0) {
        out.push_back(b[j++]);
      } else {
        K s = a[i].c + b[j].c;
        if (!s.is_zero()) out.push_back({a[i].m, s});
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
  }

  const Ring<K>* ring_;
  std::vector<std::vector<Term<K>>> b_;
};

template <class K>
class Buchberger {
 public:
  Buchberger(RingPtr<K> ring, GbOptions opt) : ring_(std::move(ring)), opt_(opt) {}

  std::vector<Poly<K>> run(const std::vector<Poly<K>>& gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      inputs_.push_back(g.terms());
      queue_.push_back(Item{-1, static_cast<int>(inputs_.size() - 1), g.lead(), sugar_of(g.terms())});
    }
    while (!queue_.empty()) {
      const std::size_t k = select();
      Item it = queue_[k];
      queue_[k] = queue_.back();
      queue_.pop_back();
      if (opt_.max_degree > 0 && it.sugar > opt_.max_degree) {
        throw GbAbort("Groebner basis degree limit " + std::to_string(opt_.max_degree) + " exceeded");
      }
      if (opt_.max_pairs > 0 && stats_.pairs_processed >= opt_.max_pairs) {
        throw GbAbort("Groebner basis pair limit " + std::to_string(opt_.max_pairs) + " exceeded");
      }
      ++stats_.pairs_processed;
      std::vector<Term<K>> f;
      int sugar = it.sugar;
      if (it.i < 0) {
        f = inputs_[static_cast<std::size_t>(it.j)];
      } else {
        f = spoly(elems_[static_cast<std::size_t>(it.i)], elems_[static_cast<std::size_t>(it.j)]);
      }
      f = reduce(f, sugar);
      if (f.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      make_monic(f);
      if (f.front().m.is_one()) {
        // unit ideal
        elems_.clear();
        live_.clear();
        queue_.clear();
        add(std::move(f), sugar);
        break;
      }
      add(std::move(f), sugar);
    }
    return finish();
  }

  const GbStats& stats() const { return stats_; }

 private:
  struct Elem {
    std::vector<Term<K>> t;
    Monomial lead;
    std::uint32_t mask;
    int sugar;
  };
  struct Item {
    int i;  // -1 marks an input generator with index j
    int j;
    Monomial lcm;
    int sugar;
  };

  int sugar_of(const std::vector<Term<K>>& t) const {
    int d = 0;
    for (const auto& x : t) d = std::max(d, ring_->weighted_degree(x.m));
    return d;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k) {
      const Item& a = queue_[k];
      const Item& b = queue_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = ring_->compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j))) best = k;
    }
    return best;
  }

  std::vector<Term<K>> spoly(const Elem& a, const Elem& b) const {
    const Monomial l = lcm(a.lead, b.lead);
    const Monomial qa = a.lead.quotient_of(l);
    const Monomial qb = b.lead.quotient_of(l);
    // a, b are monic
    std::vector<Term<K>> ta;
    ta.reserve(a.t.size());
    for (std::size_t k = 1; k < a.t.size(); ++k) ta.push_back({a.t[k].m * qa, a.t[k].c});
    std::vector<Term<K>> tb(b.t.begin() + 1, b.t.end());
    return Poly<K>::merge(*ring_, ta, tb, -ring_->one(), qb);
  }

  const Elem* find_reducer(const Monomial& m) const {
    const std::uint32_t mm = m.support_mask();
    for (std::size_t idx : live_) {
      const Elem& e = elems_[idx];
      if ((e.mask & ~mm) != 0) continue;
      if (e.lead.divides(m)) return &e;
    }
    return nullptr;
  }

  /// Full reduction: no term of the result is divisible by a live leading monomial.
  std::vector<Term<K>> reduce(const std::vector<Term<K>>& f, int& sugar) const {
    Geobucket<K> bucket(*ring_);
    bucket.add(f.begin(), f.end(), ring_->one(), Monomial{});
    std::vector<Term<K>> rest;
    Term<K> lt;
    while (bucket.pop_lead(lt)) {
      const Elem* g = find_reducer(lt.m);
      if (g == nullptr) {
        rest.push_back(lt);
        continue;
      }
      const Monomial q = g->lead.quotient_of(lt.m);
      sugar = std::max(sugar, g->sugar + ring_->weighted_degree(q));
      bucket.add(g->t.begin() + 1, g->t.end(), -lt.c, q);  // g monic
    }
    return rest;
  }

  static void make_monic(std::vector<Term<K>>& f) {
    if (f.empty() || f.front().c.is_one()) return;
    const K inv = f.front().c.inv();
    for (auto& t : f) t.c = t.c * inv;
  }

  void add(std::vector<Term<K>> f, int sugar) {
    Elem h{std::move(f), {}, 0, sugar};
    h.lead = h.t.front().m;
    h.mask = h.lead.support_mask();
    const int hi = static_cast<int>(elems_.size());
    elems_.push_back(std::move(h));
    const Elem& H = elems_.back();

    // Gebauer-Moeller: prune old pairs by the chain criterion
    std::vector<Item> kept;
    kept.reserve(queue_.size());
    for (const auto& p : queue_) {
      if (p.i >= 0 && H.lead.divides(p.lcm)) {
        const Monomial li = lcm(elems_[static_cast<std::size_t>(p.i)].lead, H.lead);
        const Monomial lj = lcm(elems_[static_cast<std::size_t>(p.j)].lead, H.lead);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    queue_ = std::move(kept);

    // new pairs with M/F criteria, then product criterion
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
      bool alive;
    };
    std::vector<Cand> cands;
    for (std::size_t idx : live_) {
      const Elem& g = elems_[idx];
      cands.push_back({static_cast<int>(idx), lcm(g.lead, H.lead), coprime(g.lead, H.lead), true});
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].alive) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          // equal lcms: the earlier candidate survives
          if (cands[b].lcm == cands[a].lcm && !cands[b].coprime && b > a) continue;
          cands[a].alive = false;
          break;
        }
      }
    }
    for (const auto& c : cands) {
      if (!c.alive || c.coprime) continue;
      const Elem& g = elems_[static_cast<std::size_t>(c.g)];
      const int s = std::max(g.sugar + ring_->weighted_degree(g.lead.quotient_of(c.lcm)),
                             H.sugar + ring_->weighted_degree(H.lead.quotient_of(c.lcm)));
      queue_.push_back(Item{c.g, hi, c.lcm, s});
    }

    std::vector<std::size_t> live;
    for (std::size_t idx : live_) {
      if (!H.lead.divides(elems_[idx].lead)) live.push_back(idx);
    }
    live.push_back(static_cast<std::size_t>(hi));
    live_ = std::move(live);
  }

  std::vector<Poly<K>> finish() {
    stats_.basis_size = live_.size();
    std::vector<Poly<K>> out;
    out.reserve(live_.size());
    for (std::size_t idx : live_) {
      Elem& e = elems_[idx];
      std::vector<Term<K>> tail(e.t.begin() + 1, e.t.end());
      int sugar = e.sugar;
      // tail-reduce against the other live elements (leads are pairwise non-dividing)
      std::vector<Term<K>> red = reduce(tail, sugar);
      std::vector<Term<K>> full;
      full.reserve(red.size() + 1);
      full.push_back(e.t.front());
      full.insert(full.end(), red.begin(), red.end());
      out.push_back(Poly<K>::from_sorted(ring_, std::move(full)));
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly<K>& a, const Poly<K>& b) { return ring_->compare(a.lead(), b.lead()) < 0; });
    return out;
  }

  RingPtr<K> ring_;
  GbOptions opt_;
  GbStats stats_;
  std::vector<std::vector<Term<K>>> inputs_;
  std::vector<Elem> elems_;
  std::vector<std::size_t> live_;
  std::vector<Item> queue_;
};

template <class K>
void check_same_ring(const std::vector<Poly<K>>& polys, const RingPtr<K>& ring) {
  for (const auto& p : polys) {
    if (p.ring() != ring && !p.ring()->same_as(*ring)) throw RingError("generators lie in different rings");
  }
}

}  // namespace detail

/// Reduced, monic Groebner basis of the ideal generated by gens in `ring`'s order, sorted
/// by ascending leading monomial.
template <class K>
std::vector<Poly<K>> groebner_basis(const RingPtr<K>& ring, const std::vector<Poly<K>>& gens,
                                    const GbOptions& opt = {}, GbStats* stats = nullptr) {
  detail::check_same_ring(gens, ring);
  detail::Buchberger<K> engine(ring, opt);
  auto out = engine.run(gens);
  if (stats != nullptr) *stats = engine.stats();
  return out;
}

/// Remainder of f on division by a Groebner basis (no term divisible by a leading term).
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& gb) {
  const Ring<K>& ring = *f.ring();
  detail::Geobucket<K> bucket(ring);
  bucket.add(f.terms().begin(), f.terms().end(), ring.one(), Monomial{});
  std::vector<Term<K>> rest;
  Term<K> lt;
  while (bucket.pop_lead(lt)) {
    const Poly<K>* g = nullptr;
    for (const auto& cand : gb) {
      if (cand.lead().divides(lt.m)) {
        g = &cand;
        break;
      }
    }
    if (g == nullptr) {
      rest.push_back(lt);
      continue;
    }
    const Monomial q = g->lead().quotient_of(lt.m);
    const K c = lt.c * g->lead_coeff().inv();
    bucket.add(g->terms().begin() + 1, g->terms().end(), -c, q);
  }
  return Poly<K>::from_sorted(f.ring(), std::move(rest));
}

/// Ideal with a lazily computed, cached Groebner basis in its ring's order.
template <class K>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<K> ring, std::vector<Poly<K>> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    detail::check_same_ring(gens_, ring_);
    gens_.erase(std::remove_if(gens_.begin(), gens_.end(), [](const Poly<K>& p) { return p.is_zero(); }),
                gens_.end());
    cache_ = std::make_shared<Cache>();
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Poly<K>>& generators() const { return gens_; }

  const std::vector<Poly<K>>& gb(const GbOptions& opt = {}) const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->basis) cache_->basis = groebner_basis(ring_, gens_, opt);
    return *cache_->basis;
  }

  bool has_gb() const {
    std::lock_guard lock(cache_->mu);
    return cache_->basis.has_value();
  }

  /// Installs a basis known to be a reduced Groebner basis of this ideal.
  void set_gb(std::vector<Poly<K>> basis) const {
    std::lock_guard lock(cache_->mu);
    cache_->basis = std::move(basis);
  }

  Poly<K> normal_form(const Poly<K>& f) const { return ratsurf::normal_form(f, gb()); }
  bool contains(const Poly<K>& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& o) const {
    return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Poly<K>& f) { return contains(f); });
  }
  bool is_unit() const {
    const auto& g = gb();
    return g.size() == 1 && g[0].lead().is_one();
  }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Poly<K>& f) { return f.is_homogeneous(); });
  }

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : gb()) out.push_back(g.lead());
    return out;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Poly<K>>> basis;
  };
  RingPtr<K> ring_;
  std::vector<Poly<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Equality of ideals via reduced Groebner bases.
template <class K>
bool same_ideal(const Ideal<K>& a, const Ideal<K>& b) {
  const auto& ga = a.gb();
  const auto& gb = b.gb();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i] == gb[i])) return false;
  }
  return true;
}

namespace detail {

/// Ring with `extra` new variables prepended and a block order eliminating them.
template <class K>
RingPtr<K> prepend_vars(const Ring<K>& base, const std::vector<std::string>& extra,
                        const std::vector<int>& extra_weights) {
  std::vector<std::string> names = extra;
  names.insert(names.end(), base.names().begin(), base.names().end());
  std::vector<int> w = extra_weights;
  w.insert(w.end(), base.weights().begin(), base.weights().end());
  return make_ring<K>(std::move(names), MonomialOrder::block_order(static_cast<int>(extra.size())), base.ctx(),
                      std::move(w));
}

template <class K>
std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), by);
  return m;
}

/// Keeps the basis elements free of the first k variables and maps them back to `target`,
/// whose variables are the remaining ones in order.
template <class K>
std::vector<Poly<K>> filter_eliminated(const std::vector<Poly<K>>& basis, std::size_t k, const RingPtr<K>& target) {
  std::vector<Poly<K>> out;
  const std::size_t n = basis.empty() ? 0 : basis[0].ring()->nvars();
  std::vector<std::size_t> back(n, 0);
  for (std::size_t i = k; i < n; ++i) back[i] = i - k;
  for (const auto& g : basis) {
    bool free = true;
    for (std::size_t i = 0; i < k && free; ++i) {
      if (g.lead().e[i] != 0) free = false;
    }
    if (!free) continue;
    out.push_back(g.relabel(target, back));
  }
  return out;
}

template <class K>
bool all_homogeneous(const std::vector<Poly<K>>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const Poly<K>& p) { return p.is_homogeneous(); });
}

}  // namespace detail

/// I1 ∩ I2 by eliminating s from s*I1 + (1+s)*I2.
template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b, const GbOptions& opt = {}) {
  const RingPtr<K>& ring = a.ring();
  if (!ring->same_as(*b.ring())) throw RingError("intersect: ideals in different rings");
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal<K>(ring, {});
  const bool homog = a.is_homogeneous() && b.is_homogeneous();
  auto big = detail::prepend_vars(*ring, {"s_"}, {homog ? 0 : 1});
  const auto map = detail::shift_map<K>(ring->nvars(), 1);
  const Poly<K> s = Poly<K>::var(big, 0);
  const Poly<K> one_plus_s = Poly<K>::one(big) + s;
  std::vector<Poly<K>> gens;
  for (const auto& f : a.generators()) gens.push_back(s * f.relabel(big, map));
  for (const auto& g : b.generators()) gens.push_back(one_plus_s * g.relabel(big, map));
  auto basis = groebner_basis(big, gens, opt);
  auto kept = detail::filter_eliminated(basis, 1, ring);
  Ideal<K> out(ring, kept);
  // elimination preserves reducedness for block orders whose tail block is the ring's order
  if (ring->order() == MonomialOrder::grevlex() || ring->order().kind == MonomialOrder::Kind::Grevlex) {
    out.set_gb(std::move(kept));
  }
  return out;
}

template <class K>
Ideal<K> intersect(const std::vector<Ideal<K>>& ideals, const GbOptions& opt = {}) {
  if (ideals.empty()) throw RingError("intersect: empty list");
  Ideal<K> acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i], opt);
  return acc;
}

/// Exact quotient f / g; throws if g does not divide f.
template <class K>
Poly<K> exact_divide(const Poly<K>& f, const Poly<K>& g) {
  if (g.is_zero()) throw RingError("division by zero polynomial");
  const Ring<K>& ring = *f.ring();
  std::vector<Term<K>> rem = f.terms();
  std::vector<Term<K>> quot;
  const K inv = g.lead_coeff().inv();
  std::vector<Term<K>> gtail(g.terms().begin() + 1, g.terms().end());
  while (!rem.empty()) {
    if (!g.lead().divides(rem.front().m)) throw RingError("exact_divide: not divisible");
    const Monomial q = g.lead().quotient_of(rem.front().m);
    const K c = rem.front().c * inv;
    quot.push_back({q, c});
    std::vector<Term<K>> head(rem.begin() + 1, rem.end());
    rem = Poly<K>::merge(ring, head, gtail, -c, q);
  }
  return Poly<K>::from_sorted(f.ring(), std::move(quot));
}

/// Colon ideal I : J = ∩_g (I : g) over generators g of J, with I : g = (I ∩ (g)) / g.
template <class K>
Ideal<K> quotient(const Ideal<K>& i, const Ideal<K>& j, const GbOptions& opt = {}) {
  const RingPtr<K>& ring = i.ring();
  if (!ring->same_as(*j.ring())) throw RingError("quotient: ideals in different rings");
  if (j.is_zero_ideal()) return Ideal<K>(ring, {Poly<K>::one(ring)});
  std::optional<Ideal<K>> acc;
  for (const auto& g : j.generators()) {
    Ideal<K> ig = intersect(i, Ideal<K>(ring, {g}), opt);
    std::vector<Poly<K>> gens;
    for (const auto& h : ig.generators()) gens.push_back(exact_divide(h, g));
    Ideal<K> part(ring, std::move(gens));
    acc = acc ? intersect(*acc, part, opt) : part;
  }
  return *acc;
}

/// Ordinary ideal power by products of generators.
template <class K>
Ideal<K> power(const Ideal<K>& ideal, unsigned k) {
  if (k == 0) throw RingError("power: exponent must be positive");
  std::vector<Poly<K>> cur = ideal.generators();
  const auto& base = ideal.generators();
  // multisets of generator indices, non-decreasing
  std::vector<std::pair<std::size_t, Poly<K>>> level;
  for (std::size_t a = 0; a < base.size(); ++a) level.push_back({a, base[a]});
  for (unsigned step = 1; step < k; ++step) {
    std::vector<std::pair<std::size_t, Poly<K>>> next;
    for (const auto& [last, p] : level) {
      for (std::size_t a = last; a < base.size(); ++a) next.push_back({a, p * base[a]});
    }
    level = std::move(next);
  }
  std::vector<Poly<K>> gens;
  for (auto& [idx, p] : level) gens.push_back(std::move(p));
  return Ideal<K>(ideal.ring(), std::move(gens));
}

/// Sum of ideals.
template <class K>
Ideal<K> operator+(const Ideal<K>& a, const Ideal<K>& b) {
  std::vector<Poly<K>> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<K>(a.ring(), std::move(gens));
}

/// I ∩ K[remaining variables], via a block order placing `vars` first. The result lives in
/// a ring of the remaining variables (names and weights kept, grevlex).
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::string>& vars, RingPtr<K> target = nullptr,
                   const GbOptions& opt = {}) {
  const Ring<K>& ring = *ideal.ring();
  std::vector<std::size_t> elim, keep;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    const bool e = std::find(vars.begin(), vars.end(), ring.name(i)) != vars.end();
    (e ? elim : keep).push_back(i);
  }
  if (elim.size() != vars.size()) throw RingError("eliminate: unknown variable");
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::size_t> map(ring.nvars());
  for (std::size_t pos = 0; pos < elim.size(); ++pos) {
    map[elim[pos]] = pos;
    names.push_back(ring.name(elim[pos]));
    weights.push_back(ring.weights()[elim[pos]]);
  }
  std::vector<std::string> keep_names;
  std::vector<int> keep_weights;
  for (std::size_t pos = 0; pos < keep.size(); ++pos) {
    map[keep[pos]] = elim.size() + pos;
    names.push_back(ring.name(keep[pos]));
    weights.push_back(ring.weights()[keep[pos]]);
    keep_names.push_back(ring.name(keep[pos]));
    keep_weights.push_back(ring.weights()[keep[pos]]);
  }
  auto big = make_ring<K>(names, MonomialOrder::block_order(static_cast<int>(elim.size())), ring.ctx(), weights);
  if (!target) target = make_ring<K>(keep_names, MonomialOrder::grevlex(), ring.ctx(), keep_weights);
  std::vector<Poly<K>> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.relabel(big, map));
  auto basis = groebner_basis(big, gens, opt);
  auto kept = detail::filter_eliminated(basis, elim.size(), target);
  Ideal<K> out(target, kept);
  if (target->order().kind == MonomialOrder::Kind::Grevlex) out.set_gb(std::move(kept));
  return out;
}

class MapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Kernel of target -> source, target variable i |-> images[i]. Images must be homogeneous
/// of one common degree d; the graph ideal (y_i - f_i) is weighted homogeneous with the
/// target variables in weight d, and the source variables are eliminated.
template <class K>
Ideal<K> kernel_of_map(const std::vector<Poly<K>>& images, const RingPtr<K>& target, const GbOptions& opt = {}) {
  if (images.size() != target->nvars()) throw MapError("kernel_of_map: one image per target variable required");
  if (images.empty()) throw MapError("kernel_of_map: no images");
  const RingPtr<K>& source = images[0].ring();
  int d = -1;
  for (const auto& f : images) {
    if (!f.ring()->same_as(*source)) throw MapError("kernel_of_map: images in different rings");
    if (!f.is_homogeneous()) throw MapError("kernel_of_map: image is not homogeneous");
    if (f.is_zero()) continue;
    if (d < 0) d = f.weighted_degree();
    if (f.weighted_degree() != d) throw MapError("kernel_of_map: images have different degrees");
  }
  if (d < 0) d = 1;
  std::vector<std::string> names = source->names();
  std::vector<int> weights = source->weights();
  for (std::size_t i = 0; i < target->nvars(); ++i) {
    names.push_back(target->name(i));
    weights.push_back(d);
  }
  auto big = make_ring<K>(names, MonomialOrder::block_order(static_cast<int>(source->nvars())), source->ctx(),
                          weights);
  const auto smap = detail::shift_map<K>(source->nvars(), 0);
  std::vector<Poly<K>> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    gens.push_back(Poly<K>::var(big, source->nvars() + i) - images[i].relabel(big, smap));
  }
  auto basis = groebner_basis(big, gens, opt);
  auto kept = detail::filter_eliminated(basis, source->nvars(), target);
  Ideal<K> out(target, kept);
  if (target->order().kind == MonomialOrder::Kind::Grevlex) out.set_gb(std::move(kept));
  return out;
}

namespace detail {

/// Incremental row echelon form over K of vectors indexed by monomials.
template <class K>
class LinearSpan {
 public:
  explicit LinearSpan(RingPtr<K> ring) : ring_(std::move(ring)) {}

  /// Reduces p against the span; returns the reduced form (zero iff p is in the span).
  Poly<K> reduce(const Poly<K>& p) const {
    Poly<K> cur = p;
    bool changed = true;
    while (changed && !cur.is_zero()) {
      changed = false;
      // eliminate every term that is a pivot, highest first
      for (const auto& t : cur.terms()) {
        auto it = pivots_.find(t.m);
        if (it == pivots_.end()) continue;
        const Poly<K>& row = rows_[it->second];
        cur = cur - row.scaled(t.c * row.coeff(t.m).inv());
        changed = true;
        break;
      }
    }
    return cur;
  }

  /// Adds p; returns true if it extended the span.
  bool add(const Poly<K>& p) {
    Poly<K> r = reduce(p);
    if (r.is_zero()) return false;
    // pivot on the leading monomial; the row has no other pivot monomials
    r = r.monic();
    pivots_.emplace(r.lead(), rows_.size());
    rows_.push_back(r);
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  RingPtr<K> ring_;
  std::vector<Poly<K>> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivots_;
};

}  // namespace detail

/// Degree-graded minimal generating set of a homogeneous ideal: by ascending degree, keeps
/// each reduced-basis element not in the span of the degree-d part of the ideal generated by
/// the elements already kept.
template <class K>
std::vector<Poly<K>> minimal_generators(const Ideal<K>& ideal) {
  if (!ideal.is_homogeneous()) throw RingError("minimal_generators: ideal is not homogeneous");
  const RingPtr<K>& ring = ideal.ring();
  std::vector<Poly<K>> cands = ideal.gb();
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Poly<K>& a, const Poly<K>& b) { return a.weighted_degree() < b.weighted_degree(); });
  std::vector<Poly<K>> kept;
  std::size_t i = 0;
  while (i < cands.size()) {
    const int d = cands[i].weighted_degree();
    detail::LinearSpan<K> span(ring);
    for (const auto& g : kept) {
      const int gd = g.weighted_degree();
      if (gd >= d) continue;
      for (const auto& m : monomials_of_degree(*ring, d - gd)) {
        if (ring->weighted_degree(m) != d - gd) continue;
        span.add(g.mul_term(m, ring->one()));
      }
    }
    std::vector<Poly<K>> kept_here;
    for (; i < cands.size() && cands[i].weighted_degree() == d; ++i) {
      if (span.add(cands[i])) kept_here.push_back(cands[i]);
    }
    kept.insert(kept.end(), kept_here.begin(), kept_here.end());
  }
  return kept;
}

}  // namespace ratsurf
