#include "diq/groebner.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "diq/error.hpp"
#include "diq/ideal_ops.hpp"

namespace diq {
namespace {

struct Reducer {
  const Polynomial* poly;
  std::uint64_t mask;
};

const Reducer* find_reducer(const std::vector<Reducer>& reducers, const Monomial& m) {
  const std::uint64_t mask = m.support();
  for (const auto& r : reducers) {
    if ((r.mask & ~mask) != 0) continue;
    if (r.poly->leading_monomial().divides(m)) return &r;
  }
  return nullptr;
}

// Full reduction of `p` (already sorted under `order`) by `reducers`,
// whose polynomials are sorted under the same order.
Polynomial reduce_full(const Polynomial& p, const std::vector<Reducer>& reducers,
                       const OrderPtr& order) {
  const auto& field = p.ring()->field();
  const MonomialOrder& ord = *order;
  std::vector<Term> work = p.terms();
  std::vector<Term> rem;
  std::size_t pos = 0;
  std::vector<Term> next;
  while (pos < work.size()) {
    const Reducer* r = find_reducer(reducers, work[pos].mono);
    if (r == nullptr) {
      rem.push_back(std::move(work[pos]));
      ++pos;
      continue;
    }
    const Polynomial& g = *r->poly;
    const auto& gt = g.terms();
    Coeff c = field.div(work[pos].coeff, gt.front().coeff);
    Monomial m = work[pos].mono / gt.front().mono;
    // Leading terms cancel; merge the tails.
    next.clear();
    next.reserve(work.size() - pos + gt.size());
    std::size_t i = pos + 1;
    std::size_t j = 1;
    while (i < work.size() && j < gt.size()) {
      Monomial bm = gt[j].mono * m;
      auto cmp = ord.compare(work[i].mono, bm);
      while (cmp == std::strong_ordering::greater) {
        next.push_back(std::move(work[i++]));
        if (i == work.size()) break;
        cmp = ord.compare(work[i].mono, bm);
      }
      if (i == work.size()) {
        next.push_back({field.neg(field.mul(c, gt[j].coeff)), std::move(bm)});
        ++j;
        break;
      }
      if (cmp == std::strong_ordering::less) {
        next.push_back({field.neg(field.mul(c, gt[j].coeff)), std::move(bm)});
        ++j;
      } else {
        Coeff s = field.sub(work[i].coeff, field.mul(c, gt[j].coeff));
        if (s != 0) next.push_back({std::move(s), std::move(work[i].mono)});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) next.push_back(std::move(work[i]));
    for (; j < gt.size(); ++j) {
      next.push_back({field.neg(field.mul(c, gt[j].coeff)), gt[j].mono * m});
    }
    std::swap(work, next);
    pos = 0;
  }
  return Polynomial(p.ring(), order, std::move(rem));
}

std::vector<Polynomial> sorted_copies(std::span<const Polynomial> polys, const OrderPtr& order) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    if (!p.is_zero()) out.push_back(p.with_order(order));
  }
  return out;
}

std::vector<Reducer> make_reducers(const std::vector<Polynomial>& polys) {
  std::vector<Reducer> rs;
  rs.reserve(polys.size());
  for (const auto& p : polys) rs.push_back({&p, p.leading_monomial().support()});
  return rs;
}

std::uint64_t mask_of(const std::vector<std::size_t>& vars) {
  std::uint64_t m = 0;
  for (std::size_t v : vars) m |= std::uint64_t{1} << v;
  return m;
}

Basis unit_basis(const RingPtr& ring, const OrderPtr& order) {
  return {Polynomial::constant(ring, Coeff(1)).with_order(order)};
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, OrderPtr order) : ring_(std::move(ring)), order_(std::move(order)) {}

  // Returns false once the unit ideal is detected.
  bool add_generator(const Polynomial& f) {
    Polynomial h = reduce_full(f.with_order(order_), reducers(), order_);
    return insert(h);
  }

  bool run() {
    while (!pairs_.empty()) {
      const std::size_t k = select();
      Pair p = std::move(pairs_[k]);
      pairs_[k] = std::move(pairs_.back());
      pairs_.pop_back();
      Polynomial s = s_polynomial(basis_[p.i], basis_[p.j]);
      Polynomial h = reduce_full(s, reducers(), order_);
      if (!insert(h)) return false;
    }
    return true;
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) out.push_back(basis_[i]);
    }
    return out;
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t seq;
  };
  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };

  const std::vector<Reducer>& reducers() {
    if (dirty_) {
      reducers_.clear();
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (active_[i]) reducers_.push_back({&basis_[i], basis_[i].leading_monomial().support()});
      }
      dirty_ = false;
    }
    return reducers_;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      auto c = order_->compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c == std::strong_ordering::less ||
          (c == std::strong_ordering::equal && pairs_[k].seq < pairs_[best].seq)) {
        best = k;
      }
    }
    return best;
  }

  // Gebauer-Möller update with the new (reduced, nonzero) polynomial h.
  bool insert(const Polynomial& reduced) {
    if (reduced.is_zero()) return true;
    if (reduced.is_constant()) return false;
    Polynomial h = reduced.monic();
    const Monomial& lh = h.leading_monomial();
    const std::size_t hidx = basis_.size();

    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = basis_[g].leading_monomial();
      cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Candidate> kept;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      bool keep = cands[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < cands.size() && keep; ++l) {
          if (cands[l].lcm.divides(cands[k].lcm)) keep = false;
        }
        for (std::size_t l = 0; l < kept.size() && keep; ++l) {
          if (kept[l].lcm.divides(cands[k].lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(std::move(cands[k]));
    }

    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(basis_[p.i].leading_monomial().lcm(lh) == p.lcm) &&
                        !(basis_[p.j].leading_monomial().lcm(lh) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    for (auto& c : kept) {
      if (!c.coprime) survivors.push_back({c.g, hidx, std::move(c.lcm), seq_++});
    }
    pairs_ = std::move(survivors);

    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
    }
    // reducers_ points into basis_ and is rebuilt after every insertion.
    basis_.push_back(std::move(h));
    active_.push_back(true);
    dirty_ = true;
    return true;
  }

  RingPtr ring_;
  OrderPtr order_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Reducer> reducers_;
  bool dirty_ = true;
  std::uint64_t seq_ = 0;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const OrderPtr& order) {
  std::vector<Polynomial> polys = sorted_copies(basis, order);
  for (const auto& p : polys) {
    if (!same_ring(p.ring(), f.ring())) throw ContextMismatch("normal_form: ring mismatch");
  }
  return reduce_full(f.with_order(order), make_reducers(polys), order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& field = f.ring()->field();
  const Polynomial gg = g.with_order(f.order());
  const Monomial l = f.leading_monomial().lcm(gg.leading_monomial());
  Polynomial a = f.mul_term(field.inv(f.leading_coeff()), l / f.leading_monomial());
  return a.sub_mul(field.inv(gg.leading_coeff()), l / gg.leading_monomial(), gg);
}

Basis buchberger(std::span<const Polynomial> gens, const OrderPtr& order) {
  if (gens.empty()) return {};
  const RingPtr& ring = gens.front().ring();
  Buchberger bb(ring, order);
  for (const auto& f : gens) {
    if (!same_ring(f.ring(), ring)) throw ContextMismatch("buchberger: ring mismatch");
    if (f.is_zero()) continue;
    if (!bb.add_generator(f)) return unit_basis(ring, order);
  }
  if (!bb.run()) return unit_basis(ring, order);
  return reduce_basis(bb.active(), order);
}

Basis reduce_basis(std::span<const Polynomial> groebner_basis, const OrderPtr& order) {
  std::vector<Polynomial> polys;
  for (const auto& p : groebner_basis) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return unit_basis(p.ring(), order);
    polys.push_back(p.with_order(order).monic());
  }
  const MonomialOrder& ord = *order;
  std::stable_sort(polys.begin(), polys.end(), [&ord](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : polys) {
    bool redundant = false;
    for (const auto& q : minimal) {
      if (q.leading_monomial().divides(p.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(p));
  }
  Basis out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Reducer> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back({&minimal[l], minimal[l].leading_monomial().support()});
    }
    out.push_back(reduce_full(minimal[k], others, order));
  }
  std::sort(out.begin(), out.end(), [&ord](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return out;
}

bool is_member(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw ContextMismatch("is_member: ring mismatch");
  if (f.is_zero()) return true;
  const Basis& g = ideal.basis();
  if (g.empty()) return false;
  const OrderPtr& ord = ideal.ring()->default_order();
  return reduce_full(f.with_order(ord), make_reducers(g), ord).is_zero();
}

bool contains(const Ideal& big, const Ideal& small) {
  if (!same_ring(big.ring(), small.ring())) throw ContextMismatch("contains: ring mismatch");
  const Basis& g = big.basis();
  if (g.size() == 1 && g.front().is_constant()) return true;
  const OrderPtr& ord = big.ring()->default_order();
  const auto reducers = make_reducers(g);
  for (const auto& f : small.generators()) {
    if (g.empty()) return false;
    if (!reduce_full(f.with_order(ord), reducers, ord).is_zero()) return false;
  }
  return true;
}

bool equals(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw ContextMismatch("equals: ring mismatch");
  const Basis& ga = a.basis();
  const Basis& gb = b.basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i] == gb[i])) return false;
  }
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars) {
  const RingPtr& ring = ideal.ring();
  for (std::size_t v : vars) {
    if (v >= ring->nvars()) throw PreconditionError("eliminate: variable index out of range");
  }
  if (vars.empty()) return ideal;
  auto order = std::make_shared<const MonomialOrder>(
      MonomialOrder::elimination(ring->nvars(), vars));
  const Basis& g = ideal.basis(order);
  const std::uint64_t mask = mask_of(vars);
  std::vector<Polynomial> kept;
  for (const auto& p : g) {
    if ((p.support() & mask) == 0) kept.push_back(p);
  }
  Ideal result(ring, kept);
  // The back block is grevlex in natural order, which agrees with the
  // ring's default order on monomials free of `vars`.
  result.seed_basis(ring->default_order(), reduce_basis(kept, ring->default_order()));
  return result;
}

bool is_independent(const Ideal& ideal, const std::vector<std::size_t>& vars) {
  const std::uint64_t u = mask_of(vars);
  for (const auto& g : ideal.basis()) {
    if ((g.leading_monomial().support() & ~u) == 0) return false;
  }
  return true;
}

MisResult dimension(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::uint64_t> lms;
  for (const auto& g : ideal.basis()) lms.push_back(g.leading_monomial().support());
  auto independent = [&lms](std::uint64_t u) {
    for (std::uint64_t m : lms) {
      if ((m & ~u) == 0) return false;
    }
    return true;
  };
  if (!independent(0)) return {};
  std::vector<std::size_t> combo;
  std::optional<std::vector<std::size_t>> found;
  // Combinations of size k in lexicographic order; first hit wins.
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> search =
      [&](std::size_t start, std::size_t k, std::uint64_t mask) -> bool {
    if (k == 0) {
      if (independent(mask)) {
        found = combo;
        return true;
      }
      return false;
    }
    for (std::size_t v = start; v + k <= n; ++v) {
      const std::uint64_t next = mask | (std::uint64_t{1} << v);
      // Independence is inherited by subsets, so prune dependent prefixes.
      if (!independent(next)) continue;
      combo.push_back(v);
      if (search(v + 1, k - 1, next)) return true;
      combo.pop_back();
    }
    return false;
  };
  for (std::size_t k = n; k > 0; --k) {
    combo.clear();
    if (search(0, k, 0)) return {*found, static_cast<int>(k)};
  }
  return {{}, 0};
}

std::vector<std::vector<std::size_t>> all_mis(const Ideal& ideal) {
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::uint64_t> lms;
  for (const auto& g : ideal.basis()) lms.push_back(g.leading_monomial().support());
  auto independent = [&lms](std::uint64_t u) {
    for (std::uint64_t m : lms) {
      if ((m & ~u) == 0) return false;
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> out;
  if (!independent(0)) return out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t v, std::uint64_t mask) {
    if (v == n) {
      for (std::size_t w = 0; w < n; ++w) {
        if (!(mask >> w & 1) && independent(mask | (std::uint64_t{1} << w))) return;
      }
      out.push_back(current);
      return;
    }
    const std::uint64_t with = mask | (std::uint64_t{1} << v);
    if (independent(with)) {
      current.push_back(v);
      walk(v + 1, with);
      current.pop_back();
    }
    walk(v + 1, mask);
  };
  walk(0, 0);
  return out;
}

Ideal contract_mis(const Ideal& ideal, const std::vector<std::size_t>& independent) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  const std::uint64_t u = mask_of(independent);
  for (std::size_t v : independent) {
    if (v >= n) throw PreconditionError("contract_mis: variable index out of range");
  }
  if (independent.empty() || ideal.is_zero()) return ideal;
  std::vector<std::size_t> front;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(u >> v & 1)) front.push_back(v);
  }
  if (front.empty()) throw PreconditionError("contract_mis: variables are not independent");
  auto order = std::make_shared<const MonomialOrder>(MonomialOrder::elimination(n, front));
  const Basis& g = ideal.basis(order);

  // Leading coefficients in K[U], split into variables of their monomial
  // content and a content-free part.
  std::vector<bool> sat_vars(n, false);
  std::vector<Polynomial> sat_polys;
  for (const auto& p : g) {
    if ((p.support() & ~u) == 0) {
      throw PreconditionError("contract_mis: variables are not independent");
    }
    const Monomial& lm = p.leading_monomial();
    std::vector<Term> coeff_terms;
    for (const auto& t : p.terms()) {
      bool same_front = true;
      for (std::size_t v : front) {
        if (t.mono[v] != lm[v]) {
          same_front = false;
          break;
        }
      }
      if (!same_front) continue;
      std::vector<Monomial::Exponent> e(n, 0);
      for (std::size_t v : independent) e[v] = t.mono[v];
      coeff_terms.push_back({t.coeff, Monomial(std::move(e))});
    }
    Monomial content = coeff_terms.front().mono;
    for (const auto& t : coeff_terms) content = content.gcd(t.mono);
    for (std::size_t v = 0; v < n; ++v) {
      if (content[v] > 0) sat_vars[v] = true;
    }
    for (auto& t : coeff_terms) t.mono = t.mono / content;
    Polynomial h = Polynomial(ring, ring->default_order(), std::move(coeff_terms)).monic();
    if (h.is_constant()) continue;
    if (std::find(sat_polys.begin(), sat_polys.end(), h) == sat_polys.end()) {
      sat_polys.push_back(std::move(h));
    }
  }

  Ideal result = ideal;
  for (std::size_t v = 0; v < n; ++v) {
    if (sat_vars[v]) result = saturate(result, Ideal(ring, {Polynomial::variable(ring, v)})).ideal;
  }
  for (const auto& h : sat_polys) result = saturate(result, Ideal(ring, {h})).ideal;
  return result;
}

std::vector<std::size_t> variable_indices(const RingCtx& ring,
                                          const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& name : names) {
    auto idx = ring.index_of(name);
    if (!idx) throw PreconditionError("unknown variable '" + name + "'");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace diq
