#include "diq/ideal_ops.hpp"

#include <functional>
#include <optional>

#include "diq/error.hpp"
#include "diq/groebner.hpp"

namespace diq {
namespace {

void require_same_ring(const Ideal& a, const Ideal& b, const char* op) {
  if (!same_ring(a.ring(), b.ring())) {
    throw ContextMismatch(std::string(op) + ": ideals belong to different rings");
  }
}

Ideal with_reduced_basis(const RingPtr& ring, const Basis& groebner) {
  Basis reduced = reduce_basis(groebner, ring->default_order());
  Ideal out(ring, reduced);
  out.seed_basis(ring->default_order(), std::move(reduced));
  return out;
}

}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& ideal, unsigned m) {
  if (m == 0) throw PreconditionError("power: exponent must be positive");
  const auto& gens = ideal.generators();
  std::vector<Polynomial> out;
  // Multisets of size m drawn from the generators, as non-decreasing
  // index sequences.
  std::function<void(std::size_t, unsigned, const Polynomial&)> rec =
      [&](std::size_t start, unsigned left, const Polynomial& acc) {
        if (left == 0) {
          out.push_back(acc);
          return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) rec(i, left - 1, acc * gens[i]);
      };
  rec(0, m, Polynomial::constant(ideal.ring(), Coeff(1)));
  return Ideal(ideal.ring(), std::move(out));
}

Ideal bracket_power(const RingPtr& ring, std::span<const Polynomial> gens, unsigned m) {
  if (m == 0) throw PreconditionError("bracket_power: exponent must be positive");
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.pow(m));
  return Ideal(ring, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b, "intersect");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const std::size_t n = ring->nvars();
  RingPtr ext = ring->with_aux(1);
  const Polynomial t = Polynomial::variable(ext, n);
  const Polynomial one_minus_t = Polynomial::constant(ext, Coeff(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.embed(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embed(ext));
  auto order = std::make_shared<const MonomialOrder>(MonomialOrder::elimination(n + 1, {n}));
  Basis g = buchberger(gens, order);
  Basis kept;
  for (const auto& p : g) {
    if (!p.uses_variable(n)) kept.push_back(p.project(ring));
  }
  // Restricted to t-free monomials the block order is the ring's grevlex,
  // so `kept` is already a reduced basis there.
  return with_reduced_basis(ring, kept);
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw PreconditionError("intersect: no ideals given");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& ideal, const Polynomial& g) {
  const RingPtr& ring = ideal.ring();
  if (!same_ring(g.ring(), ring)) throw ContextMismatch("quotient: ring mismatch");
  if (g.is_zero()) throw PreconditionError("quotient by the zero polynomial");
  if (is_member(g, ideal)) return Ideal::unit(ring);
  if (g.is_constant() || ideal.is_zero()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ring, {g}));
  // g·(I:g) = I ∩ (g), and dividing a basis of g·J by g gives a basis of J.
  Basis divided;
  for (const auto& h : meet.basis()) divided.push_back(divide_exact(h, g));
  return with_reduced_basis(ring, divided);
}

Ideal quotient(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal, by, "quotient");
  if (by.is_zero()) throw PreconditionError("quotient by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal q = quotient(ideal, g);
    if (q.is_unit()) continue;
    acc = acc ? intersect(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(ideal.ring());
}

Saturation saturate(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal, by, "saturate");
  if (by.is_zero()) throw PreconditionError("saturation by the zero ideal");
  Ideal current = ideal;
  unsigned steps = 0;
  for (;;) {
    Ideal next = quotient(current, by);
    ++steps;
    if (equals(next, current)) return {std::move(current), steps};
    current = std::move(next);
  }
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  if (!same_ring(f.ring(), ideal.ring())) throw ContextMismatch("radical_membership: ring mismatch");
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  const RingPtr& ring = ideal.ring();
  RingPtr ext = ring->with_aux(1);
  const Polynomial t = Polynomial::variable(ext, ring->nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext));
  gens.push_back(Polynomial::constant(ext, Coeff(1)) - t * f.embed(ext));
  Basis g = buchberger(gens, ext->default_order());
  return g.size() == 1 && g.front().is_constant();
}

}  // namespace diq
