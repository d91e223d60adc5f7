#include "diq/mono_oracle.hpp"

#include <algorithm>

#include "diq/error.hpp"

namespace diq {
namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); });
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw PreconditionError("monomial length does not match the ring");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Monomial(nvars)});
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw PreconditionError("oracle input is not a monomial ideal");
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal(ideal.ring()->nvars(), std::move(gens));
}

Ideal MonomialIdeal::to_ideal(const RingPtr& ring) const {
  if (ring->nvars() != nvars_) throw ContextMismatch("oracle ideal has a different variable count");
  std::vector<Polynomial> gens;
  for (const auto& m : gens_) gens.push_back(Polynomial::monomial(ring, Coeff(1), m));
  return Ideal(ring, std::move(gens));
}

namespace oracle {

bool member(const Monomial& m, const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  return std::any_of(g.begin(), g.end(), [&](const Monomial& h) { return h.divides(m); });
}

bool contains(const MonomialIdeal& big, const MonomialIdeal& small) {
  const auto& g = small.generators();
  return std::all_of(g.begin(), g.end(), [&](const Monomial& m) { return member(m, big); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f.lcm(g));
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal quotient(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g / g.gcd(m));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal quotient(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  if (by.is_zero()) throw PreconditionError("oracle quotient by the zero ideal");
  MonomialIdeal acc = quotient(ideal, by.generators().front());
  for (std::size_t i = 1; i < by.generators().size(); ++i) {
    acc = intersect(acc, quotient(ideal, by.generators()[i]));
  }
  return acc;
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  MonomialIdeal current = ideal;
  for (;;) {
    MonomialIdeal next = quotient(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace oracle
}  // namespace diq
