#include "diq/ideal.hpp"

#include "diq/error.hpp"
#include "diq/groebner.hpp"

namespace diq {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  const OrderPtr& ord = ring_->default_order();
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) {
      throw ContextMismatch("generator does not belong to the ideal's ring");
    }
    if (g.is_zero()) continue;
    gens_.push_back(g.with_order(ord));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, Coeff(1));
  return Ideal(std::move(ring), {std::move(one)});
}

const Basis& Ideal::basis(const OrderPtr& order) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->bases.find(*order);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto computed = std::make_shared<const Basis>(buchberger(gens_, order));
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->bases.try_emplace(*order, std::move(computed));
  return *it->second;
}

bool Ideal::is_unit() const {
  const Basis& g = basis();
  return g.size() == 1 && g.front().is_constant();
}

void Ideal::seed_basis(const OrderPtr& order, Basis reduced) const {
  std::lock_guard lock(cache_->mu);
  cache_->bases.try_emplace(*order, std::make_shared<const Basis>(std::move(reduced)));
}

}  // namespace diq
