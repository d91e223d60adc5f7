#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "diq/order.hpp"
#include "diq/polynomial.hpp"
#include "diq/ring.hpp"

namespace diq {

using Basis = std::vector<Polynomial>;

/// Finitely generated ideal of K[X]. Generators are stored in the ring's
/// default order with zeros removed. Reduced Gröbner bases are computed
/// lazily, once per monomial order, and shared by every copy of the ideal.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced (monic, inter-reduced, sorted by descending leading
  /// monomial) Gröbner basis under the ring's default order.
  const Basis& basis() const { return basis(ring_->default_order()); }
  const Basis& basis(const OrderPtr& order) const;

  bool is_zero() const noexcept { return gens_.empty(); }
  /// Decided by the default-order basis.
  bool is_unit() const;

  /// Installs a basis already known to be the reduced basis for `order`.
  /// No-op when one is cached. Used by operations that get a basis as a
  /// by-product (elimination, intersection).
  void seed_basis(const OrderPtr& order, Basis reduced) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::shared_ptr<const Basis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace diq
