#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diq/ideal.hpp"
#include "diq/polynomial.hpp"

namespace diq {

/// I + J: union of generators.
Ideal sum(const Ideal& a, const Ideal& b);
/// I·J: pairwise generator products.
Ideal product(const Ideal& a, const Ideal& b);

/// I^m from all degree-m products of generators. m >= 1.
Ideal power(const Ideal& ideal, unsigned m);
/// (f_1^m, ..., f_r^m) for the given generators. m >= 1.
Ideal bracket_power(const RingPtr& ring, std::span<const Polynomial> gens, unsigned m);
inline Ideal bracket_power(const Ideal& ideal, unsigned m) {
  return bracket_power(ideal.ring(), ideal.generators(), m);
}

/// I ∩ J by eliminating t from t·I + (1-t)·J.
Ideal intersect(const Ideal& a, const Ideal& b);
/// Left fold of the binary intersection; `ideals` must be non-empty.
Ideal intersect(std::span<const Ideal> ideals);

/// (I : g) = (I ∩ (g)) / g. Throws PreconditionError for g = 0.
Ideal quotient(const Ideal& ideal, const Polynomial& g);
/// (I : J) = ∩ over generators g of J of (I : g). Throws
/// PreconditionError for J = (0).
Ideal quotient(const Ideal& ideal, const Ideal& by);

struct Saturation {
  Ideal ideal;
  /// Quotient steps taken, the confirming step included, so that
  /// (I : J^steps) = (I : J^∞).
  unsigned steps = 0;
};

/// (I : J^∞) by iterating I_{k+1} = (I_k : J) until it stabilizes.
Saturation saturate(const Ideal& ideal, const Ideal& by);

/// f ∈ √I, decided by 1 ∈ I + (1 - t·f) in K[X, t].
bool radical_membership(const Polynomial& f, const Ideal& ideal);

}  // namespace diq
