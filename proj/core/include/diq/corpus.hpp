#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diq/ideal.hpp"
#include "diq/ring.hpp"

namespace diq {

enum class ComponentKind { isolated, embedded };

struct PrimaryComponent {
  Ideal primary;
  Ideal prime;
  ComponentKind kind = ComponentKind::isolated;
};

/// An ideal together with the irredundant primary decomposition it was
/// built from.
struct DecomposedIdeal {
  std::string name;
  Ideal ideal;
  std::vector<PrimaryComponent> components;

  std::vector<Ideal> divisors() const;
};

/// Intersects the (primary, prime) pairs and derives isolated/embedded
/// kinds from containments among the primes. Throws PreconditionError
/// when a pair fails Q ⊆ P ⊆ √Q, when two primes coincide, or when a
/// component is redundant.
DecomposedIdeal build(std::string name, std::vector<std::pair<Ideal, Ideal>> components);

/// (x^2) ∩ (x^4, y) ∩ (x^3, y^3, (z+1)^n + 1) in Q[x,y,z].
DecomposedIdeal i1_family(unsigned n);

/// Ring with variables x{i}{j}, 1 <= i <= rows, 1 <= j <= cols.
RingPtr matrix_ring(unsigned rows, unsigned cols);
/// k×k minors of the contiguous k×k blocks of the rows×cols matrix (x_ij).
Ideal adjacent_minors(unsigned k, unsigned rows, unsigned cols);

struct AssertedPrime {
  std::string name;
  /// Ideal the prime is claimed to divide.
  Ideal ideal;
  Ideal prime;
  bool isolated = false;
};

/// P2 ⊂ A_{3,4,5} (isolated), P3 ⊂ A_{2,4,4} and P4 ⊂ A_{2,3,7} (embedded).
/// Primality and the divisor claims are not verified.
std::vector<AssertedPrime> asserted_primes();

/// Deterministic per seed; generators are minimal.
Ideal random_monomial_ideal(std::uint64_t seed, unsigned nvars, unsigned max_deg,
                            unsigned ngens);

/// At least twenty decomposed ideals in two to four variables.
std::vector<DecomposedIdeal> standard_corpus();

/// Linear primes of the ring that are not divisors of `ideal`.
std::vector<Ideal> decoy_primes(const DecomposedIdeal& ideal);

struct HullInstance {
  std::string name;
  Ideal ideal;
  Ideal prime;
};

/// Ideals whose equidimensional hull is primary with radical `prime`.
std::vector<HullInstance> hull_instances();

}  // namespace diq
