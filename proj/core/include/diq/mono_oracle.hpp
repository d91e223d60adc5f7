#pragma once

#include <cstddef>
#include <vector>

#include "diq/ideal.hpp"
#include "diq/monomial.hpp"
#include "diq/ring.hpp"

namespace diq {

/// Monomial ideal held as its minimal generating set, sorted by exponent
/// vector. Operations here are pure divisibility combinatorics and never
/// touch Gröbner bases, so they serve as an independent oracle.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  static MonomialIdeal unit(std::size_t nvars);

  /// Throws PreconditionError if a generator is not a single term.
  static MonomialIdeal from_ideal(const Ideal& ideal);
  Ideal to_ideal(const RingPtr& ring) const;

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

namespace oracle {

bool member(const Monomial& m, const MonomialIdeal& ideal);
bool contains(const MonomialIdeal& big, const MonomialIdeal& small);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal quotient(const MonomialIdeal& ideal, const Monomial& m);
/// Throws PreconditionError for the zero ideal.
MonomialIdeal quotient(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);

}  // namespace oracle
}  // namespace diq
