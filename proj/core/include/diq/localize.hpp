#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "diq/error.hpp"
#include "diq/ideal.hpp"
#include "diq/polynomial.hpp"

namespace diq {

/// An ideal the caller asserts to be prime. Primality is trusted; only
/// properness is checked (PreconditionError for the unit ideal).
class PrimeInput {
 public:
  enum class Primality { asserted, unchecked };

  explicit PrimeInput(Ideal ideal, Primality primality = Primality::asserted);

  const Ideal& ideal() const noexcept { return ideal_; }
  Primality primality() const noexcept { return primality_; }

 private:
  Ideal ideal_;
  Primality primality_;
};

/// Double ideal quotient (I : (I : J)).
Ideal diq(const Ideal& ideal, const Ideal& by);
/// (I : (I : J)^∞)
Ideal sat_quot_1(const Ideal& ideal, const Ideal& by);
/// (I : (I : J^∞)^∞)
Ideal sat_quot_2(const Ideal& ideal, const Ideal& by);
/// (I : (I : J^∞))
Ideal sat_quot_3(const Ideal& ideal, const Ideal& by);

/// J is a localization of I: (I : (I : J)^∞) = J. J must be proper.
bool is_sqi(const Ideal& ideal, const Ideal& candidate);

enum class DivisorTest { quotient, saturation };

struct DivisorVerdict {
  bool is_divisor = false;
  /// Set only for divisors.
  std::optional<bool> is_isolated;
  /// Intermediate ideals, labelled, kept for audit.
  std::vector<std::pair<std::string, Ideal>> witness;
};

/// P ∈ Ass(I) iff P ⊇ (I:(I:P)) (quotient test) iff P ⊇ (I:(I:P^∞))
/// (saturation test).
DivisorVerdict is_prime_divisor(const Ideal& ideal, const PrimeInput& prime,
                                DivisorTest test = DivisorTest::quotient);

/// For P ⊇ I: P is an isolated divisor iff (I : (I : P^∞)^∞) ≠ (1).
/// When P is known to be a divisor, the unit case means embedded.
/// Throws PreconditionError when I ⊄ P.
DivisorVerdict is_isolated_divisor(const Ideal& ideal, const PrimeInput& prime);

/// The P-pseudo-primary component (I : (I : P^∞)^∞). Throws
/// PreconditionError when it is the unit ideal (P not isolated).
Ideal pseudo_primary_component(const Ideal& ideal, const PrimeInput& prime);

struct RegularSequenceHull {
  std::uint64_t seed = 0;
  unsigned retries = 20;
};
struct MisHull {
  PrimeInput prime;
};
using HullStrategy = std::variant<RegularSequenceHull, MisHull>;

/// Equidimensional hull. RegularSequenceHull draws codim(I) random
/// combinations u of the generators (coefficients in [-3, 3]) until
/// codim((u)) = codim(I) and returns ((u) : ((u) : I)); BudgetExhausted
/// after `retries` failures. MisHull assumes I is P-hull-primary and
/// contracts I at a maximal independent set of P.
Ideal hull(const Ideal& ideal, const HullStrategy& strategy);

/// Krull codimension n - dim(I); n + 1 for the unit ideal.
int codimension(const Ideal& ideal);

/// The isolated P-primary component hull((I : (I : P^∞)^∞)). Throws
/// PreconditionError when P is not isolated.
Ideal isolated_component(const Ideal& ideal, const PrimeInput& prime);

enum class ComponentCriterion { general, isolated, maximal, automatic };

enum class CriterionVerdict { holds, fails, inapplicable };

struct ComponentCheck {
  /// The criterion actually evaluated (never `automatic`).
  ComponentCriterion criterion = ComponentCriterion::general;
  CriterionVerdict verdict = CriterionVerdict::fails;
  std::string detail;
};

struct ComponentOptions {
  /// Caller vouches that P is a maximal divisor of I.
  bool prime_is_maximal_divisor = false;
  /// Skip the radical sanity check on Q (used inside the LPA loop where Q
  /// is P-primary by construction).
  bool trust_primary = false;
};

/// Decides whether the P-primary ideal Q is a P-primary component of I.
///  general:  Q ⊉ (I:P^∞) required, then (I:P^∞) ∩ Q is a localization.
///  isolated: I ⊆ Q required, then (I : (I : Q)^∞) = Q.
///  maximal:  (I:P^∞) ∩ Q = I, valid for maximal divisors.
///  automatic: maximal when asserted or when P is a maximal ideal,
///             general otherwise.
/// A violated criterion precondition yields `inapplicable`. A Q that fails
/// the primary sanity check (Q ⊆ P ⊆ √Q) throws PreconditionError.
ComponentCheck is_primary_component(const Ideal& ideal, const PrimeInput& prime,
                                    const Ideal& candidate, ComponentCriterion criterion,
                                    const ComponentOptions& options = {});

enum class LpaStrategy {
  /// I + P^m, hull by regular sequence.
  plain,
  /// I + P_G^[m], hull by regular sequence.
  bracket,
  /// I + P^m with MIS pre-localization and MIS hull.
  mis,
  /// I + P_G^[m] with MIS pre-localization and MIS hull.
  bracket_mis,
};

struct LpaOptions {
  LpaStrategy strategy = LpaStrategy::bracket_mis;
  unsigned max_m = 12;
  std::uint64_t seed = 0;
  bool prime_is_maximal_divisor = false;
  DivisorTest divisor_test = DivisorTest::quotient;
};

struct Certificate {
  std::string criterion;
  bool passed = false;
  std::string detail;
};

enum class LpaVerdict { not_a_divisor, isolated_component, embedded_component };

struct LpaOutcome {
  LpaVerdict verdict = LpaVerdict::not_a_divisor;
  std::optional<Ideal> component;
  std::optional<unsigned> exponent_m;
  std::vector<Certificate> certificates;
};

/// Thrown when the embedded loop reaches max_m; carries the certificates
/// collected so far.
class LpaBudgetExhausted : public BudgetExhausted {
 public:
  LpaBudgetExhausted(const std::string& what, std::vector<Certificate> certificates)
      : BudgetExhausted(what), certificates_(std::move(certificates)) {}
  const std::vector<Certificate>& certificates() const noexcept { return certificates_; }

 private:
  std::vector<Certificate> certificates_;
};

/// Local primary algorithm: decides whether P is a divisor of I and, if
/// so, returns a certified P-primary component.
LpaOutcome lpa(const Ideal& ideal, const PrimeInput& prime, const LpaOptions& options = {});

/// Intersection of the LPA components of I over `primes`, i.e. the
/// localization at the complement of their union when `primes` are
/// exactly the divisors avoiding that set. PreconditionError names the
/// first prime that is not a divisor.
Ideal localize(const Ideal& ideal, const std::vector<PrimeInput>& primes,
               const LpaOptions& options = {});

/// (I : (f_1 ··· f_k)^∞), the localization at the multiplicative set
/// generated by the f_i.
Ideal localize_fg(const Ideal& ideal, const std::vector<Polynomial>& fs);

std::string to_string(LpaVerdict verdict);
std::string to_string(ComponentCriterion criterion);
std::string to_string(CriterionVerdict verdict);

}  // namespace diq
