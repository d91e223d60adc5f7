#include "diq/localize.hpp"

#include <random>

#include "diq/error.hpp"
#include "diq/groebner.hpp"
#include "diq/ideal_ops.hpp"
#include "diq/parse.hpp"

namespace diq {
namespace {

// Total versions of quotient/saturation: division by the zero ideal gives
// the whole ring.
Ideal colon(const Ideal& a, const Ideal& b) {
  if (b.is_zero()) return Ideal::unit(a.ring());
  return quotient(a, b);
}

Ideal colon_inf(const Ideal& a, const Ideal& b) {
  if (b.is_zero()) return Ideal::unit(a.ring());
  return saturate(a, b).ideal;
}

std::string brief(const Ideal& ideal) {
  std::string s = "(";
  const Basis& g = ideal.basis();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ", ";
    s += format_poly(g[i]);
  }
  return s + ")";
}

bool is_maximal_ideal(const Ideal& prime) { return dimension(prime).dimension == 0; }

}  // namespace

PrimeInput::PrimeInput(Ideal ideal, Primality primality)
    : ideal_(std::move(ideal)), primality_(primality) {
  if (ideal_.is_unit()) throw PreconditionError("a prime ideal must be proper");
}

Ideal diq(const Ideal& ideal, const Ideal& by) { return colon(ideal, colon(ideal, by)); }

Ideal sat_quot_1(const Ideal& ideal, const Ideal& by) {
  return colon_inf(ideal, colon(ideal, by));
}

Ideal sat_quot_2(const Ideal& ideal, const Ideal& by) {
  return colon_inf(ideal, colon_inf(ideal, by));
}

Ideal sat_quot_3(const Ideal& ideal, const Ideal& by) {
  return colon(ideal, colon_inf(ideal, by));
}

bool is_sqi(const Ideal& ideal, const Ideal& candidate) {
  if (candidate.is_unit()) throw PreconditionError("is_sqi: candidate must be a proper ideal");
  return equals(sat_quot_1(ideal, candidate), candidate);
}

DivisorVerdict is_prime_divisor(const Ideal& ideal, const PrimeInput& prime, DivisorTest test) {
  const Ideal& p = prime.ideal();
  DivisorVerdict v;
  if (test == DivisorTest::quotient) {
    Ideal inner = colon(ideal, p);
    Ideal outer = colon(ideal, inner);
    v.is_divisor = contains(p, outer);
    v.witness.emplace_back("(I:P)", std::move(inner));
    v.witness.emplace_back("(I:(I:P))", std::move(outer));
  } else {
    Ideal inner = colon_inf(ideal, p);
    Ideal outer = colon(ideal, inner);
    v.is_divisor = contains(p, outer);
    v.witness.emplace_back("(I:P^inf)", std::move(inner));
    v.witness.emplace_back("(I:(I:P^inf))", std::move(outer));
  }
  return v;
}

DivisorVerdict is_isolated_divisor(const Ideal& ideal, const PrimeInput& prime) {
  const Ideal& p = prime.ideal();
  if (!contains(p, ideal)) throw PreconditionError("is_isolated_divisor: I is not contained in P");
  Ideal inner = colon_inf(ideal, p);
  Ideal outer = colon_inf(ideal, inner);
  DivisorVerdict v;
  const bool isolated = !outer.is_unit();
  v.witness.emplace_back("(I:P^inf)", std::move(inner));
  v.witness.emplace_back("(I:(I:P^inf)^inf)", std::move(outer));
  if (isolated) {
    v.is_divisor = true;
    v.is_isolated = true;
    return v;
  }
  // (1) alone does not separate embedded divisors from non-divisors.
  DivisorVerdict d = is_prime_divisor(ideal, prime, DivisorTest::quotient);
  v.is_divisor = d.is_divisor;
  for (auto& w : d.witness) v.witness.push_back(std::move(w));
  if (v.is_divisor) v.is_isolated = false;
  return v;
}

Ideal pseudo_primary_component(const Ideal& ideal, const PrimeInput& prime) {
  Ideal q = sat_quot_2(ideal, prime.ideal());
  if (q.is_unit()) {
    throw PreconditionError("pseudo_primary_component: P is not an isolated divisor");
  }
  return q;
}

int codimension(const Ideal& ideal) {
  return static_cast<int>(ideal.ring()->nvars()) - dimension(ideal).dimension;
}

Ideal hull(const Ideal& ideal, const HullStrategy& strategy) {
  if (const auto* mis = std::get_if<MisHull>(&strategy)) {
    return contract_mis(ideal, dimension(mis->prime.ideal()).independent_set);
  }
  const auto& reg = std::get<RegularSequenceHull>(strategy);
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  const RingPtr& ring = ideal.ring();
  const int c = codimension(ideal);
  const Basis& gens = ideal.basis();
  std::mt19937_64 rng(reg.seed);
  for (unsigned attempt = 0; attempt < reg.retries; ++attempt) {
    std::vector<Polynomial> seq;
    for (int k = 0; k < c; ++k) {
      std::vector<int> coeffs(gens.size(), 0);
      bool all_zero = true;
      while (all_zero) {
        for (auto& a : coeffs) {
          a = static_cast<int>(rng() % 7) - 3;
          if (a != 0) all_zero = false;
        }
      }
      Polynomial u(ring);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (coeffs[i] != 0) u = u + gens[i].scaled(Coeff(coeffs[i]));
      }
      seq.push_back(std::move(u));
    }
    Ideal complete(ring, std::move(seq));
    if (codimension(complete) != c) continue;
    return quotient(complete, quotient(complete, ideal));
  }
  throw BudgetExhausted("hull: no regular sequence found in " + std::to_string(reg.retries) +
                        " attempts");
}

Ideal isolated_component(const Ideal& ideal, const PrimeInput& prime) {
  Ideal pseudo = pseudo_primary_component(ideal, prime);
  return contract_mis(pseudo, dimension(prime.ideal()).independent_set);
}

ComponentCheck is_primary_component(const Ideal& ideal, const PrimeInput& prime,
                                    const Ideal& candidate, ComponentCriterion criterion,
                                    const ComponentOptions& options) {
  const Ideal& p = prime.ideal();
  if (!options.trust_primary) {
    if (!contains(p, candidate)) {
      throw PreconditionError("candidate is not contained in P, so its radical is not P");
    }
    for (const auto& g : p.generators()) {
      if (!radical_membership(g, candidate)) {
        throw PreconditionError("P is not contained in the radical of the candidate");
      }
    }
  }
  if (criterion == ComponentCriterion::automatic) {
    criterion = options.prime_is_maximal_divisor || is_maximal_ideal(p)
                    ? ComponentCriterion::maximal
                    : ComponentCriterion::general;
  }
  ComponentCheck out;
  out.criterion = criterion;
  switch (criterion) {
    case ComponentCriterion::general: {
      Ideal sat = colon_inf(ideal, p);
      if (contains(candidate, sat)) {
        out.verdict = CriterionVerdict::inapplicable;
        out.detail = "Q contains (I:P^inf)";
        return out;
      }
      Ideal local = intersect(sat, candidate);
      const bool ok = is_sqi(ideal, local);
      out.verdict = ok ? CriterionVerdict::holds : CriterionVerdict::fails;
      out.detail = ok ? "(I:P^inf) ∩ Q is saturated quotient invariant"
                      : "(I:P^inf) ∩ Q is not saturated quotient invariant";
      return out;
    }
    case ComponentCriterion::isolated: {
      if (!contains(candidate, ideal)) {
        out.verdict = CriterionVerdict::inapplicable;
        out.detail = "I is not contained in Q";
        return out;
      }
      const bool ok = equals(sat_quot_1(ideal, candidate), candidate);
      out.verdict = ok ? CriterionVerdict::holds : CriterionVerdict::fails;
      out.detail = ok ? "(I:(I:Q)^inf) = Q" : "(I:(I:Q)^inf) != Q";
      return out;
    }
    case ComponentCriterion::maximal:
    case ComponentCriterion::automatic: {
      const bool ok = equals(intersect(colon_inf(ideal, p), candidate), ideal);
      out.verdict = ok ? CriterionVerdict::holds : CriterionVerdict::fails;
      out.detail = ok ? "(I:P^inf) ∩ Q = I" : "(I:P^inf) ∩ Q != I";
      return out;
    }
  }
  return out;
}

LpaOutcome lpa(const Ideal& ideal, const PrimeInput& prime, const LpaOptions& options) {
  const Ideal& p = prime.ideal();
  LpaOutcome out;
  auto& certs = out.certificates;

  const DivisorVerdict divisor = is_prime_divisor(ideal, prime, options.divisor_test);
  certs.push_back({"criterion-5", divisor.is_divisor,
                   options.divisor_test == DivisorTest::quotient ? "P ⊇ (I:(I:P))"
                                                                 : "P ⊇ (I:(I:P^inf))"});
  if (!divisor.is_divisor) return out;

  const MisResult mis = dimension(p);
  Ideal pseudo = sat_quot_2(ideal, p);
  const bool isolated = !pseudo.is_unit();
  certs.push_back({"criterion-6", isolated,
                   isolated ? "(I:(I:P^inf)^inf) != (1): isolated" : "(I:(I:P^inf)^inf) = (1): embedded"});

  if (isolated) {
    Ideal q = contract_mis(pseudo, mis.independent_set);
    const bool ok = equals(sat_quot_1(ideal, q), q);
    certs.push_back({"criterion-2", ok, "(I:(I:Q)^inf) = Q"});
    if (!ok) {
      throw PreconditionError("isolated component failed certification; is P prime?");
    }
    out.verdict = LpaVerdict::isolated_component;
    out.component = std::move(q);
    return out;
  }

  const bool use_mis =
      options.strategy == LpaStrategy::mis || options.strategy == LpaStrategy::bracket_mis;
  const bool use_bracket =
      options.strategy == LpaStrategy::bracket || options.strategy == LpaStrategy::bracket_mis;

  Ideal base = ideal;
  if (use_mis) {
    base = contract_mis(ideal, mis.independent_set);
    certs.push_back({"criterion-4", true,
                     "working with I localized at K[U]^x, |U| = " + std::to_string(mis.dimension)});
  }
  // After MIS localization no divisor of the working ideal strictly
  // contains P, so the maximal-divisor test applies.
  const bool maximal = use_mis || options.prime_is_maximal_divisor || mis.dimension == 0;
  const ComponentCriterion criterion =
      maximal ? ComponentCriterion::maximal : ComponentCriterion::general;
  ComponentOptions copts;
  copts.trust_primary = true;
  copts.prime_is_maximal_divisor = maximal;

  for (unsigned m = 1; m <= options.max_m; ++m) {
    Ideal pm = use_bracket ? bracket_power(p, m) : power(p, m);
    Ideal candidate = sum(base, pm);
    Ideal q = use_mis ? contract_mis(candidate, mis.independent_set)
                      : hull(candidate, RegularSequenceHull{options.seed, 20});
    ComponentCheck check = is_primary_component(base, prime, q, criterion, copts);
    const bool ok = check.verdict == CriterionVerdict::holds;
    certs.push_back({maximal ? "criterion-3" : "criterion-1", ok,
                     "m=" + std::to_string(m) + ": " + to_string(check.verdict) + ": " +
                         check.detail + "; Q = " + brief(q)});
    if (ok) {
      out.verdict = LpaVerdict::embedded_component;
      out.component = std::move(q);
      out.exponent_m = m;
      return out;
    }
  }
  throw LpaBudgetExhausted("lpa: no component certified for m <= " + std::to_string(options.max_m),
                           certs);
}

Ideal localize(const Ideal& ideal, const std::vector<PrimeInput>& primes,
               const LpaOptions& options) {
  if (primes.empty()) throw PreconditionError("localize: no primes given");
  std::vector<Ideal> components;
  for (const auto& prime : primes) {
    LpaOutcome r = lpa(ideal, prime, options);
    if (r.verdict == LpaVerdict::not_a_divisor) {
      throw PreconditionError("localize: " + brief(prime.ideal()) + " is not a prime divisor");
    }
    components.push_back(std::move(*r.component));
  }
  return intersect(components);
}

Ideal localize_fg(const Ideal& ideal, const std::vector<Polynomial>& fs) {
  Polynomial prod = Polynomial::constant(ideal.ring(), Coeff(1));
  for (const auto& f : fs) {
    if (f.is_zero()) throw PreconditionError("localize_fg: zero element in the multiplicative set");
    prod = prod * f;
  }
  return saturate(ideal, Ideal(ideal.ring(), {prod})).ideal;
}

std::string to_string(LpaVerdict verdict) {
  switch (verdict) {
    case LpaVerdict::not_a_divisor: return "not_a_divisor";
    case LpaVerdict::isolated_component: return "isolated_component";
    case LpaVerdict::embedded_component: return "embedded_component";
  }
  return "?";
}

std::string to_string(ComponentCriterion criterion) {
  switch (criterion) {
    case ComponentCriterion::general: return "general";
    case ComponentCriterion::isolated: return "isolated";
    case ComponentCriterion::maximal: return "maximal";
    case ComponentCriterion::automatic: return "auto";
  }
  return "?";
}

std::string to_string(CriterionVerdict verdict) {
  switch (verdict) {
    case CriterionVerdict::holds: return "holds";
    case CriterionVerdict::fails: return "fails";
    case CriterionVerdict::inapplicable: return "inapplicable";
  }
  return "?";
}

}  // namespace diq
