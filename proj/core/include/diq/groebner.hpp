#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "diq/ideal.hpp"
#include "diq/order.hpp"
#include "diq/polynomial.hpp"

namespace diq {

/// Fully reduced remainder of `f` modulo `basis` under `order`: no term
/// of the result is divisible by a leading monomial of the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const OrderPtr& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis of the ideal generated by `gens`. Buchberger's
/// algorithm with the normal selection strategy and the Gebauer-Möller
/// pair criteria. Returns {1} for the unit ideal and {} for the zero ideal.
Basis buchberger(std::span<const Polynomial> gens, const OrderPtr& order);

/// Turns a Gröbner basis into the reduced one (drop redundant leading
/// monomials, inter-reduce tails, make monic, sort).
Basis reduce_basis(std::span<const Polynomial> groebner_basis, const OrderPtr& order);

bool is_member(const Polynomial& f, const Ideal& ideal);
/// I ⊇ J.
bool contains(const Ideal& big, const Ideal& small);
bool equals(const Ideal& a, const Ideal& b);

/// I ∩ K[X \ vars], via a block order with `vars` in front.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& vars);

struct MisResult {
  /// Sorted variable indices; empty for the unit ideal.
  std::vector<std::size_t> independent_set;
  /// Krull dimension of K[X]/I; -1 for the unit ideal.
  int dimension = -1;
};

/// True when no leading monomial of the default-order basis lives in K[vars].
bool is_independent(const Ideal& ideal, const std::vector<std::size_t>& vars);

/// Lexicographically first independent set of maximum cardinality.
MisResult dimension(const Ideal& ideal);

/// Every inclusion-maximal independent set, in lexicographic order.
std::vector<std::vector<std::size_t>> all_mis(const Ideal& ideal);

/// I·K[X]_{K[U]^×} ∩ K[X]: saturation of I by the K[U]-leading
/// coefficients of its basis under a block order with X\U in front.
/// Throws PreconditionError when I ∩ K[U] ≠ 0.
Ideal contract_mis(const Ideal& ideal, const std::vector<std::size_t>& independent);

/// Resolves variable names against the ring (PreconditionError if unknown).
std::vector<std::size_t> variable_indices(const RingCtx& ring,
                                          const std::vector<std::string>& names);

}  // namespace diq
