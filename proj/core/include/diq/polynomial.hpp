#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diq/field.hpp"
#include "diq/monomial.hpp"
#include "diq/order.hpp"
#include "diq/ring.hpp"

namespace diq {

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Sparse polynomial with terms kept strictly descending under its own
/// monomial order and no zero coefficients. The zero polynomial has no
/// terms. Values are immutable once built; arithmetic returns new values.
class Polynomial {
 public:
  /// The zero polynomial of `ring`, sorted by the ring's default order.
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, OrderPtr order);
  /// Canonicalizes: merges equal monomials, drops zeros, sorts.
  Polynomial(RingPtr ring, OrderPtr order, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Coeff& c, Monomial m);

  const RingPtr& ring() const noexcept { return ring_; }
  const OrderPtr& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Single term (a scalar multiple of a monomial).
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::int64_t total_degree() const noexcept;
  /// Bitmask of variables that occur in some term.
  std::uint64_t support() const noexcept;
  bool uses_variable(std::size_t index) const noexcept;

  /// Throws PreconditionError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  /// Same polynomial re-sorted under `order`.
  Polynomial with_order(const OrderPtr& order) const;
  /// Leading coefficient scaled to 1 (zero stays zero).
  Polynomial monic() const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial mul_term(const Coeff& c, const Monomial& m) const;
  Polynomial pow(std::uint64_t k) const;
  Polynomial operator-() const;

  /// Operands must share a ring (ContextMismatch otherwise). The result
  /// keeps the left operand's order.
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// `*this - c * m * g` in one merge pass.
  Polynomial sub_mul(const Coeff& c, const Monomial& m,
                     const Polynomial& g) const;

  /// Embeds into `target`, which must extend this ring (same leading
  /// variables and field), e.g. a with_aux() ring.
  Polynomial embed(const RingPtr& target) const;
  /// Inverse of embed(): the dropped variables must not occur.
  Polynomial project(const RingPtr& target) const;

  /// Equal as polynomials, independent of the term order they carry.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void canonicalize();

  RingPtr ring_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// Lexicographic comparison of term lists under the polynomials' common
/// order; used to put bases in canonical order.
std::strong_ordering compare_terms(const Polynomial& a, const Polynomial& b);

/// Exact division; throws PreconditionError if `g` does not divide `f`.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Substitutes polynomials for variables: x_i -> images[i].
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

}  // namespace diq
