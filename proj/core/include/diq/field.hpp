#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace diq {

/// Exact coefficient. Over a prime field the value is kept as an integer
/// in [0, p).
using Coeff = mpq_class;

/// Q or F_p. All coefficient arithmetic is routed through the field so
/// that prime-field reduction happens in one place.
class CoefficientField {
 public:
  enum class Kind { rationals, prime };

  static CoefficientField rationals() { return CoefficientField(); }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static CoefficientField prime_field(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  std::uint64_t characteristic() const noexcept { return p_; }

  /// Maps an arbitrary rational into the field's canonical representative.
  Coeff canonical(const Coeff& c) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  /// Throws PreconditionError on zero.
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  std::string describe() const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  CoefficientField() = default;

  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

}  // namespace diq
