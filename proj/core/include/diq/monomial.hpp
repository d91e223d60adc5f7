#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace diq {

/// Exponent vector over a fixed number of variables. The total degree is
/// cached because every graded comparison needs it.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  /// Throws PreconditionError on negative exponents.
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps)
      : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Bitmask of variables with positive exponent (first 64 variables).
  std::uint64_t support() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const noexcept;

  /// Products and lcms check for exponent overflow (PreconditionError).
  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::int64_t k) const;
  /// Requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Appends `extra` zero exponents (ring extension).
  Monomial extended(std::size_t extra) const;
  /// Keeps the first `n` exponents; the dropped ones must be zero.
  Monomial truncated(std::size_t n) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exps_;
  std::int64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace diq
