#include "diq/field.hpp"

#include "diq/error.hpp"

namespace diq {
namespace {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

CoefficientField CoefficientField::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p)) {
    throw PreconditionError("modulus " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  CoefficientField f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

Coeff CoefficientField::canonical(const Coeff& c) const {
  if (!is_prime()) {
    Coeff out(c);
    out.canonicalize();
    return out;
  }
  mpz_class mod(static_cast<unsigned long>(p_));
  mpz_class num = c.get_num() % mod;
  if (num < 0) num += mod;
  if (c.get_den() == 1) return Coeff(num);
  mpz_class den = c.get_den() % mod;
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw PreconditionError("denominator divisible by the characteristic");
  }
  mpz_class r = (num * den_inv) % mod;
  return Coeff(r);
}

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
  if (!is_prime()) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= static_cast<unsigned long>(p_)) r -= static_cast<unsigned long>(p_);
  return Coeff(r);
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
  if (!is_prime()) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Coeff(r);
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
  if (!is_prime()) return a * b;
  mpz_class r = (a.get_num() * b.get_num()) % static_cast<unsigned long>(p_);
  return Coeff(r);
}

Coeff CoefficientField::neg(const Coeff& a) const {
  if (!is_prime()) return -a;
  if (a == 0) return a;
  return Coeff(mpz_class(static_cast<unsigned long>(p_)) - a.get_num());
}

Coeff CoefficientField::inv(const Coeff& a) const {
  if (a == 0) throw PreconditionError("division by zero");
  if (!is_prime()) return Coeff(1) / a;
  mpz_class mod(static_cast<unsigned long>(p_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mod.get_mpz_t());
  return Coeff(r);
}

std::string CoefficientField::describe() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "QQ";
}

}  // namespace diq
