#include "diq/monomial.hpp"

#include <algorithm>
#include <limits>

#include "diq/error.hpp"

namespace diq {
namespace {

constexpr std::int64_t kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent checked(std::int64_t e) {
  if (e > kMaxExponent) throw PreconditionError("exponent overflow (degree >= 2^31)");
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw PreconditionError("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

std::uint64_t Monomial::support() const noexcept {
  std::uint64_t mask = 0;
  const std::size_t n = std::min<std::size_t>(exps_.size(), 64);
  for (std::size_t i = 0; i < n; ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = checked(std::int64_t{exps_[i]} + other.exps_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::pow(std::int64_t k) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && k > kMaxExponent / exps_[i]) {
      throw PreconditionError("exponent overflow (degree >= 2^31)");
    }
    r.exps_[i] = checked(std::int64_t{exps_[i]} * k);
  }
  r.degree_ = degree_ * k;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] - other.exps_[i];
    if (r.exps_[i] < 0) throw PreconditionError("monomial does not divide");
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::extended(std::size_t extra) const {
  Monomial r = *this;
  r.exps_.resize(exps_.size() + extra, 0);
  return r;
}

Monomial Monomial::truncated(std::size_t n) const {
  Monomial r;
  r.exps_.assign(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t i = n; i < exps_.size(); ++i) {
    if (exps_[i] != 0) throw PreconditionError("dropped variable occurs in monomial");
  }
  r.degree_ = degree_;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : exps_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace diq
