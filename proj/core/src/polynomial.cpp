#include "diq/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "diq/error.hpp"

namespace diq {
namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw ContextMismatch("polynomials belong to different rings");
  }
}

// Merge of two descending term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                        bool negate_b, const MonomialOrder& ord,
                        const CoefficientField& field) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ord.compare(a[i].mono, b[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back({negate_b ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
      ++j;
    } else {
      Coeff s = negate_b ? field.sub(a[i].coeff, b[j].coeff)
                         : field.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({negate_b ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring)
    : ring_(std::move(ring)), order_(ring_->default_order()) {}

Polynomial::Polynomial(RingPtr ring, OrderPtr order)
    : ring_(std::move(ring)), order_(std::move(order)) {
  if (order_->nvars() != ring_->nvars()) {
    throw ContextMismatch("order and ring disagree on the number of variables");
  }
}

Polynomial::Polynomial(RingPtr ring, OrderPtr order, std::vector<Term> terms)
    : Polynomial(std::move(ring), std::move(order)) {
  terms_ = std::move(terms);
  for (const auto& t : terms_) {
    if (t.mono.size() != ring_->nvars()) {
      throw ContextMismatch("monomial length does not match the ring");
    }
  }
  canonicalize();
}

void Polynomial::canonicalize() {
  const auto& field = ring_->field();
  for (auto& t : terms_) t.coeff = field.canonical(t.coeff);
  const MonomialOrder& ord = *order_;
  std::sort(terms_.begin(), terms_.end(), [&ord](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  const std::size_t n = ring->nvars();
  OrderPtr ord = ring->default_order();
  return Polynomial(std::move(ring), std::move(ord), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->nvars();
  OrderPtr ord = ring->default_order();
  return Polynomial(std::move(ring), std::move(ord),
                    {Term{Coeff(1), Monomial::variable(n, index)}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Coeff& c, Monomial m) {
  OrderPtr ord = ring->default_order();
  return Polynomial(std::move(ring), std::move(ord), {Term{c, std::move(m)}});
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

std::int64_t Polynomial::total_degree() const noexcept {
  std::int64_t d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint64_t Polynomial::support() const noexcept {
  std::uint64_t mask = 0;
  for (const auto& t : terms_) mask |= t.mono.support();
  return mask;
}

bool Polynomial::uses_variable(std::size_t index) const noexcept {
  for (const auto& t : terms_) {
    if (t.mono[index] != 0) return true;
  }
  return false;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::with_order(const OrderPtr& order) const {
  if (order == order_ || *order == *order_) {
    Polynomial r = *this;
    r.order_ = order;
    return r;
  }
  Polynomial r(ring_, order);
  r.terms_ = terms_;
  const MonomialOrder& ord = *order;
  std::sort(r.terms_.begin(), r.terms_.end(), [&ord](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::scaled(const Coeff& c0) const {
  Polynomial r(ring_, order_);
  const auto& field = ring_->field();
  const Coeff c = field.canonical(c0);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field.mul(t.coeff, c), t.mono});
  return r;
}

Polynomial Polynomial::mul_term(const Coeff& c0, const Monomial& m) const {
  Polynomial r(ring_, order_);
  const auto& field = ring_->field();
  const Coeff c = field.canonical(c0);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field.mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, Coeff(1)).with_order(order_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(Coeff(1))); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const Polynomial& bb = *a.order_ == *b.order_ ? b : b.with_order(a.order_);
  Polynomial r(a.ring_, a.order_);
  r.terms_ = merge(a.terms_, bb.terms_, false, *a.order_, a.ring_->field());
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const Polynomial& bb = *a.order_ == *b.order_ ? b : b.with_order(a.order_);
  Polynomial r(a.ring_, a.order_);
  r.terms_ = merge(a.terms_, bb.terms_, true, *a.order_, a.ring_->field());
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_, a.order_);
  const auto& field = a.ring_->field();
  if (a.size() == 1) {
    return b.with_order(a.order_).mul_term(a.terms_[0].coeff, a.terms_[0].mono);
  }
  if (b.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].mono);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, Coeff(0));
      it->second = field.add(it->second, field.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({std::move(c), m});
  }
  return Polynomial(a.ring_, a.order_, std::move(terms));
}

Polynomial Polynomial::sub_mul(const Coeff& c, const Monomial& m,
                               const Polynomial& g) const {
  require_same_ring(*this, g);
  if (c == 0 || g.is_zero()) return *this;
  const auto& field = ring_->field();
  const MonomialOrder& ord = *order_;
  const Polynomial& gg = *g.order_ == ord ? g : g.with_order(order_);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size() + gg.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& a = terms_;
  const auto& b = gg.terms_;
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() && j < b.size()) {
    if (!have_bm) {
      bm = b[j].mono * m;
      have_bm = true;
    }
    auto cmp = ord.compare(a[i].mono, bm);
    if (cmp == std::strong_ordering::greater) {
      r.terms_.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      r.terms_.push_back({field.neg(field.mul(c, b[j].coeff)), std::move(bm)});
      have_bm = false;
      ++j;
    } else {
      Coeff s = field.sub(a[i].coeff, field.mul(c, b[j].coeff));
      if (s != 0) r.terms_.push_back({std::move(s), a[i].mono});
      have_bm = false;
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.terms_.push_back(a[i]);
  for (; j < b.size(); ++j) {
    r.terms_.push_back({field.neg(field.mul(c, b[j].coeff)), b[j].mono * m});
  }
  return r;
}

Polynomial Polynomial::embed(const RingPtr& target) const {
  if (target->nvars() < ring_->nvars() || !(target->field() == ring_->field())) {
    throw ContextMismatch("target ring does not extend the source ring");
  }
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (target->name(i) != ring_->name(i)) {
      throw ContextMismatch("target ring does not extend the source ring");
    }
  }
  const std::size_t extra = target->nvars() - ring_->nvars();
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coeff, t.mono.extended(extra)});
  return Polynomial(target, target->default_order(), std::move(terms));
}

Polynomial Polynomial::project(const RingPtr& target) const {
  if (target->nvars() > ring_->nvars() || !(target->field() == ring_->field())) {
    throw ContextMismatch("source ring does not extend the target ring");
  }
  for (std::size_t i = 0; i < target->nvars(); ++i) {
    if (target->name(i) != ring_->name(i)) {
      throw ContextMismatch("source ring does not extend the target ring");
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coeff, t.mono.truncated(target->nvars())});
  return Polynomial(target, target->default_order(), std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.size() != b.size()) return false;
  const Polynomial& bb = *a.order_ == *b.order_ ? b : b.with_order(a.order_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms_[i].mono == bb.terms_[i].mono) || a.terms_[i].coeff != bb.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  return p;
}

std::strong_ordering compare_terms(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder& ord = *a.order();
  const Polynomial& bb = *b.order() == ord ? b : b.with_order(a.order());
  const std::size_t n = std::min(a.size(), bb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = ord.compare(a.terms()[i].mono, bb.terms()[i].mono); c != 0) return c;
    const Coeff& ca = a.terms()[i].coeff;
    const Coeff& cb = bb.terms()[i].coeff;
    if (ca != cb) return ca < cb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> bb.size();
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& field = f.ring()->field();
  const Polynomial gg = g.with_order(f.order());
  const Term& lead = gg.leading_term();
  const Coeff lead_inv = field.inv(lead.coeff);
  Polynomial rem = f;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!lead.mono.divides(t.mono)) throw PreconditionError("polynomial division is not exact");
    Coeff c = field.mul(t.coeff, lead_inv);
    Monomial m = t.mono / lead.mono;
    rem = rem.sub_mul(c, m, gg);
    quotient.push_back({std::move(c), std::move(m)});
  }
  return Polynomial(f.ring(), f.order(), std::move(quotient));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  const auto& ring = f.ring();
  if (images.size() != ring->nvars()) {
    throw PreconditionError("substitute needs one image per variable");
  }
  Polynomial result(ring, f.order());
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(ring, t.coeff).with_order(f.order());
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (t.mono[i] != 0) prod = prod * images[i].pow(static_cast<std::uint64_t>(t.mono[i]));
    }
    result = result + prod;
  }
  return result;
}

}  // namespace diq
