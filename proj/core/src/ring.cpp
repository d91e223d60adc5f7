#include "diq/ring.hpp"

#include <cctype>
#include <unordered_set>

#include "diq/error.hpp"

namespace diq {
namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

RingCtx::RingCtx(std::vector<std::string> names, CoefficientField field,
                 std::size_t user_nvars)
    : names_(std::move(names)),
      field_(field),
      user_nvars_(user_nvars),
      default_order_(std::make_shared<const MonomialOrder>(
          MonomialOrder::grevlex(names_.size()))) {}

RingPtr RingCtx::make(std::vector<std::string> variables, CoefficientField field) {
  if (variables.empty()) throw PreconditionError("ring needs at least one variable");
  if (variables.size() > 64) throw PreconditionError("at most 64 variables supported");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_identifier(v)) throw PreconditionError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
  }
  const std::size_t n = variables.size();
  return RingPtr(new RingCtx(std::move(variables), field, n));
}

std::optional<std::size_t> RingCtx::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr RingCtx::with_aux(std::size_t count) const {
  if (names_.size() + count > 64) throw PreconditionError("at most 64 variables supported");
  auto names = names_;
  const std::size_t existing = names_.size() - user_nvars_;
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back("@t" + std::to_string(existing + i));
  }
  return RingPtr(new RingCtx(std::move(names), field_, user_nvars_));
}

bool RingCtx::same_as(const RingCtx& other) const noexcept {
  return names_ == other.names_ && field_ == other.field_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace diq
