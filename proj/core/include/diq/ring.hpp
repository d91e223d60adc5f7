#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diq/field.hpp"
#include "diq/order.hpp"

namespace diq {

class RingCtx;
using RingPtr = std::shared_ptr<const RingCtx>;

/// Variables and coefficient field of a polynomial ring K[x_1..x_n].
/// Always held through a shared_ptr; polynomials keep their ring alive.
class RingCtx {
 public:
  /// Throws PreconditionError on an empty list, duplicate names, or names
  /// that are not identifiers.
  static RingPtr make(std::vector<std::string> variables,
                      CoefficientField field = CoefficientField::rationals());

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& variables() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const CoefficientField& field() const noexcept { return field_; }

  /// grevlex over the variables in listed order.
  const OrderPtr& default_order() const noexcept { return default_order_; }

  /// Number of leading variables that belong to the user; the rest are
  /// auxiliary variables appended by with_aux().
  std::size_t user_nvars() const noexcept { return user_nvars_; }

  /// Same ring with `count` auxiliary variables appended. Auxiliary names
  /// start with '@', which the polynomial grammar never produces.
  RingPtr with_aux(std::size_t count) const;

  /// Same variable names and field.
  bool same_as(const RingCtx& other) const noexcept;

 private:
  RingCtx(std::vector<std::string> names, CoefficientField field,
          std::size_t user_nvars);

  std::vector<std::string> names_;
  CoefficientField field_;
  std::size_t user_nvars_;
  OrderPtr default_order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

}  // namespace diq
