#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "diq/monomial.hpp"

namespace diq {

enum class BaseOrder { lex, grevlex };

/// A product (block) of lex/grevlex orders on disjoint variable subsets.
/// Plain lex and grevlex are the single-block case. Blocks are compared
/// left to right, so the variables of the first block are eliminated
/// first.
class MonomialOrder {
 public:
  struct Block {
    /// Variable indices in decreasing precedence.
    std::vector<std::size_t> vars;
    BaseOrder base = BaseOrder::grevlex;

    friend auto operator<=>(const Block&, const Block&) = default;
  };

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// `front` must be a subset of [0, nvars); the remaining variables form
  /// the back block in their natural order.
  static MonomialOrder elimination(std::size_t nvars,
                                   const std::vector<std::size_t>& front,
                                   BaseOrder front_base = BaseOrder::grevlex,
                                   BaseOrder back_base = BaseOrder::grevlex);
  /// Throws PreconditionError unless the blocks partition [0, nvars).
  static MonomialOrder from_blocks(std::size_t nvars, std::vector<Block> blocks);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.nvars_ == b.nvars_ && a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const MonomialOrder& a, const MonomialOrder& b) {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  MonomialOrder() = default;
  void classify();

  std::size_t nvars_ = 0;
  std::vector<Block> blocks_;
  // Single block over all variables in natural order: lets compare() use
  // the cached total degree.
  bool natural_ = false;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

/// Free-function spelling of MonomialOrder::compare.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace diq
