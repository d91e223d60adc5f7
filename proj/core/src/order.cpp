#include "diq/order.hpp"

#include <algorithm>
#include <numeric>

#include "diq/error.hpp"

namespace diq {
namespace {

std::strong_ordering compare_block(const MonomialOrder::Block& block,
                                   const Monomial& a, const Monomial& b) {
  if (block.base == BaseOrder::grevlex) {
    std::int64_t da = 0;
    std::int64_t db = 0;
    for (std::size_t v : block.vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
    for (auto it = block.vars.rbegin(); it != block.vars.rend(); ++it) {
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t v : block.vars) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), 0);
  return from_blocks(nvars, {Block{std::move(vars), BaseOrder::lex}});
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), 0);
  return from_blocks(nvars, {Block{std::move(vars), BaseOrder::grevlex}});
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars,
                                         const std::vector<std::size_t>& front,
                                         BaseOrder front_base, BaseOrder back_base) {
  std::vector<bool> in_front(nvars, false);
  for (std::size_t v : front) {
    if (v >= nvars) throw PreconditionError("elimination variable out of range");
    in_front[v] = true;
  }
  Block f{{}, front_base};
  Block b{{}, back_base};
  for (std::size_t v = 0; v < nvars; ++v) (in_front[v] ? f : b).vars.push_back(v);
  std::vector<Block> blocks;
  if (!f.vars.empty()) blocks.push_back(std::move(f));
  if (!b.vars.empty()) blocks.push_back(std::move(b));
  return from_blocks(nvars, std::move(blocks));
}

MonomialOrder MonomialOrder::from_blocks(std::size_t nvars, std::vector<Block> blocks) {
  std::vector<int> seen(nvars, 0);
  for (const auto& b : blocks) {
    if (b.vars.empty()) throw PreconditionError("empty order block");
    for (std::size_t v : b.vars) {
      if (v >= nvars || seen[v]++) throw PreconditionError("order blocks must partition the variables");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw PreconditionError("order blocks must partition the variables");
  }
  MonomialOrder o;
  o.nvars_ = nvars;
  o.blocks_ = std::move(blocks);
  o.classify();
  return o;
}

void MonomialOrder::classify() {
  natural_ = blocks_.size() == 1;
  if (natural_) {
    const auto& vars = blocks_.front().vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] != i) {
        natural_ = false;
        break;
      }
    }
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (natural_) {
    const std::size_t n = nvars_;
    if (blocks_.front().base == BaseOrder::grevlex) {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  for (const auto& block : blocks_) {
    if (auto c = compare_block(block, a, b); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  std::string s;
  for (const auto& b : blocks_) {
    if (!s.empty()) s += " > ";
    s += b.base == BaseOrder::lex ? "lex(" : "grevlex(";
    for (std::size_t i = 0; i < b.vars.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(b.vars[i]);
    }
    s += ")";
  }
  return s;
}

}  // namespace diq
