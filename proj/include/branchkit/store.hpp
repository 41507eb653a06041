#ifndef BRANCHKIT_STORE_HPP
#define BRANCHKIT_STORE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchkit/domain.hpp"
#include "branchkit/precision.hpp"

namespace branchkit {

/// A constraint store: one domain subset per variable. Immutable; updates go
/// through replaced(). Variable indices are 0-based throughout.
class Store {
 public:
  explicit Store(std::vector<DomainValue> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("store needs at least one cell");
  }

  std::size_t size() const { return cells_.size(); }
  const DomainValue& cell(std::size_t i) const { return cells_.at(i); }
  const std::vector<DomainValue>& cells() const { return cells_; }

  bool consistent() const {
    for (const auto& c : cells_)
      if (is_empty(c)) return false;
    return true;
  }

  bool divisible() const {
    if (!consistent()) return false;
    for (const auto& c : cells_)
      if (cardinality_of(c) == Cardinality::Many) return true;
    return false;
  }

  /// S[d_i/d']: same store with cell i swapped for d.
  Store replaced(std::size_t i, DomainValue d) const {
    if (i >= cells_.size()) throw std::out_of_range("store cell index out of range");
    if (d.kind() != cells_[i].kind())
      throw std::invalid_argument("replacement cell has a different domain kind");
    std::vector<DomainValue> next = cells_;
    next[i] = std::move(d);
    return Store(std::move(next));
  }

  bool operator==(const Store& o) const { return cells_ == o.cells_; }

 private:
  std::vector<DomainValue> cells_;
};

namespace detail {

inline void require_compatible(const Store& a, const Store& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("stores have different arity");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.cell(i).kind() != b.cell(i).kind())
      throw std::invalid_argument("stores disagree on domain kinds");
    if (a.cell(i).kind() == DomainKind::LatticeInterval &&
        a.cell(i).as<LatticeIntervalValue>().lattice !=
            b.cell(i).as<LatticeIntervalValue>().lattice)
      throw std::invalid_argument("stores disagree on lattice handles");
  }
}

}  // namespace detail

/// s <=_s t: every cell of s included in the matching cell of t.
inline bool store_leq(const Store& s, const Store& t) {
  detail::require_compatible(s, t);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!value_subset(s.cell(i), t.cell(i))) return false;
  return true;
}

inline bool store_lt(const Store& s, const Store& t) {
  if (!store_leq(s, t)) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!value_subset(t.cell(i), s.cell(i))) return true;
  return false;
}

/// Sum of the per-cell precisions.
inline PrecisionValue store_precision(const Store& s) {
  PrecisionValue acc{0.0, 0};
  for (const auto& c : s.cells()) acc = acc + value_precision(c);
  return acc;
}

/// The global stack P. Push appends; the top is the last pushed element.
/// No deduplication: the same store may appear more than once.
class Stack {
 public:
  Stack() = default;

  void push(Store s) { items_.push_back(std::move(s)); }
  void clear() { items_.clear(); }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const Store& top() const {
    if (items_.empty()) throw std::out_of_range("top of empty stack");
    return items_.back();
  }
  const Store& at(std::size_t i) const { return items_.at(i); }  // 0 = bottom
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const Stack& o) const { return items_ == o.items_; }

 private:
  std::vector<Store> items_;
};

/// p <=_p q: every store of p lies below some store of q (q covers p).
inline bool stack_covers(const Stack& p, const Stack& q) {
  for (const auto& s : p) {
    bool covered = false;
    for (const auto& t : q) {
      if (store_leq(s, t)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

inline std::string format_store(const Store& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += format_value(s.cell(i));
  }
  out += ")";
  return out;
}

}  // namespace branchkit

#endif  // BRANCHKIT_STORE_HPP
