#ifndef BRANCHKIT_HEURISTICS_HPP
#define BRANCHKIT_HEURISTICS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "branchkit/store.hpp"

namespace branchkit {

enum class SelectorKind { Naive, FirstFail };

/// Left-most divisible cell.
inline std::size_t choose_naive(const Store& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (cardinality_of(s.cell(i)) == Cardinality::Many) return i;
  throw std::invalid_argument("choose on a non-divisible store");
}

/// First fail: the divisible cell with the smallest precision; the precision
/// map normalises the comparison across mixed computation domains. Ties go
/// to the left-most cell.
inline std::size_t choose_first_fail(const Store& s) {
  std::optional<std::size_t> best;
  PrecisionValue best_prec{0.0, 0};
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (cardinality_of(s.cell(i)) != Cardinality::Many) continue;
    auto p = value_precision(s.cell(i));
    if (!best || p < best_prec) {
      best = i;
      best_prec = p;
    }
  }
  if (!best) throw std::invalid_argument("choose on a non-divisible store");
  return *best;
}

inline std::size_t choose(SelectorKind kind, const Store& s) {
  return kind == SelectorKind::Naive ? choose_naive(s) : choose_first_fail(s);
}

}  // namespace branchkit

#endif  // BRANCHKIT_HEURISTICS_HPP
