#ifndef BRANCHKIT_DOMAIN_HPP
#define BRANCHKIT_DOMAIN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "branchkit/format.hpp"
#include "branchkit/lattice.hpp"
#include "branchkit/precision.hpp"

namespace branchkit {

enum class DomainKind { Bool, FiniteEnum, IntInterval, SetInterval, RealInterval, LatticeInterval };

inline const char* kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::Bool: return "bool";
    case DomainKind::FiniteEnum: return "enum";
    case DomainKind::IntInterval: return "int";
    case DomainKind::SetInterval: return "set";
    case DomainKind::RealInterval: return "real";
    case DomainKind::LatticeInterval: return "lattice";
  }
  return "?";
}

enum class Cardinality { Empty, One, Many };

// ---------------------------------------------------------------------------
// Per-kind subset values.

/// Explicit finite value set, kept sorted ascending and duplicate-free.
struct FiniteSetValue {
  std::vector<std::int64_t> values;
  bool operator==(const FiniteSetValue&) const = default;
};

struct IntIntervalValue {
  std::int64_t lo = 0, hi = 0;
  bool empty = false;
  bool operator==(const IntIntervalValue&) const = default;
};

/// The family {s | lo <= s <= hi} of integer sets; lo and hi sorted.
struct SetIntervalValue {
  std::vector<std::int64_t> lo, hi;
  bool empty = false;
  bool operator==(const SetIntervalValue&) const = default;
};

/// Closed real interval [lo, hi].
struct RealIntervalValue {
  double lo = 0.0, hi = 0.0;
  bool empty = false;
  bool operator==(const RealIntervalValue&) const = default;
};

/// Interval {a,b} over an abstract lattice, open or closed at each end.
struct LatticeIntervalValue {
  double lo = 0.0, hi = 0.0;
  bool lo_closed = true, hi_closed = true;
  bool empty = false;
  LatticePtr lattice;
  bool operator==(const LatticeIntervalValue& o) const {
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed &&
           hi_closed == o.hi_closed && empty == o.empty && lattice == o.lattice;
  }
};

namespace detail {

inline bool sorted_subset(const std::vector<std::int64_t>& a,
                          const std::vector<std::int64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<std::int64_t> sorted_union(std::vector<std::int64_t> a,
                                              const std::vector<std::int64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline std::vector<std::int64_t> sorted_intersection(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<std::int64_t> sorted_difference(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<std::int64_t> normalised(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// DomainValue: one cell of a constraint store.

class DomainValue {
 public:
  using Payload = std::variant<FiniteSetValue, IntIntervalValue, SetIntervalValue,
                               RealIntervalValue, LatticeIntervalValue>;

  DomainValue(DomainKind kind, Payload payload)
      : kind_(kind), payload_(std::move(payload)) {}

  static DomainValue finite(std::vector<std::int64_t> values,
                            DomainKind kind = DomainKind::FiniteEnum) {
    return DomainValue(kind, FiniteSetValue{detail::normalised(std::move(values))});
  }

  static DomainValue boolean(std::vector<std::int64_t> values) {
    return finite(std::move(values), DomainKind::Bool);
  }

  static DomainValue int_interval(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) return DomainValue(DomainKind::IntInterval, IntIntervalValue{0, 0, true});
    return DomainValue(DomainKind::IntInterval, IntIntervalValue{lo, hi, false});
  }

  static DomainValue empty_int_interval() {
    return DomainValue(DomainKind::IntInterval, IntIntervalValue{0, 0, true});
  }

  static DomainValue set_interval(std::vector<std::int64_t> lo,
                                  std::vector<std::int64_t> hi) {
    auto l = detail::normalised(std::move(lo));
    auto h = detail::normalised(std::move(hi));
    if (!detail::sorted_subset(l, h))
      return DomainValue(DomainKind::SetInterval, SetIntervalValue{{}, {}, true});
    return DomainValue(DomainKind::SetInterval,
                       SetIntervalValue{std::move(l), std::move(h), false});
  }

  static DomainValue empty_set_interval() {
    return DomainValue(DomainKind::SetInterval, SetIntervalValue{{}, {}, true});
  }

  static DomainValue real_interval(double lo, double hi) {
    if (!(lo <= hi)) return DomainValue(DomainKind::RealInterval, RealIntervalValue{0, 0, true});
    return DomainValue(DomainKind::RealInterval, RealIntervalValue{lo, hi, false});
  }

  static DomainValue empty_real_interval() {
    return DomainValue(DomainKind::RealInterval, RealIntervalValue{0, 0, true});
  }

  /// Normalises degenerate forms: non-comparable endpoints, or a == b with an
  /// open end, denote the empty interval.
  static DomainValue lattice_interval(double lo, double hi, bool lo_closed,
                                      bool hi_closed, LatticePtr lattice) {
    if (!lattice) throw std::invalid_argument("lattice interval without a lattice handle");
    LatticeIntervalValue v{lo, hi, lo_closed, hi_closed, false, lattice};
    if (!lattice->leq(lo, hi) || (lattice->equal(lo, hi) && !(lo_closed && hi_closed))) {
      v.empty = true;
      v.lo = v.hi = lattice->bottom();
      v.lo_closed = v.hi_closed = true;
    }
    return DomainValue(DomainKind::LatticeInterval, std::move(v));
  }

  static DomainValue empty_lattice_interval(LatticePtr lattice) {
    LatticeIntervalValue v{0, 0, true, true, true, std::move(lattice)};
    return DomainValue(DomainKind::LatticeInterval, std::move(v));
  }

  DomainKind kind() const { return kind_; }

  template <class T>
  const T& as() const {
    return std::get<T>(payload_);
  }

  bool operator==(const DomainValue& o) const {
    return kind_ == o.kind_ && payload_ == o.payload_;
  }

 private:
  DomainKind kind_;
  Payload payload_;
};

// ---------------------------------------------------------------------------
// Cardinality, emptiness, subset tests.

inline Cardinality cardinality_of(const DomainValue& d) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      auto n = d.as<FiniteSetValue>().values.size();
      return n == 0 ? Cardinality::Empty : n == 1 ? Cardinality::One : Cardinality::Many;
    }
    case DomainKind::IntInterval: {
      const auto& v = d.as<IntIntervalValue>();
      if (v.empty) return Cardinality::Empty;
      return v.lo == v.hi ? Cardinality::One : Cardinality::Many;
    }
    case DomainKind::SetInterval: {
      const auto& v = d.as<SetIntervalValue>();
      if (v.empty) return Cardinality::Empty;
      return v.lo == v.hi ? Cardinality::One : Cardinality::Many;
    }
    case DomainKind::RealInterval: {
      const auto& v = d.as<RealIntervalValue>();
      if (v.empty) return Cardinality::Empty;
      return v.lo == v.hi ? Cardinality::One : Cardinality::Many;
    }
    case DomainKind::LatticeInterval: {
      const auto& v = d.as<LatticeIntervalValue>();
      if (v.empty) return Cardinality::Empty;
      if (v.lo_closed && v.hi_closed && v.lattice->equal(v.lo, v.hi)) return Cardinality::One;
      return Cardinality::Many;
    }
  }
  throw std::logic_error("bad kind");
}

inline bool is_empty(const DomainValue& d) {
  return cardinality_of(d) == Cardinality::Empty;
}

/// Subset inclusion between two values of the same kind.
inline bool value_subset(const DomainValue& a, const DomainValue& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("subset test across domain kinds");
  if (is_empty(a)) return true;
  if (is_empty(b)) return false;
  switch (a.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum:
      return detail::sorted_subset(a.as<FiniteSetValue>().values,
                                   b.as<FiniteSetValue>().values);
    case DomainKind::IntInterval: {
      const auto& x = a.as<IntIntervalValue>();
      const auto& y = b.as<IntIntervalValue>();
      return y.lo <= x.lo && x.hi <= y.hi;
    }
    case DomainKind::SetInterval: {
      // a..b <= a'..b' as families iff a' <= a and b <= b'.
      const auto& x = a.as<SetIntervalValue>();
      const auto& y = b.as<SetIntervalValue>();
      return detail::sorted_subset(y.lo, x.lo) && detail::sorted_subset(x.hi, y.hi);
    }
    case DomainKind::RealInterval: {
      const auto& x = a.as<RealIntervalValue>();
      const auto& y = b.as<RealIntervalValue>();
      return y.lo <= x.lo && x.hi <= y.hi;
    }
    case DomainKind::LatticeInterval: {
      const auto& x = a.as<LatticeIntervalValue>();
      const auto& y = b.as<LatticeIntervalValue>();
      if (x.lattice != y.lattice)
        throw std::invalid_argument("subset test across lattice handles");
      const Lattice& L = *x.lattice;
      bool lo_ok = L.less(y.lo, x.lo) ||
                   (L.equal(y.lo, x.lo) && (y.lo_closed || !x.lo_closed));
      bool hi_ok = L.less(x.hi, y.hi) ||
                   (L.equal(x.hi, y.hi) && (y.hi_closed || !x.hi_closed));
      return lo_ok && hi_ok;
    }
  }
  throw std::logic_error("bad kind");
}

inline bool value_strict_subset(const DomainValue& a, const DomainValue& b) {
  return value_subset(a, b) && !value_subset(b, a);
}

// ---------------------------------------------------------------------------
// Precision maps (one per computation domain, strictly monotonic on subset).

inline PrecisionValue fd_precision(const FiniteSetValue& d) {
  return {static_cast<double>(d.values.size()), 0};
}

inline PrecisionValue int_interval_precision(const IntIntervalValue& d) {
  if (d.empty) throw std::invalid_argument("precision of empty interval");
  return {static_cast<double>(d.hi - d.lo), 0};
}

inline PrecisionValue set_interval_precision(const SetIntervalValue& d) {
  if (d.empty) throw std::invalid_argument("precision of empty set interval");
  return {static_cast<double>(d.hi.size()) - static_cast<double>(d.lo.size()), 0};
}

inline PrecisionValue real_interval_precision(const RealIntervalValue& d) {
  if (d.empty) throw std::invalid_argument("precision of empty interval");
  return {d.hi - d.lo, 2};
}

/// (diff(b,a), tag) with tag 2 closed-closed, 1 half-open, 0 open-open.
inline PrecisionValue lattice_interval_precision(const LatticeIntervalValue& d) {
  if (d.empty) throw std::invalid_argument("precision of empty interval");
  std::int64_t tag = (d.lo_closed ? 1 : 0) + (d.hi_closed ? 1 : 0);
  return {d.lattice->diff(d.hi, d.lo), tag};
}

inline PrecisionValue value_precision(const DomainValue& d) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: return fd_precision(d.as<FiniteSetValue>());
    case DomainKind::IntInterval: return int_interval_precision(d.as<IntIntervalValue>());
    case DomainKind::SetInterval: return set_interval_precision(d.as<SetIntervalValue>());
    case DomainKind::RealInterval: return real_interval_precision(d.as<RealIntervalValue>());
    case DomainKind::LatticeInterval:
      return lattice_interval_precision(d.as<LatticeIntervalValue>());
  }
  throw std::logic_error("bad kind");
}

// ---------------------------------------------------------------------------
// Splitting functions. Each returns strict sub-parts whose union is the input.

/// ({min}, rest): naive left-to-right enumeration.
inline std::pair<DomainValue, DomainValue> fd_split(const FiniteSetValue& d,
                                                    DomainKind kind) {
  if (d.values.size() < 2) throw std::invalid_argument("split of non-divisible value");
  std::vector<std::int64_t> head{d.values.front()};
  std::vector<std::int64_t> rest(d.values.begin() + 1, d.values.end());
  return {DomainValue::finite(std::move(head), kind),
          DomainValue::finite(std::move(rest), kind)};
}

inline std::pair<DomainValue, DomainValue> int_interval_split(const IntIntervalValue& d) {
  if (d.empty || d.lo >= d.hi) throw std::invalid_argument("split of non-divisible value");
  return {DomainValue::int_interval(d.lo, d.lo),
          DomainValue::int_interval(d.lo + 1, d.hi)};
}

/// (lo..hi\{c}, lo+{c}..hi) with c = min(hi \ lo); partitions the family.
inline std::pair<DomainValue, DomainValue> set_interval_split(const SetIntervalValue& d) {
  if (d.empty || d.lo == d.hi) throw std::invalid_argument("split of non-divisible value");
  auto free = detail::sorted_difference(d.hi, d.lo);
  std::int64_t c = free.front();
  auto hi_without = detail::sorted_difference(d.hi, {c});
  auto lo_with = detail::sorted_union(d.lo, {c});
  return {DomainValue::set_interval(d.lo, std::move(hi_without)),
          DomainValue::set_interval(std::move(lo_with), d.hi)};
}

/// Overlapping closed halves sharing the midpoint. When no representable
/// interior midpoint exists the two endpoint singletons are returned, which
/// still covers every representable double in the input.
inline std::pair<DomainValue, DomainValue> real_interval_split(const RealIntervalValue& d) {
  if (d.empty || !(d.lo < d.hi)) throw std::invalid_argument("split of non-divisible value");
  double m = d.lo + (d.hi - d.lo) / 2.0;
  if (m <= d.lo || m >= d.hi)
    return {DomainValue::real_interval(d.lo, d.lo),
            DomainValue::real_interval(d.hi, d.hi)};
  return {DomainValue::real_interval(d.lo, m), DomainValue::real_interval(m, d.hi)};
}

/// ({a,c], (c,b}): the left part keeps the input's left openness and closes
/// at the cut; the right part opens at the cut and keeps the right openness.
inline std::pair<DomainValue, DomainValue> lattice_interval_split(
    const LatticeIntervalValue& d, double cut) {
  const Lattice& L = *d.lattice;
  if (d.empty || (d.lo_closed && d.hi_closed && L.equal(d.lo, d.hi)))
    throw std::invalid_argument("split of non-divisible value");
  if (!L.leq(d.lo, cut) || !L.less(cut, d.hi))
    throw std::invalid_argument("lattice cut outside [lo, hi)");
  return {DomainValue::lattice_interval(d.lo, cut, d.lo_closed, true, d.lattice),
          DomainValue::lattice_interval(cut, d.hi, false, d.hi_closed, d.lattice)};
}

/// Engine-facing dispatch; every built-in kind is binary but callers accept
/// any arity greater than one.
inline std::vector<DomainValue> split_value(const DomainValue& d) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      auto [a, b] = fd_split(d.as<FiniteSetValue>(), d.kind());
      return {std::move(a), std::move(b)};
    }
    case DomainKind::IntInterval: {
      auto [a, b] = int_interval_split(d.as<IntIntervalValue>());
      return {std::move(a), std::move(b)};
    }
    case DomainKind::SetInterval: {
      auto [a, b] = set_interval_split(d.as<SetIntervalValue>());
      return {std::move(a), std::move(b)};
    }
    case DomainKind::RealInterval: {
      auto [a, b] = real_interval_split(d.as<RealIntervalValue>());
      return {std::move(a), std::move(b)};
    }
    case DomainKind::LatticeInterval: {
      const auto& v = d.as<LatticeIntervalValue>();
      auto c = v.lattice->cut(v.lo, v.hi);
      if (!c) throw std::invalid_argument("lattice handle provided no cut");
      auto [a, b] = lattice_interval_split(v, *c);
      return {std::move(a), std::move(b)};
    }
  }
  throw std::logic_error("bad kind");
}

// ---------------------------------------------------------------------------
// Descriptors: the computation domain a variable ranges over.

struct DomainDescriptor {
  DomainKind kind = DomainKind::Bool;
  std::vector<std::int64_t> universe;  // FiniteEnum values / SetInterval ground set
  std::int64_t int_lo = 0, int_hi = 0;
  double real_lo = 0.0, real_hi = 0.0;
  LatticePtr lattice;

  static DomainDescriptor boolean() {
    return {DomainKind::Bool, {0, 1}, 0, 0, 0.0, 0.0, nullptr};
  }
  static DomainDescriptor finite_enum(std::vector<std::int64_t> values) {
    if (values.empty()) throw std::invalid_argument("empty enum domain");
    return {DomainKind::FiniteEnum, detail::normalised(std::move(values)), 0, 0, 0.0, 0.0, nullptr};
  }
  static DomainDescriptor int_interval(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("int domain with lo > hi");
    return {DomainKind::IntInterval, {}, lo, hi, 0.0, 0.0, nullptr};
  }
  static DomainDescriptor set_interval(std::vector<std::int64_t> universe) {
    return {DomainKind::SetInterval, detail::normalised(std::move(universe)), 0, 0, 0.0, 0.0, nullptr};
  }
  static DomainDescriptor real_interval(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("real domain with lo > hi");
    return {DomainKind::RealInterval, {}, 0, 0, lo, hi, nullptr};
  }
  static DomainDescriptor lattice_interval(LatticePtr handle) {
    if (!handle) throw std::invalid_argument("null lattice handle");
    DomainDescriptor d;
    d.kind = DomainKind::LatticeInterval;
    d.lattice = std::move(handle);
    return d;
  }

  /// The whole domain as a store cell (the top subset).
  DomainValue full_value() const {
    switch (kind) {
      case DomainKind::Bool: return DomainValue::boolean({0, 1});
      case DomainKind::FiniteEnum: return DomainValue::finite(universe);
      case DomainKind::IntInterval: return DomainValue::int_interval(int_lo, int_hi);
      case DomainKind::SetInterval: return DomainValue::set_interval({}, universe);
      case DomainKind::RealInterval: return DomainValue::real_interval(real_lo, real_hi);
      case DomainKind::LatticeInterval:
        return DomainValue::lattice_interval(lattice->bottom(), lattice->top(), true, true, lattice);
    }
    throw std::logic_error("bad kind");
  }

  /// Whether a cell value is a subset of this domain.
  bool admits(const DomainValue& v) const {
    if (v.kind() != kind) return false;
    if (kind == DomainKind::LatticeInterval &&
        v.as<LatticeIntervalValue>().lattice != lattice)
      return false;
    return value_subset(v, full_value());
  }

  bool operator==(const DomainDescriptor& o) const {
    return kind == o.kind && universe == o.universe && int_lo == o.int_lo &&
           int_hi == o.int_hi && real_lo == o.real_lo && real_hi == o.real_hi &&
           lattice == o.lattice;
  }
};

// ---------------------------------------------------------------------------
// Formatting.

inline std::string format_int_set(const std::vector<std::int64_t>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += format_int(vs[i]);
  }
  out += "}";
  return out;
}

inline std::string format_value(const DomainValue& d) {
  switch (d.kind()) {
    case DomainKind::Bool:
    case DomainKind::FiniteEnum: {
      const auto& v = d.as<FiniteSetValue>().values;
      if (v.size() == 1) return format_int(v.front());
      return format_int_set(v);
    }
    case DomainKind::IntInterval: {
      const auto& v = d.as<IntIntervalValue>();
      if (v.empty) return "{}";
      if (v.lo == v.hi) return format_int(v.lo);
      return format_int(v.lo) + ".." + format_int(v.hi);
    }
    case DomainKind::SetInterval: {
      const auto& v = d.as<SetIntervalValue>();
      if (v.empty) return "{}";
      if (v.lo == v.hi) return format_int_set(v.lo);
      return format_int_set(v.lo) + ".." + format_int_set(v.hi);
    }
    case DomainKind::RealInterval: {
      const auto& v = d.as<RealIntervalValue>();
      if (v.empty) return "{}";
      if (v.lo == v.hi) return format_double(v.lo);
      return "[" + format_double(v.lo) + "," + format_double(v.hi) + "]";
    }
    case DomainKind::LatticeInterval: {
      const auto& v = d.as<LatticeIntervalValue>();
      if (v.empty) return "{}";
      std::string out = v.lo_closed ? "[" : "(";
      out += v.lattice->format(v.lo) + "," + v.lattice->format(v.hi);
      out += v.hi_closed ? "]" : ")";
      return out;
    }
  }
  throw std::logic_error("bad kind");
}

}  // namespace branchkit

#endif  // BRANCHKIT_DOMAIN_HPP
