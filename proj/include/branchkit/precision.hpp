#ifndef BRANCHKIT_PRECISION_HPP
#define BRANCHKIT_PRECISION_HPP

#include <cstdint>
#include <limits>

namespace branchkit {

namespace detail {

inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    return b > 0 ? std::numeric_limits<std::int64_t>::max()
                 : std::numeric_limits<std::int64_t>::min();
  return r;
}

inline std::int64_t sat_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    return b < 0 ? std::numeric_limits<std::int64_t>::max()
                 : std::numeric_limits<std::int64_t>::min();
  return r;
}

}  // namespace detail

/// An element of the measure domain R+ x Integer used by precision maps.
/// The real part is a non-negative double, with +inf acting as a fictitious
/// top; the integer part doubles as an openness tag for interval domains.
struct PrecisionValue {
  double real_part = 0.0;
  std::int64_t int_part = 0;

  static constexpr PrecisionValue top() {
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<std::int64_t>::max()};
  }

  bool is_top() const {
    return real_part == std::numeric_limits<double>::infinity() &&
           int_part == std::numeric_limits<std::int64_t>::max();
  }

  bool operator==(const PrecisionValue&) const = default;
};

inline PrecisionValue operator+(PrecisionValue a, PrecisionValue b) {
  return {a.real_part + b.real_part, detail::sat_add(a.int_part, b.int_part)};
}

/// Componentwise difference. Only meaningful along a descending chain
/// (a >= b); a negative real part can then only come from float rounding
/// and is clamped to 0. An infinite real part stays infinite.
inline PrecisionValue operator-(PrecisionValue a, PrecisionValue b) {
  double r;
  if (a.real_part == std::numeric_limits<double>::infinity())
    r = a.real_part;
  else
    r = a.real_part - b.real_part;
  if (r < 0.0) r = 0.0;
  return {r, detail::sat_sub(a.int_part, b.int_part)};
}

// Total order: lexicographic, real part first.
inline bool operator<(PrecisionValue a, PrecisionValue b) {
  if (a.real_part != b.real_part) return a.real_part < b.real_part;
  return a.int_part < b.int_part;
}

inline bool operator<=(PrecisionValue a, PrecisionValue b) {
  if (a.real_part != b.real_part) return a.real_part < b.real_part;
  return a.int_part <= b.int_part;
}

inline bool operator>(PrecisionValue a, PrecisionValue b) { return b < a; }
inline bool operator>=(PrecisionValue a, PrecisionValue b) { return b <= a; }

}  // namespace branchkit

#endif  // BRANCHKIT_PRECISION_HPP
