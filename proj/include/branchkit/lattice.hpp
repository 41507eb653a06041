#ifndef BRANCHKIT_LATTICE_HPP
#define BRANCHKIT_LATTICE_HPP

#include <memory>
#include <optional>
#include <string>

#include "branchkit/format.hpp"

namespace branchkit {

/// Handle for an abstract lattice L whose elements are encoded as doubles.
/// Supplies the partial order, the bounds, the measure map diff (strictly
/// monotonic in its first argument, strictly anti-monotonic in its second)
/// and a cut chooser used when an interval over L is split. Handles must be
/// immutable and shareable.
class Lattice {
 public:
  virtual ~Lattice() = default;

  virtual double bottom() const = 0;
  virtual double top() const = 0;
  virtual bool leq(double a, double b) const = 0;

  /// The map o_L : L x L -> R, evaluated as diff(b, a) for an interval {a,b}.
  virtual double diff(double b, double a) const = 0;

  /// Some c with a <= c < b, or nullopt when no such element is known.
  virtual std::optional<double> cut(double a, double b) const = 0;

  virtual std::string format(double v) const { return format_double(v); }

  bool equal(double a, double b) const { return leq(a, b) && leq(b, a); }
  bool less(double a, double b) const { return leq(a, b) && !leq(b, a); }
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// The reals as a lattice with diff = subtraction and midpoint cuts; with it
/// the interval-over-lattice machinery degenerates to ordinary real interval
/// bisection with exact half-open splits.
class RealLattice final : public Lattice {
 public:
  RealLattice(double lo, double hi) : lo_(lo), hi_(hi) {}

  double bottom() const override { return lo_; }
  double top() const override { return hi_; }
  bool leq(double a, double b) const override { return a <= b; }
  double diff(double b, double a) const override { return b - a; }

  std::optional<double> cut(double a, double b) const override {
    if (!(a < b)) return std::nullopt;
    double m = a + (b - a) / 2.0;
    if (m >= b) m = a;  // adjacent doubles: fall back to the degenerate cut
    return m;
  }

 private:
  double lo_, hi_;
};

inline LatticePtr make_real_lattice(double lo, double hi) {
  return std::make_shared<RealLattice>(lo, hi);
}

}  // namespace branchkit

#endif  // BRANCHKIT_LATTICE_HPP
