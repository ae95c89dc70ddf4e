#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pireg {

enum class Side { Left, Right };

// One breakpoint of a wide-sense increasing function on [0, inf).
//   left  = f(x-)   (equals value at x = 0, where no left limit exists)
//   value = f(x)
//   right = f(x+)
//   slope = slope of the affine piece on (x, next x), or of the tail
// Monotonicity at a jump requires left <= value <= right, and consecutive
// breakpoints must be consistent: next.left = right + slope * (next.x - x).
struct CurveBreakpoint {
  Rat x;
  ExtRat left;
  ExtRat value;
  ExtRat right;
  Rat slope;
};

// Eventually-periodic tail: f(t + period) = f(t) + increment for t >= start.
// Explicit breakpoints must fully describe f on [0, start + period).
struct PeriodicTail {
  Rat start;
  Rat period;     // > 0
  Rat increment;  // > 0 in canonical form (0 collapses to a plateau)
};

class curve_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact piecewise-affine-plus-jumps wide-sense increasing function on the
// nonnegative reals, with an affine or eventually-periodic tail. Values live
// in [0, +inf]; once a value is +inf it stays +inf. Immutable after
// construction; all operations are pure.
class Curve {
 public:
  static Curve from_breakpoints(std::vector<CurveBreakpoint> bps,
                                std::optional<PeriodicTail> tail = std::nullopt);

  // External 4-tuple form (x, y_left, y, slope): right values are derived
  // from the following breakpoint's left value; the last right equals y.
  struct Point {
    Rat x;
    ExtRat left;
    ExtRat value;
    Rat slope;
  };
  static Curve from_points(const std::vector<Point>& pts);

  static Curve constant(const ExtRat& v);
  static Curve zero() { return constant(ExtRat(0)); }
  static Curve identity();
  // f(0) = 0 and f(t) = rate*t + burst for t > 0.
  static Curve affine(const Rat& rate, const Rat& burst);
  // f(t) = burst * ceil(t / tau), left-continuous staircase.
  static Curve staircase(const Rat& tau, const Rat& burst);
  // Left-continuous step function: jumps at the given (x, new right value)
  // positions, starting from the given initial value. Used for cumulative
  // arrival functions.
  static Curve left_continuous_steps(const ExtRat& initial,
                                     const std::vector<std::pair<Rat, ExtRat>>& jumps);

  ExtRat eval(const Rat& t) const;
  // f-(t) for Side::Left (requires t > 0), f+(t) for Side::Right (t >= 0).
  ExtRat limit(const Rat& t, Side side) const;

  Curve right_continuous() const;  // f+ as a curve
  Curve left_continuous() const;   // f- as a curve
  Curve lower_pseudo_inverse() const;  // inf{s >= 0 : f(s) >= x}
  Curve upper_pseudo_inverse() const;  // inf{s >= 0 : f(s) > x} = sup{s : f(s) <= x}

  bool is_right_continuous() const;
  bool is_left_continuous() const;

  const std::vector<CurveBreakpoint>& breakpoints() const { return bps_; }
  const std::optional<PeriodicTail>& periodic() const { return periodic_; }

  // Breakpoint abscissae up to and including `hi` (periodic tails unrolled).
  std::vector<Rat> knots_up_to(const Rat& hi) const;

  // Exact decision of pointwise equality (values and one-sided limits) on
  // all of [0, inf).
  static bool equal_everywhere(const Curve& a, const Curve& b);
  friend bool operator==(const Curve& a, const Curve& b) { return equal_everywhere(a, b); }
  friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

  std::string str() const;

 private:
  Curve(std::vector<CurveBreakpoint> bps, std::optional<PeriodicTail> tail);
  void validate_and_canonicalize();

  ExtRat eval_explicit(const Rat& t) const;
  ExtRat limit_explicit(const Rat& t, Side side) const;
  // Index of the last breakpoint with x <= t (t >= 0 so it exists).
  std::size_t segment_index(const Rat& t) const;
  // Breakpoints describing f on [0, hi] with periodic tails unrolled,
  // together with the slope in effect after the last returned breakpoint.
  std::pair<std::vector<CurveBreakpoint>, Rat> unrolled(const Rat& hi) const;

  Curve pseudo_inverse(bool lower) const;

  std::vector<CurveBreakpoint> bps_;
  std::optional<PeriodicTail> periodic_;
};

}  // namespace pireg
