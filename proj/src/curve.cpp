#include "curve.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace pireg {

namespace {

ExtRat shift(const ExtRat& v, const Rat& d) {
  return v.is_pos_inf() ? ExtRat::pos_inf() : ExtRat(v.finite() + d);
}

}  // namespace

Curve::Curve(std::vector<CurveBreakpoint> bps, std::optional<PeriodicTail> tail)
    : bps_(std::move(bps)), periodic_(std::move(tail)) {
  validate_and_canonicalize();
}

Curve Curve::from_breakpoints(std::vector<CurveBreakpoint> bps, std::optional<PeriodicTail> tail) {
  return Curve(std::move(bps), std::move(tail));
}

Curve Curve::from_points(const std::vector<Point>& pts) {
  if (pts.empty()) throw curve_error("curve needs at least one point");
  std::vector<CurveBreakpoint> bps;
  bps.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ExtRat right = pts[i].value;
    if (i + 1 < pts.size()) {
      const ExtRat& next_left = pts[i + 1].left;
      if (next_left.is_pos_inf()) {
        right = ExtRat::pos_inf();
      } else {
        right = ExtRat(next_left.finite() - pts[i].slope * (pts[i + 1].x - pts[i].x));
      }
    }
    bps.push_back({pts[i].x, pts[i].left, pts[i].value, right, pts[i].slope});
  }
  return Curve(std::move(bps), std::nullopt);
}

Curve Curve::constant(const ExtRat& v) {
  return Curve({{Rat(0), v, v, v, Rat(0)}}, std::nullopt);
}

Curve Curve::identity() {
  return Curve({{Rat(0), ExtRat(0), ExtRat(0), ExtRat(0), Rat(1)}}, std::nullopt);
}

Curve Curve::affine(const Rat& rate, const Rat& burst) {
  if (rate.sign() < 0 || burst.sign() < 0) throw curve_error("affine curve needs rate, burst >= 0");
  return Curve({{Rat(0), ExtRat(0), ExtRat(0), ExtRat(burst), rate}}, std::nullopt);
}

Curve Curve::staircase(const Rat& tau, const Rat& burst) {
  if (tau.sign() <= 0 || burst.sign() <= 0) throw curve_error("staircase curve needs tau, burst > 0");
  return Curve({{Rat(0), ExtRat(0), ExtRat(0), ExtRat(burst), Rat(0)}},
               PeriodicTail{Rat(0), tau, burst});
}

Curve Curve::left_continuous_steps(const ExtRat& initial,
                                   const std::vector<std::pair<Rat, ExtRat>>& jumps) {
  std::vector<CurveBreakpoint> bps;
  ExtRat level = initial;
  if (jumps.empty() || jumps.front().first.sign() > 0) {
    bps.push_back({Rat(0), initial, initial, initial, Rat(0)});
  }
  for (const auto& [x, to] : jumps) {
    if (to < level) throw curve_error("step function must be wide-sense increasing");
    bps.push_back({x, level, level, to, Rat(0)});
    level = to;
  }
  return Curve(std::move(bps), std::nullopt);
}

void Curve::validate_and_canonicalize() {
  if (bps_.empty()) throw curve_error("curve needs at least one breakpoint");
  if (!bps_.front().x.is_zero()) throw curve_error("first breakpoint must be at x = 0");
  bps_.front().left = bps_.front().value;  // no left limit at 0

  const ExtRat zero{Rat(0)};
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    const auto& b = bps_[i];
    if (i > 0 && !(bps_[i - 1].x < b.x)) throw curve_error("breakpoint abscissae must be strictly increasing");
    if (b.slope.sign() < 0) throw curve_error("negative slope");
    if (b.left.is_neg_inf() || b.value.is_neg_inf() || b.right.is_neg_inf() ||
        b.left < zero || b.value < zero || b.right < zero)
      throw curve_error("curve values must lie in [0, +inf]");
    if (!(b.left <= b.value) || !(b.value <= b.right))
      throw curve_error("monotonicity violated at a breakpoint jump");
  }

  // Truncate at the first point where the function becomes +inf.
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    if (bps_[i].value.is_pos_inf() || bps_[i].right.is_pos_inf()) {
      bps_[i].right = ExtRat::pos_inf();
      bps_[i].slope = Rat(0);
      bps_.resize(i + 1);
      if (periodic_) throw curve_error("periodic tail requires finite values");
      break;
    }
  }

  // Segment consistency: the next left value is the end of this segment.
  for (std::size_t i = 0; i + 1 < bps_.size(); ++i) {
    ExtRat expected = ExtRat(bps_[i].right.finite() + bps_[i].slope * (bps_[i + 1].x - bps_[i].x));
    if (bps_[i + 1].left != expected)
      throw curve_error("inconsistent breakpoints: left value does not meet the incoming segment");
  }

  if (periodic_) {
    const auto& pt = *periodic_;
    if (pt.period.sign() <= 0) throw curve_error("periodic tail needs period > 0");
    if (pt.increment.sign() < 0) throw curve_error("periodic tail needs increment >= 0");
    if (pt.start.sign() < 0) throw curve_error("periodic tail needs start >= 0");
    Rat end = pt.start + pt.period;
    if (!(bps_.back().x < end)) throw curve_error("breakpoints must stay within one period of the tail start");
    // Anchor breakpoint at the tail start so the pattern can be unrolled.
    std::size_t si = segment_index(pt.start);
    if (bps_[si].x != pt.start) {
      CurveBreakpoint anchor;
      anchor.x = pt.start;
      ExtRat v = eval_explicit(pt.start);
      anchor.left = v;
      anchor.value = v;
      anchor.right = v;
      anchor.slope = bps_[si].slope;
      bps_.insert(bps_.begin() + static_cast<std::ptrdiff_t>(si) + 1, anchor);
    }
    ExtRat wrap_from = eval_explicit(pt.start) + pt.increment;
    ExtRat wrap_to = limit_explicit(end, Side::Left);
    if (wrap_from < wrap_to) throw curve_error("periodic tail breaks monotonicity at the period boundary");
    if (pt.increment.is_zero()) periodic_.reset();  // constant from start on
  }

  auto merge_pass = [this]() {
    std::vector<CurveBreakpoint> out;
    out.reserve(bps_.size());
    out.push_back(bps_.front());
    for (std::size_t i = 1; i < bps_.size(); ++i) {
      const auto& b = bps_[i];
      bool anchor = periodic_ && b.x == periodic_->start;
      bool continuous = b.left == b.value && b.value == b.right;
      if (!anchor && continuous && b.slope == out.back().slope) continue;
      out.push_back(b);
    }
    bps_ = std::move(out);
  };
  merge_pass();

  if (periodic_) {
    // A pattern that is a pure ramp from the anchor collapses to an affine tail.
    const auto& pt = *periodic_;
    const auto& last = bps_.back();
    if (last.x == pt.start && last.value == last.right &&
        ExtRat(last.value.finite() + pt.increment) == limit_explicit(pt.start + pt.period, Side::Left) &&
        pt.increment == last.slope * pt.period) {
      periodic_.reset();
      merge_pass();
    }
  }
}

std::size_t Curve::segment_index(const Rat& t) const {
  std::size_t lo = 0, hi = bps_.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (bps_[mid].x <= t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

ExtRat Curve::eval_explicit(const Rat& t) const {
  std::size_t i = segment_index(t);
  const auto& b = bps_[i];
  if (b.x == t) return b.value;
  if (b.right.is_pos_inf()) return ExtRat::pos_inf();
  return ExtRat(b.right.finite() + b.slope * (t - b.x));
}

ExtRat Curve::limit_explicit(const Rat& t, Side side) const {
  std::size_t i = segment_index(t);
  const auto& b = bps_[i];
  if (b.x == t) return side == Side::Left ? b.left : b.right;
  if (b.right.is_pos_inf()) return ExtRat::pos_inf();
  return ExtRat(b.right.finite() + b.slope * (t - b.x));
}

ExtRat Curve::eval(const Rat& t) const {
  if (t.sign() < 0) throw domain_error("curve evaluated at negative abscissa");
  if (periodic_) {
    Rat end = periodic_->start + periodic_->period;
    if (t >= end) {
      Rat k(mpq_class(((t - periodic_->start) / periodic_->period).floor()));
      return eval_explicit(t - k * periodic_->period) + k * periodic_->increment;
    }
  }
  return eval_explicit(t);
}

ExtRat Curve::limit(const Rat& t, Side side) const {
  if (side == Side::Left) {
    if (t.sign() <= 0) throw domain_error("left limit requires t > 0");
  } else {
    if (t.sign() < 0) throw domain_error("right limit requires t >= 0");
  }
  if (periodic_) {
    Rat end = periodic_->start + periodic_->period;
    if (t >= end) {
      Rat k(mpq_class(((t - periodic_->start) / periodic_->period).floor()));
      Rat reduced = t - k * periodic_->period;
      if (side == Side::Left && reduced == periodic_->start) {
        return limit_explicit(end, Side::Left) + (k - Rat(1)) * periodic_->increment;
      }
      return limit_explicit(reduced, side) + k * periodic_->increment;
    }
  }
  return limit_explicit(t, side);
}

Curve Curve::right_continuous() const {
  std::vector<CurveBreakpoint> bps = bps_;
  for (auto& b : bps) b.value = b.right;
  return Curve(std::move(bps), periodic_);
}

Curve Curve::left_continuous() const {
  if (!periodic_) {
    std::vector<CurveBreakpoint> bps = bps_;
    for (std::size_t i = 1; i < bps.size(); ++i) bps[i].value = bps[i].left;
    return Curve(std::move(bps), std::nullopt);
  }
  // The left limit at a period boundary looks back into the previous period,
  // so the anchor value of f- at `start` is not value(start)'s shift. Unroll
  // one period and anchor the tail at start + period, where the pattern of
  // f- repeats cleanly.
  const auto& pt = *periodic_;
  Rat new_start = pt.start + pt.period;
  auto [bps, slope] = unrolled(new_start + pt.period);
  while (!bps.empty() && bps.back().x >= new_start + pt.period) bps.pop_back();
  for (std::size_t i = 1; i < bps.size(); ++i) bps[i].value = bps[i].left;
  return Curve(std::move(bps), PeriodicTail{new_start, pt.period, pt.increment});
}

bool Curve::is_right_continuous() const {
  for (const auto& b : bps_)
    if (b.value != b.right) return false;
  return true;
}

bool Curve::is_left_continuous() const {
  for (std::size_t i = 1; i < bps_.size(); ++i)
    if (bps_[i].value != bps_[i].left) return false;
  return true;
}

std::pair<std::vector<CurveBreakpoint>, Rat> Curve::unrolled(const Rat& hi) const {
  std::vector<CurveBreakpoint> out;
  for (const auto& b : bps_)
    if (b.x <= hi) out.push_back(b);
  if (out.empty()) out.push_back(bps_.front());
  if (periodic_) {
    const auto& pt = *periodic_;
    Rat end = pt.start + pt.period;
    // Pattern breakpoints live in [start, start + period); the anchor at
    // `start` exists by canonical form. The copy of the anchor at a period
    // boundary carries the wrap's left limit, not the anchor's.
    std::vector<CurveBreakpoint> pattern;
    for (const auto& b : bps_)
      if (b.x >= pt.start) pattern.push_back(b);
    ExtRat wrap_left = limit_explicit(end, Side::Left);
    for (Rat base = pt.period, inc = pt.increment;; base += pt.period, inc += pt.increment) {
      bool any = false;
      for (const auto& b : pattern) {
        Rat x = b.x + base;
        if (x > hi) break;
        any = true;
        CurveBreakpoint s{x, shift(b.left, inc), shift(b.value, inc), shift(b.right, inc), b.slope};
        if (b.x == pt.start) s.left = shift(wrap_left, inc - pt.increment);
        out.push_back(s);
      }
      if (!any) break;
    }
  }
  return {std::move(out), out.back().slope};
}

std::vector<Rat> Curve::knots_up_to(const Rat& hi) const {
  auto [bps, slope] = unrolled(hi);
  std::vector<Rat> xs;
  xs.reserve(bps.size());
  for (const auto& b : bps) xs.push_back(b.x);
  return xs;
}

namespace {

// One span of a pseudo-inverse graph, starting at ordinate y0. A plateau
// holds value x; a ramp starts at x and grows with slope islope; to_inf
// marks the jump to +inf once the function value is never reached again.
struct InvPiece {
  Rat y0;
  bool to_inf = false;
  bool plateau = true;
  Rat x;
  Rat islope;
};

ExtRat piece_start_value(const InvPiece& p) {
  return p.to_inf ? ExtRat::pos_inf() : ExtRat(p.x);
}

Rat piece_value_at(const InvPiece& p, const Rat& y) {
  return p.plateau ? p.x : p.x + (y - p.y0) * p.islope;
}

Rat piece_slope(const InvPiece& p) {
  return (p.to_inf || p.plateau) ? Rat(0) : p.islope;
}

}  // namespace

Curve Curve::pseudo_inverse(bool lower) const {
  std::vector<CurveBreakpoint> u;
  Rat end_slope;
  std::optional<Rat> trim_at;               // explicit inverse region is [0, trim_at)
  std::optional<PeriodicTail> inv_tail;
  if (periodic_) {
    const auto& pt = *periodic_;
    Rat anchor_value = eval_explicit(pt.start).finite();
    trim_at = anchor_value + pt.increment + pt.increment;
    inv_tail = PeriodicTail{anchor_value + pt.increment, pt.increment, pt.period};
    std::tie(u, end_slope) = unrolled(pt.start + pt.period + pt.period);
  } else {
    u = bps_;
    end_slope = bps_.back().slope;
  }

  std::vector<InvPiece> pieces;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& b = u[i];
    if (i == 0 || b.right > b.left) {
      InvPiece p;
      p.y0 = (i == 0) ? Rat(0) : b.left.finite();
      p.x = b.x;
      pieces.push_back(p);
    }
    if (b.right.is_pos_inf()) break;  // final plateau extends over all larger ordinates
    bool is_last = (i + 1 == u.size());
    const Rat& s = is_last ? end_slope : b.slope;
    if (s.sign() > 0) {
      InvPiece p;
      p.y0 = b.right.finite();
      p.plateau = false;
      p.x = b.x;
      p.islope = Rat(1) / s;
      pieces.push_back(p);
    } else if (is_last) {
      InvPiece p;
      p.y0 = b.right.finite();
      p.to_inf = true;
      pieces.push_back(p);
    }
  }
  // Only the first piece can be degenerate (f strictly increasing at 0).
  if (pieces.size() >= 2 && pieces[1].y0 == pieces[0].y0) pieces.erase(pieces.begin());

  std::vector<CurveBreakpoint> inv;
  if (lower) {
    CurveBreakpoint b0;
    b0.x = Rat(0);
    b0.left = b0.value = ExtRat(0);
    b0.right = piece_start_value(pieces.front());
    b0.slope = piece_slope(pieces.front());
    inv.push_back(b0);
  } else {
    CurveBreakpoint b0;
    b0.x = Rat(0);
    b0.left = b0.value = b0.right = piece_start_value(pieces.front());
    b0.slope = piece_slope(pieces.front());
    inv.push_back(b0);
  }
  for (std::size_t j = 1; j < pieces.size(); ++j) {
    const auto& prev = pieces[j - 1];
    const auto& q = pieces[j];
    CurveBreakpoint b;
    b.x = q.y0;
    ExtRat at_boundary{piece_value_at(prev, q.y0)};
    if (lower) {
      b.left = b.value = at_boundary;
      b.right = piece_start_value(q);
    } else {
      b.left = at_boundary;
      b.value = b.right = piece_start_value(q);
    }
    b.slope = piece_slope(q);
    if (b.x.is_zero()) {
      inv.back() = b;  // boundary at 0 replaces the initial breakpoint
      if (lower) inv.back().left = inv.back().value = ExtRat(0);
    } else {
      inv.push_back(b);
    }
  }

  if (trim_at) {
    while (!inv.empty() && inv.back().x >= *trim_at) inv.pop_back();
    assert(!inv.empty());
    return Curve(std::move(inv), inv_tail);
  }
  return Curve(std::move(inv), std::nullopt);
}

Curve Curve::lower_pseudo_inverse() const { return pseudo_inverse(true); }
Curve Curve::upper_pseudo_inverse() const { return pseudo_inverse(false); }

bool Curve::equal_everywhere(const Curve& a, const Curve& b) {
  Rat ha = a.periodic_ ? a.periodic_->start + a.periodic_->period : a.bps_.back().x;
  Rat hb = b.periodic_ ? b.periodic_->start + b.periodic_->period : b.bps_.back().x;
  Rat h0 = Rat::max(ha, hb);

  Rat window(1);
  if (a.periodic_ && b.periodic_)
    window = Rat::lcm(a.periodic_->period, b.periodic_->period);
  else if (a.periodic_)
    window = a.periodic_->period;
  else if (b.periodic_)
    window = b.periodic_->period;
  Rat h = h0 + window;

  std::vector<Rat> knots = a.knots_up_to(h);
  for (const Rat& x : b.knots_up_to(h)) knots.push_back(x);
  knots.push_back(h);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  for (const Rat& t : knots) {
    if (a.eval(t) != b.eval(t)) return false;
    if (a.limit(t, Side::Right) != b.limit(t, Side::Right)) return false;
    if (t.sign() > 0 && a.limit(t, Side::Left) != b.limit(t, Side::Left)) return false;
  }

  if (a.limit(h, Side::Right).is_pos_inf()) return true;  // both +inf beyond
  auto growth = [&window](const Curve& c) {
    if (c.periodic_) return c.periodic_->increment * (window / c.periodic_->period);
    return c.bps_.back().slope * window;
  };
  return growth(a) == growth(b);
}

std::string Curve::str() const {
  std::ostringstream os;
  os << "points [";
  for (std::size_t i = 0; i < bps_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << bps_[i].x.str() << ", " << bps_[i].left.str() << ", " << bps_[i].value.str()
       << ", " << bps_[i].slope.str() << ")";
  }
  os << "]";
  if (periodic_)
    os << " repeat(start=" << periodic_->start.str() << ", period=" << periodic_->period.str()
       << ", increment=" << periodic_->increment.str() << ")";
  return os.str();
}

}  // namespace pireg
