#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "latword/errors.hpp"

namespace latword {

namespace detail {
inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
}  // namespace detail

/// Closed enclosure [lo, hi] with outward rounding, enough interval
/// arithmetic for probability brackets (all quantities nonnegative).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval exact(double x) { return {x, x}; }
  static Interval of(double lo, double hi) { return {lo, hi}; }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  Interval operator+(const Interval& o) const {
    return {detail::down(lo + o.lo), detail::up(hi + o.hi)};
  }
  /// Product of nonnegative intervals.
  Interval operator*(const Interval& o) const {
    return {detail::down(lo * o.lo), detail::up(hi * o.hi)};
  }
  /// Quotient of nonnegative intervals; divisor must be bounded away from 0.
  Interval operator/(const Interval& o) const {
    if (o.lo <= 0.0) fail(errc::vanishing_survival, "interval division by bracket touching zero");
    return {detail::down(lo / o.hi), detail::up(hi / o.lo)};
  }

  Interval intersect(const Interval& o) const {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
  }
  Interval clamp01() const { return {std::max(0.0, lo), std::min(1.0, hi)}; }
};

inline bool all_overlap(const Interval& a, const Interval& b) { return a.overlaps(b); }

}  // namespace latword
