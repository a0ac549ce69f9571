#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rihull/ext_scalar.hpp"
#include "rihull/rational.hpp"

namespace rihull {

// Nonempty open interval (lo, hi); a missing endpoint means unbounded on that
// side. Endpoint values are never part of the set (a.e. semantics throughout).
struct Interval {
  std::optional<Rat> lo;  // nullopt = -inf
  std::optional<Rat> hi;  // nullopt = +inf

  Interval(std::optional<Rat> l, std::optional<Rat> h);

  static Interval bounded(Rat a, Rat b) { return Interval(std::move(a), std::move(b)); }
  static Interval above(Rat a) { return Interval(std::move(a), std::nullopt); }
  static Interval below(Rat b) { return Interval(std::nullopt, std::move(b)); }
  static Interval whole() { return Interval(std::nullopt, std::nullopt); }
  static Interval positive_halfline() { return above(Rat(0)); }

  bool bounded_below() const { return lo.has_value(); }
  bool bounded_above() const { return hi.has_value(); }
  bool is_bounded() const { return lo && hi; }
  ExtScalar length() const;

  bool contains_point(const Rat& x) const;
  bool contains(const Interval& other) const;
  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Compare extended endpoints; side disambiguates which infinity nullopt means.
int cmp_lower(const std::optional<Rat>& a, const std::optional<Rat>& b);  // nullopt = -inf
int cmp_upper(const std::optional<Rat>& a, const std::optional<Rat>& b);  // nullopt = +inf
// lower endpoint vs upper endpoint (-inf vs +inf conventions).
int cmp_lower_vs_upper(const std::optional<Rat>& lo, const std::optional<Rat>& hi);

std::optional<Interval> intersect(const Interval& a, const Interval& b);
bool disjoint(const Interval& a, const Interval& b);  // overlap of positive length

// Sorts by position and fuses adjacent/overlapping intervals.
std::vector<Interval> normalize_union(std::vector<Interval> parts);
// Connected components of iv minus the (normalized) parts.
std::vector<Interval> complement_within(const Interval& iv, const std::vector<Interval>& parts);

}  // namespace rihull
