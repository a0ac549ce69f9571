#include "rihull/interval.hpp"

#include <algorithm>

#include "rihull/errors.hpp"

namespace rihull {

namespace {

// Extended position on the line: kind -1 = -inf, 0 = finite, +1 = +inf.
struct Pos {
  int kind;
  Rat v;
};
Pos lo_pos(const std::optional<Rat>& e) { return e ? Pos{0, *e} : Pos{-1, Rat(0)}; }
Pos hi_pos(const std::optional<Rat>& e) { return e ? Pos{0, *e} : Pos{+1, Rat(0)}; }
int cmp_pos(const Pos& a, const Pos& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind != 0) return 0;
  return a.v < b.v ? -1 : (a.v == b.v ? 0 : 1);
}
std::optional<Rat> to_endpoint(const Pos& p) {
  return p.kind == 0 ? std::optional<Rat>(p.v) : std::nullopt;
}

}  // namespace

Interval::Interval(std::optional<Rat> l, std::optional<Rat> h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo && hi && *lo >= *hi) throw error("empty interval (" + lo->str() + ", " + hi->str() + ")");
}

ExtScalar Interval::length() const {
  if (!lo || !hi) return ExtScalar::infinity();
  return ExtScalar(*hi - *lo);
}

bool Interval::contains_point(const Rat& x) const {
  if (lo && x <= *lo) return false;
  if (hi && x >= *hi) return false;
  return true;
}

bool Interval::contains(const Interval& other) const {
  return cmp_lower(lo, other.lo) <= 0 && cmp_upper(hi, other.hi) >= 0;
}

std::string Interval::str() const {
  return "(" + (lo ? lo->str() : "-inf") + ", " + (hi ? hi->str() : "inf") + ")";
}

int cmp_lower(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  return cmp_pos(lo_pos(a), lo_pos(b));
}

int cmp_upper(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  return cmp_pos(hi_pos(a), hi_pos(b));
}

int cmp_lower_vs_upper(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
  return cmp_pos(lo_pos(lo), hi_pos(hi));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  std::optional<Rat> lo = cmp_lower(a.lo, b.lo) >= 0 ? a.lo : b.lo;
  std::optional<Rat> hi = cmp_upper(a.hi, b.hi) <= 0 ? a.hi : b.hi;
  if (lo && hi && *lo >= *hi) return std::nullopt;
  return Interval(std::move(lo), std::move(hi));
}

bool disjoint(const Interval& a, const Interval& b) { return !intersect(a, b).has_value(); }

std::vector<Interval> normalize_union(std::vector<Interval> parts) {
  if (parts.empty()) return parts;
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return cmp_lower(a.lo, b.lo) < 0;
  });
  std::vector<Interval> out;
  out.push_back(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Interval& last = out.back();
    const Interval& cur = parts[i];
    // Fuse when cur starts no later than last ends; a shared endpoint fuses
    // too, since a single missing point is null for every purpose here.
    if (cmp_pos(lo_pos(cur.lo), hi_pos(last.hi)) <= 0) {
      if (cmp_upper(cur.hi, last.hi) > 0) last.hi = cur.hi;
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

std::vector<Interval> complement_within(const Interval& iv, const std::vector<Interval>& parts) {
  std::vector<Interval> clipped;
  for (const Interval& p : parts) {
    if (auto c = intersect(p, iv)) clipped.push_back(*c);
  }
  clipped = normalize_union(std::move(clipped));
  std::vector<Interval> out;
  Pos cursor = lo_pos(iv.lo);
  for (const Interval& p : clipped) {
    if (cmp_pos(cursor, lo_pos(p.lo)) < 0) out.push_back(Interval(to_endpoint(cursor), p.lo));
    cursor = hi_pos(p.hi);
    if (cursor.kind > 0) return out;
  }
  if (cmp_pos(cursor, hi_pos(iv.hi)) < 0) out.push_back(Interval(to_endpoint(cursor), iv.hi));
  return out;
}

}  // namespace rihull
