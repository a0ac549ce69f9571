#include "rihull/step_function.hpp"

#include <algorithm>

#include "rihull/errors.hpp"

namespace rihull {

StepFunction::StepFunction(Interval domain, std::vector<Rat> breaks,
                           std::vector<ExtScalar> values)
    : domain_(std::move(domain)), breaks_(std::move(breaks)), values_(std::move(values)) {
  if (values_.size() != breaks_.size() + 1)
    throw error("step function needs exactly one more value than breakpoints");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (!domain_.contains_point(breaks_[i]))
      throw error("breakpoint " + breaks_[i].str() + " outside domain " + domain_.str());
    if (i > 0 && breaks_[i - 1] >= breaks_[i])
      throw error("breakpoints must be strictly increasing");
  }
  for (const ExtScalar& v : values_) {
    if (v.sgn() < 0) throw error("negative step value " + v.str());
  }
  canonicalize();
}

StepFunction StepFunction::constant(Interval domain, ExtScalar value) {
  return StepFunction(std::move(domain), {}, {std::move(value)});
}

void StepFunction::canonicalize() {
  std::size_t w = 0;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == values_[w]) continue;  // drop breaks_[i-1]
    breaks_[w] = breaks_[i - 1];
    values_[++w] = values_[i];
  }
  breaks_.resize(w);
  values_.resize(w + 1);
}

Interval StepFunction::piece(std::size_t i) const {
  std::optional<Rat> lo = i == 0 ? domain_.lo : std::optional<Rat>(breaks_[i - 1]);
  std::optional<Rat> hi = i == breaks_.size() ? domain_.hi : std::optional<Rat>(breaks_[i]);
  return Interval(std::move(lo), std::move(hi));
}

const ExtScalar& StepFunction::value_at(const Rat& x) const {
  if (!domain_.contains_point(x)) throw error("evaluation outside domain at " + x.str());
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin())];
}

bool StepFunction::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const ExtScalar& v) { return v.is_finite(); });
}

bool StepFunction::is_nonincreasing() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1]) return false;
  return true;
}

bool StepFunction::is_nondecreasing() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[i - 1]) return false;
  return true;
}

ExtScalar StepFunction::max_value() const {
  ExtScalar m = values_[0];
  for (const ExtScalar& v : values_) m = max(m, v);
  return m;
}

StepFunction StepFunction::map_values(
    const std::function<ExtScalar(const ExtScalar&)>& fn) const {
  std::vector<ExtScalar> vals;
  vals.reserve(values_.size());
  for (const ExtScalar& v : values_) vals.push_back(fn(v));
  return StepFunction(domain_, breaks_, std::move(vals));
}

StepFunction StepFunction::scale_values(const Rat& c) const {
  if (c.sgn() < 0) throw error("negative scale factor");
  return map_values([&](const ExtScalar& v) { return v * ExtScalar(c); });
}

StepFunction StepFunction::pow_int(long k) const {
  return map_values([&](const ExtScalar& v) { return v.pow_int(k); });
}

StepFunction StepFunction::restrict_to(const Interval& sub) const {
  auto clipped = intersect(domain_, sub);
  if (!clipped || !(*clipped == sub)) throw error("restriction target escapes domain");
  std::vector<Rat> breaks;
  std::vector<ExtScalar> vals;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!intersect(piece(i), sub)) continue;
    if (!vals.empty()) breaks.push_back(breaks_[i - 1]);
    vals.push_back(values_[i]);
  }
  return StepFunction(sub, std::move(breaks), std::move(vals));
}

StepFunction StepFunction::mask(const std::vector<Interval>& set) const {
  std::vector<Interval> inside;
  for (const Interval& s : set) {
    if (auto c = intersect(s, domain_)) inside.push_back(*c);
  }
  inside = normalize_union(std::move(inside));
  StepFunction indicator = StepFunction::constant(domain_, ExtScalar(Rat(0)));
  {
    // Build the indicator of the union as a step function.
    std::vector<Rat> breaks;
    std::vector<ExtScalar> vals;
    vals.push_back(ExtScalar(Rat(0)));
    for (const Interval& s : inside) {
      if (s.lo && (domain_.lo ? *s.lo > *domain_.lo : true)) {
        breaks.push_back(*s.lo);
        vals.push_back(ExtScalar(Rat(1)));
      } else {
        vals.back() = ExtScalar(Rat(1));
      }
      if (s.hi && (domain_.hi ? *s.hi < *domain_.hi : true)) {
        breaks.push_back(*s.hi);
        vals.push_back(ExtScalar(Rat(0)));
      }
    }
    indicator = StepFunction(domain_, std::move(breaks), std::move(vals));
  }
  return multiply(*this, indicator);
}

StepFunction StepFunction::reflect(const Rat& m) const {
  if (!(domain_ == Interval::bounded(Rat(0), m)))
    throw error("reflection requires domain (0, " + m.str() + ")");
  std::vector<Rat> breaks;
  for (auto it = breaks_.rbegin(); it != breaks_.rend(); ++it) breaks.push_back(m - *it);
  std::vector<ExtScalar> vals(values_.rbegin(), values_.rend());
  return StepFunction(domain_, std::move(breaks), std::move(vals));
}

std::vector<RefinedPiece> refined_pieces(const StepFunction& f, const StepFunction& g) {
  if (!(f.domain() == g.domain()))
    throw domain_mismatch("refinement of step functions on different domains: " +
                          f.domain().str() + " vs " + g.domain().str());
  std::vector<Rat> cuts;
  std::merge(f.breaks().begin(), f.breaks().end(), g.breaks().begin(), g.breaks().end(),
             std::back_inserter(cuts));
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<RefinedPiece> out;
  out.reserve(cuts.size() + 1);
  std::size_t fi = 0;
  std::size_t gi = 0;
  for (std::size_t k = 0; k <= cuts.size(); ++k) {
    std::optional<Rat> lo = k == 0 ? f.domain().lo : std::optional<Rat>(cuts[k - 1]);
    std::optional<Rat> hi = k == cuts.size() ? f.domain().hi : std::optional<Rat>(cuts[k]);
    while (fi < f.breaks().size() && cmp_lower(std::optional<Rat>(f.breaks()[fi]), lo) <= 0) ++fi;
    while (gi < g.breaks().size() && cmp_lower(std::optional<Rat>(g.breaks()[gi]), lo) <= 0) ++gi;
    out.push_back(RefinedPiece{Interval(lo, hi), f.value(fi), g.value(gi)});
  }
  return out;
}

std::pair<StepFunction, StepFunction> StepFunction::refine(const StepFunction& f,
                                                           const StepFunction& g) {
  const auto pieces = refined_pieces(f, g);
  std::vector<Rat> breaks;
  std::vector<ExtScalar> fv, gv;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) breaks.push_back(*pieces[i].iv.lo);
    fv.push_back(pieces[i].f);
    gv.push_back(pieces[i].g);
  }
  // Note: StepFunction construction re-canonicalizes, so the pair need not
  // share breakpoints structurally; callers wanting aligned pieces should use
  // refined_pieces directly.
  return {StepFunction(f.domain(), breaks, std::move(fv)),
          StepFunction(g.domain(), std::move(breaks), std::move(gv))};
}

StepFunction StepFunction::combine(
    const StepFunction& f, const StepFunction& g,
    const std::function<ExtScalar(const ExtScalar&, const ExtScalar&)>& op) {
  const auto pieces = refined_pieces(f, g);
  std::vector<Rat> breaks;
  std::vector<ExtScalar> vals;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) breaks.push_back(*pieces[i].iv.lo);
    vals.push_back(op(pieces[i].f, pieces[i].g));
  }
  return StepFunction(f.domain(), std::move(breaks), std::move(vals));
}

StepFunction StepFunction::multiply(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const ExtScalar& a, const ExtScalar& b) { return a * b; });
}

StepFunction StepFunction::add(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const ExtScalar& a, const ExtScalar& b) { return a + b; });
}

StepFunction StepFunction::pointwise_min(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const ExtScalar& a, const ExtScalar& b) { return min(a, b); });
}

StepFunction StepFunction::pointwise_max(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const ExtScalar& a, const ExtScalar& b) { return max(a, b); });
}

bool StepFunction::le_ae(const StepFunction& f, const StepFunction& g) {
  for (const RefinedPiece& p : refined_pieces(f, g)) {
    if (p.f > p.g) return false;
  }
  return true;
}

}  // namespace rihull
