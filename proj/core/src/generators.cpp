#include "rihull/generators.hpp"

#include <algorithm>

#include "rihull/errors.hpp"

namespace rihull {

std::uint64_t draw(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

Rat random_rat(Rng& rng, long max_num, long max_den) {
  return Rat(1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(max_num))),
             1 + static_cast<long>(draw(rng, static_cast<std::uint64_t>(max_den))));
}

Rat random_rat_nonneg(Rng& rng, long max_num, long max_den) {
  if (draw(rng, 4) == 0) return Rat(0);
  return random_rat(rng, max_num, max_den);
}

Interval random_domain(Rng& rng, DomainKind kind) {
  Rat anchor = random_rat(rng, 200, 50) - Rat(2);  // somewhere around the origin
  switch (kind) {
    case DomainKind::Bounded:
      return Interval(anchor, anchor + random_rat(rng, 400, 50));
    case DomainKind::HalfLine:
      if (draw(rng, 2) == 0) return Interval(anchor, std::nullopt);
      return Interval(std::nullopt, anchor);
    default:
      return Interval::whole();
  }
}

Interval random_domain(Rng& rng) {
  switch (draw(rng, 4)) {
    case 0: return random_domain(rng, DomainKind::HalfLine);
    case 1: return random_domain(rng, DomainKind::WholeLine);
    default: return random_domain(rng, DomainKind::Bounded);
  }
}

namespace {

// 0 = cum_0 < cum_1 < ... < cum_k, strictly increasing rational partial sums.
std::vector<Rat> partial_sums(Rng& rng, std::size_t k) {
  std::vector<Rat> cum;
  Rat acc(0);
  for (std::size_t i = 0; i < k; ++i) {
    acc += random_rat(rng, 100, 20);
    cum.push_back(acc);
  }
  return cum;
}

std::vector<Rat> interior_breaks(Rng& rng, const Interval& domain, std::size_t count) {
  std::vector<Rat> out;
  if (count == 0) return out;
  std::vector<Rat> cum = partial_sums(rng, count + 1);
  const Rat& total = cum.back();
  if (domain.is_bounded()) {
    Rat span = *domain.hi - *domain.lo;
    for (std::size_t i = 0; i < count; ++i) out.push_back(*domain.lo + span * cum[i] / total);
  } else if (domain.lo) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(*domain.lo + cum[i]);
  } else if (domain.hi) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(*domain.hi - (total - cum[i]));
  } else {
    Rat anchor = Rat(0) - random_rat(rng, 100, 20);
    out.push_back(anchor);
    for (std::size_t i = 0; i + 1 < count; ++i) out.push_back(anchor + cum[i]);
  }
  return out;
}

}  // namespace

StepFunction random_step(Rng& rng, const Interval& domain, const StepOptions& opt) {
  std::size_t pieces = 1 + draw(rng, opt.max_pieces);
  if (opt.zero_tails) {
    // leave room for a positive piece between forced-zero tails
    std::size_t needed = 1 + (domain.lo ? 0 : 1) + (domain.hi ? 0 : 1);
    pieces = std::max(pieces, needed);
  }
  std::vector<Rat> breaks = interior_breaks(rng, domain, pieces - 1);
  std::vector<ExtScalar> values;
  for (std::size_t i = 0; i < pieces; ++i)
    values.emplace_back(opt.allow_zero ? random_rat_nonneg(rng) : random_rat(rng));
  if (opt.zero_tails) {
    if (!domain.lo) values.front() = ExtScalar(Rat(0));
    if (!domain.hi) values.back() = ExtScalar(Rat(0));
  }
  if (opt.ensure_positive) {
    bool any = false;
    for (const auto& v : values) any = any || !v.is_zero();
    if (!any) {
      std::size_t lo_ok = (!domain.lo && opt.zero_tails) ? 1 : 0;
      std::size_t hi_ok = (!domain.hi && opt.zero_tails) ? 1 : 0;
      std::size_t slot = lo_ok + draw(rng, values.size() - lo_ok - hi_ok);
      values[slot] = ExtScalar(random_rat(rng));
    }
  }
  return StepFunction(domain, std::move(breaks), std::move(values));
}

WeightedSpace random_space(Rng& rng, DomainKind kind, bool finite_mass) {
  Interval domain = random_domain(rng, kind);
  StepOptions opt;
  opt.zero_tails = finite_mass;
  opt.ensure_positive = true;
  StepFunction density = random_step(rng, domain, opt);
  if (!finite_mass) {
    // Infinite mass needs a positive value on an unbounded side.
    std::vector<ExtScalar> dv = density.values();
    if (!domain.lo && dv.front().is_zero()) dv.front() = ExtScalar(random_rat(rng));
    if (!domain.hi && dv.back().is_zero()) dv.back() = ExtScalar(random_rat(rng));
    density = StepFunction(domain, density.breaks(), std::move(dv));
  }
  return WeightedSpace(std::move(density));
}

WeightedSpace random_space(Rng& rng) {
  Interval domain = random_domain(rng);
  StepOptions opt;
  opt.zero_tails = draw(rng, 2) == 0;
  opt.ensure_positive = true;
  return WeightedSpace(random_step(rng, domain, opt));
}

StepFunction random_profile(Rng& rng, const Rat& mass, std::size_t max_pieces,
                            bool allow_zero_tail) {
  std::size_t pieces = 1 + draw(rng, max_pieces);
  std::vector<Rat> levels;
  for (std::size_t i = 0; i < pieces; ++i) levels.push_back(random_rat(rng));
  std::sort(levels.begin(), levels.end(), [](const Rat& a, const Rat& b) { return b < a; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (allow_zero_tail && draw(rng, 3) == 0) levels.push_back(Rat(0));
  Interval dom(Rat(0), mass);
  std::vector<Rat> breaks = interior_breaks(rng, dom, levels.size() - 1);
  std::vector<ExtScalar> values(levels.begin(), levels.end());
  return StepFunction(dom, std::move(breaks), std::move(values));
}

SpaceAndFunction random_cond_i_instance(Rng& rng) {
  if (draw(rng, 2) == 0) {
    WeightedSpace sp = random_space(rng, static_cast<DomainKind>(draw(rng, 3)), true);
    StepOptions opt;
    return {sp, random_step(rng, sp.domain(), opt)};
  }
  // One infinite direction carrying the top value, so everything below it is
  // confined to a bounded region (two unbounded runs of one value would not
  // be realizable by finitely many affine pieces).
  WeightedSpace sp = random_space(rng, DomainKind::HalfLine, false);
  StepFunction f0 = random_step(rng, sp.domain(), StepOptions{});
  ExtScalar top = f0.max_value() + ExtScalar(random_rat(rng, 50, 10));
  std::vector<ExtScalar> values = f0.values();
  if (!sp.domain().lo) values.front() = top;
  if (!sp.domain().hi) values.back() = top;
  return {sp, StepFunction(sp.domain(), f0.breaks(), std::move(values))};
}

SpaceAndFunction random_neither_instance(Rng& rng) {
  DomainKind kind = draw(rng, 2) == 0 ? DomainKind::HalfLine : DomainKind::WholeLine;
  Interval domain = random_domain(rng, kind);
  // Strictly positive density: the zero tail of f then has infinite mass and
  // every positive piece of f keeps positive mass.
  StepOptions dens_opt;
  dens_opt.allow_zero = false;
  WeightedSpace sp(random_step(rng, domain, dens_opt));
  StepOptions f_opt;
  f_opt.zero_tails = true;
  f_opt.ensure_positive = true;
  f_opt.max_pieces = 6;
  return {sp, random_step(rng, sp.domain(), f_opt)};
}

TwoMeasures random_abs_continuous_pair(Rng& rng, bool finite_mu) {
  Interval domain = random_domain(rng);
  StepOptions nu_opt;
  nu_opt.allow_zero = true;
  nu_opt.ensure_positive = true;
  StepFunction w_nu = random_step(rng, domain, nu_opt);
  StepOptions factor_opt;
  factor_opt.zero_tails = finite_mu && !domain.is_bounded();
  factor_opt.ensure_positive = true;
  StepFunction factor = random_step(rng, domain, factor_opt);
  StepFunction w_mu = StepFunction::multiply(w_nu, factor);
  return TwoMeasures(domain, std::move(w_mu), std::move(w_nu));
}

std::vector<SimpleLayer> random_nested_layers(Rng& rng, const WeightedSpace& sp,
                                              std::size_t max_layers) {
  std::size_t k = 1 + draw(rng, max_layers);
  Interval window = sp.domain();
  if (!window.is_bounded()) {
    // carve a bounded window to nest inside
    Rat a = window.lo ? *window.lo : Rat(0) - random_rat(rng, 200, 20);
    Rat b = window.hi ? *window.hi : a + random_rat(rng, 400, 20) + Rat(1);
    if (!window.lo) a = min(a, b - Rat(1));
    window = Interval(a, b);
  }
  std::vector<Rat> pts = interior_breaks(rng, window, 2 * k);
  std::vector<SimpleLayer> layers;
  for (std::size_t i = 1; i <= k; ++i)
    layers.push_back({random_rat(rng, 100, 20), Interval(pts[k - i], pts[k + i - 1])});
  return layers;
}

}  // namespace rihull
