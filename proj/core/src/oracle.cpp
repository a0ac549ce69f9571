#include "rihull/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rihull/errors.hpp"

namespace rihull {

GridModel::GridModel(const WeightedSpace& sp, const std::vector<const StepFunction*>& align,
                     std::size_t n, double coverage) {
  const Interval& dom = sp.domain();
  std::vector<Rat> pts;
  auto add_breaks = [&](const StepFunction& f) {
    for (const auto& b : f.breaks()) pts.push_back(b);
  };
  if (dom.lo) pts.push_back(*dom.lo);
  if (dom.hi) pts.push_back(*dom.hi);
  add_breaks(sp.density());
  for (const auto* f : align) add_breaks(*f);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto tail_extension = [&](const ExtScalar& d) {
    double dd = d.to_double();
    return dd > 0 ? coverage / dd + 1.0 : 1.0;
  };
  double anchor_lo = pts.empty() ? 0.0 : pts.front().to_double();
  double anchor_hi = pts.empty() ? 0.0 : pts.back().to_double();
  double lo = dom.lo ? dom.lo->to_double()
                     : anchor_lo - tail_extension(sp.density().values().front());
  double hi = dom.hi ? dom.hi->to_double()
                     : anchor_hi + tail_extension(sp.density().values().back());

  std::vector<double> knots;
  knots.push_back(lo);
  for (const auto& q : pts) {
    double x = q.to_double();
    if (x > lo && x < hi) knots.push_back(x);
  }
  knots.push_back(hi);

  double total_len = hi - lo;
  bounds_.push_back(lo);
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    double a = knots[k], b = knots[k + 1];
    if (!(b > a)) continue;
    auto cells = std::max<std::size_t>(
        1, static_cast<std::size_t>(static_cast<double>(n) * (b - a) / total_len));
    for (std::size_t j = 1; j < cells; ++j)
      bounds_.push_back(a + (b - a) * static_cast<double>(j) / static_cast<double>(cells));
    bounds_.push_back(b);
  }
  density_.reserve(bounds_.size() - 1);
  for (std::size_t i = 0; i + 1 < bounds_.size(); ++i) {
    Rat mid = Rat::from_double_exact(0.5 * (bounds_[i] + bounds_[i + 1]));
    density_.push_back(sp.density().value_at(mid).to_double());
  }
}

double GridModel::total_mass() const {
  double acc = 0;
  for (std::size_t i = 0; i < size(); ++i) acc += cell_mass(i);
  return acc;
}

std::vector<double> GridModel::sample(const StepFunction& f) const {
  std::vector<double> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    Rat mid = Rat::from_double_exact(0.5 * (bounds_[i] + bounds_[i + 1]));
    out.push_back(f.value_at(mid).to_double());
  }
  return out;
}

double GridRearrangement::value_at(double t) const {
  if (!(t < total)) return 0;
  auto it = std::lower_bound(cum.begin(), cum.end(), t);
  auto i = static_cast<std::size_t>(it - cum.begin());
  return i < value.size() ? value[i] : 0;
}

namespace {

GridRearrangement sorted_cells(const GridModel& g, const std::vector<double>& values,
                               bool descending) {
  std::vector<std::size_t> idx(g.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return descending ? values[a] > values[b] : values[a] < values[b];
  });
  GridRearrangement r;
  double cum = 0;
  for (auto i : idx) {
    double m = g.cell_mass(i);
    if (!(m > 0)) continue;
    cum += m;
    r.value.push_back(values[i]);
    r.cum.push_back(cum);
  }
  r.total = cum;
  return r;
}

}  // namespace

GridRearrangement grid_rearrange_cells(const GridModel& g, const std::vector<double>& values) {
  return sorted_cells(g, values, true);
}

GridRearrangement grid_increasing_cells(const GridModel& g, const std::vector<double>& values) {
  return sorted_cells(g, values, false);
}

GridRearrangement grid_rearrange(const StepFunction& f, const WeightedSpace& sp, std::size_t n) {
  GridModel g(sp, {&f}, n);
  return grid_rearrange_cells(g, g.sample(f));
}

double grid_integral(const GridModel& g, const std::vector<double>& values) {
  double acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += values[i] * g.cell_mass(i);
  return acc;
}

double grid_pairing(const GridModel& g, const std::vector<double>& f,
                    const std::vector<double>& h) {
  double acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += f[i] * h[i] * g.cell_mass(i);
  return acc;
}

double grid_power_norm(const GridModel& g, const std::vector<double>& f,
                       const std::vector<double>& w, double p) {
  double acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double m = w[i] * g.cell_mass(i);
    if (m > 0 && f[i] > 0) acc += std::pow(f[i], p) * m;
  }
  return acc;
}

double star_pairing(const GridRearrangement& a, const GridRearrangement& b) {
  double acc = 0, prev = 0;
  double stop = std::min(a.total, b.total);
  std::size_t ia = 0, ib = 0;
  while (prev < stop && ia < a.value.size() && ib < b.value.size()) {
    double next = std::min(a.cum[ia], b.cum[ib]);
    acc += a.value[ia] * b.value[ib] * (next - prev);
    if (a.cum[ia] == next) ++ia;
    if (b.cum[ib] == next) ++ib;
    prev = next;
  }
  return acc;
}

double grid_k_functional(const GridRearrangement& r, double budget) {
  double acc = 0, prev = 0;
  for (std::size_t i = 0; i < r.value.size() && prev < budget; ++i) {
    double take = std::min(r.cum[i], budget) - prev;
    if (take > 0) {
      acc += r.value[i] * take;
      prev += take;
    }
  }
  return acc;
}

double bathtub_search(const TwoMeasures& m, const Rat& p, std::size_t n) {
  GridModel g(m.mu(), {&m.w_nu}, n);
  auto nu = g.sample(m.w_nu);
  std::vector<std::size_t> idx;
  std::vector<double> h(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g.cell_mass(i) > 0) || !(nu[i] > 0)) continue;
    h[i] = g.cell_density(i) / nu[i];
    idx.push_back(i);
  }
  ExtScalar tot = m.mu().total();
  double budget = tot.is_finite() ? std::min(tot.finite().to_double(), 1.0) : 1.0;
  double pd = p.to_double();
  if (pd == 1.0) {
    double best = 0;
    for (auto i : idx) best = std::max(best, h[i]);
    return best;
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return h[a] > h[b]; });
  double shift = 1.0 / (pd - 1.0);  // p' - 1
  double acc = 0, left = budget;
  for (auto i : idx) {
    if (!(left > 0)) break;
    double take = std::min(g.cell_mass(i), left);
    acc += std::pow(h[i], shift) * take;
    left -= take;
  }
  return std::pow(acc, (pd - 1.0) / pd);  // acc^{1/p'}
}

Rat bathtub_search_exact(const TwoMeasures& m, const Rat& p) {
  if (!(p > Rat(1))) throw error("exact bathtub needs p > 1");
  Rat shift = Rat(1) / (p - Rat(1));
  if (!shift.is_integer()) throw error("exact bathtub needs an integer conjugate shift");
  long k = shift.num().get_si();

  struct Chunk {
    Rat h;
    ExtScalar mass;
  };
  std::vector<Chunk> chunks;
  for (const auto& pc : refined_pieces(m.w_mu, m.w_nu)) {
    if (pc.f.is_zero()) continue;
    if (pc.g.is_zero())
      throw not_absolutely_continuous("mu is not absolutely continuous w.r.t. nu");
    ExtScalar mass = pc.f * pc.iv.length();
    if (mass.is_zero()) continue;
    chunks.push_back({pc.f.finite() / pc.g.finite(), mass});
  }
  std::stable_sort(chunks.begin(), chunks.end(),
                   [](const Chunk& a, const Chunk& b) { return a.h > b.h; });
  ExtScalar tot = m.mu().total();
  Rat budget = tot.is_finite() ? min(tot.finite(), Rat(1)) : Rat(1);
  Rat acc(0), left = budget;
  for (const auto& c : chunks) {
    if (left.is_zero()) break;
    Rat take = c.mass.is_finite() ? min(c.mass.finite(), left) : left;
    acc += c.h.pow_int(k) * take;
    left -= take;
  }
  return acc;
}

}  // namespace rihull
