#pragma once

#include <cstddef>
#include <vector>

#include "rihull/embedding.hpp"
#include "rihull/weighted_space.hpp"

namespace rihull {

// Brute-force floating-point engine for differential testing. It shares no
// code path with the exact engine: plain doubles, sort-based rearrangement,
// greedy set search. Cell boundaries align with every breakpoint of the
// density and of the aligned functions, so each cell carries constant data
// and the only error sources are float rounding and domain truncation.
class GridModel {
 public:
  // Unbounded domain ends are truncated past the last breakpoint, far enough
  // that the kept tail still carries `coverage` of mu-mass (the tail of the
  // density is constant there; zero-density tails get a unit pad).
  GridModel(const WeightedSpace& sp, const std::vector<const StepFunction*>& align,
            std::size_t n, double coverage = 2.0);

  std::size_t size() const { return density_.size(); }
  double cell_lo(std::size_t i) const { return bounds_[i]; }
  double cell_hi(std::size_t i) const { return bounds_[i + 1]; }
  double cell_length(std::size_t i) const { return bounds_[i + 1] - bounds_[i]; }
  double cell_density(std::size_t i) const { return density_[i]; }
  double cell_mass(std::size_t i) const { return cell_length(i) * density_[i]; }
  double total_mass() const;

  // Midpoint samples; f must be finite on the truncated window.
  std::vector<double> sample(const StepFunction& f) const;

 private:
  std::vector<double> bounds_;   // size() + 1 ascending cell boundaries
  std::vector<double> density_;  // one density per cell
};

// Sampled monotone profile over the mass axis: value[i] on (cum[i-1], cum[i]).
struct GridRearrangement {
  std::vector<double> value;
  std::vector<double> cum;
  double total = 0;
  double value_at(double t) const;  // 0 past the covered mass
};

GridRearrangement grid_rearrange_cells(const GridModel& g, const std::vector<double>& values);
GridRearrangement grid_increasing_cells(const GridModel& g, const std::vector<double>& values);
// Convenience: build an aligned grid and rearrange f in one call.
GridRearrangement grid_rearrange(const StepFunction& f, const WeightedSpace& sp, std::size_t n);

// integral of f dmu over the grid window
double grid_integral(const GridModel& g, const std::vector<double>& values);
// integral of f g dmu
double grid_pairing(const GridModel& g, const std::vector<double>& f,
                    const std::vector<double>& h);
// integral of f^p w dmu
double grid_power_norm(const GridModel& g, const std::vector<double>& f,
                       const std::vector<double>& w, double p);
// integral of a(t) b(t) dt over the shorter covered mass
double star_pairing(const GridRearrangement& a, const GridRearrangement& b);
// integral of r over (0, budget)
double grid_k_functional(const GridRearrangement& r, double budget);

// Greedy bathtub search for the optimal embedding constant: fill the budget
// min(mu(R), 1) with cells of largest dmu/dnu first. Requires mu << nu.
double bathtub_search(const TwoMeasures& m, const Rat& p, std::size_t n);
// Piece-level greedy in exact arithmetic; needs p'-1 = 1/(p-1) to be a
// positive integer. Returns A^{p'}.
Rat bathtub_search_exact(const TwoMeasures& m, const Rat& p);

}  // namespace rihull
