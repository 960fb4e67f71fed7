#include "spinring/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "spinring/errors.hpp"
#include "spinring/util.hpp"

namespace spinring {

namespace {

// Lowest levels with an adaptive count: keep doubling until a first excited
// level (different degeneracy group) shows up or the request saturates.
SpectrumResult levels_with_gap(RingSolver& solver, const CouplingParams& params,
                               int n_threads) {
  for (int m = 4; m <= 64; m *= 2) {
    SpectrumResult spectrum = solver.lowest_levels(params, m, n_threads);
    if (spectrum.first_excited() != nullptr || spectrum.levels.size() <
                                                   static_cast<std::size_t>(m))
      return spectrum;
  }
  return solver.lowest_levels(params, 64, n_threads);
}

SymmetrySector ground_sector(RingSolver& solver, const CouplingParams& params) {
  SpectrumResult spectrum = solver.lowest_levels(params, 1);
  return spectrum.levels.front().sector;
}

}  // namespace

std::vector<ScanPoint> scan(const CouplingParams& params_template,
                            const std::vector<double>& j_grid,
                            SumConvention convention, int n_threads) {
  if (!params_template.uniform_nnn())
    throw UnsupportedError("scan varies the uniform j1 == j2 coupling");
  RingSolver solver(params_template.n_sites);
  solver.prebuild();
  std::vector<ScanPoint> points(j_grid.size());
  parallel_for(
      j_grid.size(),
      [&](std::size_t idx) {
        const CouplingParams params =
            params_template.with_j(j_grid[idx] * params_template.j0);
        SpectrumResult spectrum = levels_with_gap(solver, params, 1);
        const EigenLevel& ground = spectrum.levels.front();
        ScanPoint& point = points[idx];
        point.j_over_j0 = j_grid[idx];
        point.e_ground = ground.energy;
        const EigenLevel* excited = spectrum.first_excited();
        point.e_first_excited = excited ? excited->energy : ground.energy;
        point.ground_momentum = ground.sector.momentum_index;
        point.concurrences = alpha_concurrences(ground.vector, convention);
      },
      n_threads);
  return points;
}

CrossingPoint locate_crossing(const CouplingParams& params_template,
                              double j_lo, double j_hi,
                              SumConvention convention) {
  if (!params_template.uniform_nnn())
    throw UnsupportedError("crossing search varies the uniform j1 coupling");
  if (!(j_lo < j_hi)) throw ShapeError("bracket must satisfy j_lo < j_hi");
  const double j0 = params_template.j0;
  if (j0 <= 0.0) throw ShapeError("crossing search assumes j0 > 0");

  RingSolver solver(params_template.n_sites);
  solver.prebuild();
  const SymmetrySector left = ground_sector(solver, params_template.with_j(j_lo));
  const SymmetrySector right =
      ground_sector(solver, params_template.with_j(j_hi));
  if (left.momentum_index == right.momentum_index)
    throw NoCrossingError("bracket endpoints share one groundstate momentum");

  // E(left sector) - E(right sector) changes sign exactly once across a
  // level crossing; bisect it to the energy tolerance.
  const auto gap = [&](double j) {
    const CouplingParams params = params_template.with_j(j);
    return solver.sector_ground_energy(params, left) -
           solver.sector_ground_energy(params, right);
  };
  const double tol = 1e-10 * j0;
  double lo = j_lo, hi = j_hi;
  double gap_lo = gap(lo);
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 60; ++iter) {
    mid = 0.5 * (lo + hi);
    const double gap_mid = gap(mid);
    if (std::abs(gap_mid) < tol) break;
    if ((gap_mid < 0.0) == (gap_lo < 0.0)) {
      lo = mid;
      gap_lo = gap_mid;
    } else {
      hi = mid;
    }
  }

  CrossingPoint crossing;
  crossing.j_c = mid;
  crossing.left_sector = left;
  crossing.right_sector = right;
  const double eps = crossing_epsilon(j0);
  crossing.jump = concurrence_jump(params_template.with_j(mid - eps),
                                   params_template.with_j(mid + eps),
                                   convention);
  if (std::abs(mid - 0.5 * j0) <= 1e-6 * j0)
    crossing.label = CrossingPoint::Label::A;
  else if (mid > 0.5 * j0)
    crossing.label = CrossingPoint::Label::B;
  else
    crossing.label = CrossingPoint::Label::Other;
  return crossing;
}

CrossingPoint find_point_b(const CouplingParams& params_template, double j_lo,
                           double j_hi, SumConvention convention) {
  if (!params_template.uniform_nnn())
    throw UnsupportedError("crossing search varies the uniform j1 coupling");
  if (!(j_lo < j_hi)) throw ShapeError("bracket must satisfy j_lo < j_hi");
  const double j0 = params_template.j0;

  RingSolver solver(params_template.n_sites);
  solver.prebuild();
  const int n_steps = std::max(
      2, static_cast<int>(std::ceil((j_hi - j_lo) / (0.05 * j0))));
  std::vector<double> grid(n_steps + 1);
  for (int i = 0; i <= n_steps; ++i)
    grid[i] = j_lo + (j_hi - j_lo) * i / n_steps;
  std::vector<int> momenta(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    momenta[i] =
        ground_sector(solver, params_template.with_j(grid[i] * j0))
            .momentum_index;
  });
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (momenta[i] != momenta[i - 1])
      return locate_crossing(params_template, grid[i - 1] * j0, grid[i] * j0,
                             convention);
  }
  throw NoCrossingError("no groundstate momentum switch inside the bracket");
}

std::vector<Table1Row> table1(const std::vector<int>& sizes, double j0,
                              SumConvention convention) {
  std::vector<Table1Row> rows;
  rows.reserve(sizes.size());
  for (int n : sizes) {
    CouplingParams params;
    params.n_sites = n;
    params.j0 = j0;
    const CrossingPoint crossing = find_point_b(params, 0.55, 3.0, convention);
    Table1Row row;
    row.n_sites = n;
    row.j_c = crossing.j_c;
    row.delta_per_alpha = crossing.jump.delta_per_alpha;
    row.delta_total = crossing.jump.delta_total;
    row.left_momentum = crossing.left_sector.momentum_index;
    row.right_momentum = crossing.right_sector.momentum_index;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace spinring
