#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "spinring/errors.hpp"
#include "spinring/mg_analytics.hpp"
#include "spinring/sweep.hpp"

using namespace spinring;

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return grid;
}

}  // namespace

TEST_CASE("scan walks the six-site phase diagram") {
  const CouplingParams params = CouplingParams::uniform(6, 1.0, 0.0);
  const auto grid = linspace(0.0, 2.0, 41);
  const auto points = scan(params, grid);
  REQUIRE(points.size() == 41);

  for (std::size_t i = 0; i < points.size(); ++i) {
    CHECK(points[i].j_over_j0 == grid[i]);
    CHECK(points[i].e_first_excited >= points[i].e_ground - 1e-12);
    const auto sol =
        n6_exact(CouplingParams::uniform(6, 1.0, grid[i]));
    CHECK(std::abs(points[i].e_ground - sol.e_ground) < 1e-9);
    REQUIRE(points[i].concurrences.per_alpha.size() == 3);
    // ring sum = 6 * per-pair value by translation invariance. The grid
    // point at exactly 0.5 sits on the degeneracy, where the solver's
    // tie-break may return either crossing branch; accept both there.
    const double c1 = points[i].concurrences.per_alpha[0];
    if (std::abs(grid[i] - 0.5) > 1e-12) {
      CHECK(std::abs(c1 - 6.0 * sol.c1_per_pair) < 1e-8);
    } else {
      const double below =
          6.0 * n6_exact(CouplingParams::uniform(6, 1.0, 0.5 - 1e-9))
                    .c1_per_pair;
      const double above =
          6.0 * n6_exact(CouplingParams::uniform(6, 1.0, 0.5 + 1e-9))
                    .c1_per_pair;
      CHECK((std::abs(c1 - below) < 1e-6 || std::abs(c1 - above) < 1e-6));
    }
  }

  // momentum pi below the dimer point, 0 above, for the twice-odd ring
  for (const auto& p : points) {
    if (p.j_over_j0 < 0.5 - 1e-9) CHECK(p.ground_momentum == 3);
    if (p.j_over_j0 > 0.5 + 1e-9) CHECK(p.ground_momentum == 0);
  }
}

TEST_CASE("scan is deterministic across worker counts") {
  const CouplingParams params = CouplingParams::uniform(8, 1.0, 0.0);
  const auto grid = linspace(0.0, 1.0, 11);
  const auto a = scan(params, grid, SumConvention::Ring, 1);
  const auto b = scan(params, grid, SumConvention::Ring, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].e_ground == b[i].e_ground);
    CHECK(a[i].ground_momentum == b[i].ground_momentum);
    for (std::size_t al = 0; al < a[i].concurrences.per_alpha.size(); ++al)
      CHECK(a[i].concurrences.per_alpha[al] ==
            b[i].concurrences.per_alpha[al]);
  }
}

TEST_CASE("scan refuses split couplings") {
  CHECK_THROWS_AS(scan({1.0, 0.2, 0.6, 6}, {0.1, 0.2}), UnsupportedError);
}

TEST_CASE("the first crossing sits at half j0 for every size") {
  for (int n : {6, 8, 10, 12}) {
    const CouplingParams params = CouplingParams::uniform(n, 1.0, 0.0);
    const CrossingPoint crossing = locate_crossing(params, 0.3, 0.52);
    CHECK(std::abs(crossing.j_c - 0.5) < 1e-9);
    CHECK(crossing.label == CrossingPoint::Label::A);
    CHECK(crossing.left_sector.momentum_index !=
          crossing.right_sector.momentum_index);
    const std::set<int> momenta{crossing.left_sector.momentum_index,
                                crossing.right_sector.momentum_index};
    CHECK(momenta == std::set<int>{0, n / 2});
  }
}

TEST_CASE("crossing location scales with j0") {
  const CouplingParams params = CouplingParams::uniform(6, 2.0, 0.0);
  const CrossingPoint crossing = locate_crossing(params, 0.6, 1.04);
  CHECK(std::abs(crossing.j_c - 1.0) < 2e-9);
  CHECK(crossing.label == CrossingPoint::Label::A);
}

TEST_CASE("a bracket without a momentum switch is rejected") {
  const CouplingParams params = CouplingParams::uniform(6, 1.0, 0.0);
  CHECK_THROWS_AS(locate_crossing(params, 0.1, 0.3), NoCrossingError);
  CHECK_THROWS_AS(locate_crossing(params, 0.6, 0.9), NoCrossingError);
  CHECK_THROWS_AS(locate_crossing(params, 0.9, 0.6), Error);  // bad order
}

TEST_CASE("the six-site jump at the dimer point") {
  const CouplingParams params = CouplingParams::uniform(6, 1.0, 0.0);
  const CrossingPoint crossing = locate_crossing(params, 0.3, 0.7);
  // left branch: C1 -> 6 * 0.4; right branch: the dimer combination, C1 = 0
  REQUIRE(crossing.jump.delta_per_alpha.size() == 3);
  CHECK(std::abs(crossing.jump.delta_per_alpha[0] - 2.4) < 1e-4);
  CHECK(std::abs(crossing.jump.delta_total - 2.4) < 1e-4);
  CHECK(crossing.jump.j_critical == crossing.j_c);
}

TEST_CASE("the second crossing of the eight-site ring") {
  const CouplingParams params = CouplingParams::uniform(8, 1.0, 0.0);
  const CrossingPoint point_b = find_point_b(params);
  CHECK(point_b.label == CrossingPoint::Label::B);
  // independently bisected reference value
  CHECK(std::abs(point_b.j_c - 0.748176911) < 1e-8);
  const std::set<int> momenta{point_b.left_sector.momentum_index,
                              point_b.right_sector.momentum_index};
  CHECK(momenta == std::set<int>{0, 4});

  // pinned jump values under the ring convention
  CHECK(std::abs(point_b.jump.delta_per_alpha[0] - 0.769364736448) < 1e-6);
  CHECK(std::abs(point_b.jump.delta_per_alpha[1] - 1.78833422617) < 1e-6);
  CHECK(std::abs(point_b.jump.delta_total - 1.01896948972) < 1e-6);
}

TEST_CASE("six sites have no second crossing") {
  const CouplingParams params = CouplingParams::uniform(6, 1.0, 0.0);
  CHECK_THROWS_AS(find_point_b(params), NoCrossingError);
}

TEST_CASE("sector energies cross linearly at the six-site dimer point") {
  RingSolver rings(6);
  const double delta = 1e-5;
  const auto slope = [&](int k) {
    const double below = rings.sector_ground_energy(
        CouplingParams::uniform(6, 1.0, 0.5 - delta), {0, k});
    const double above = rings.sector_ground_energy(
        CouplingParams::uniform(6, 1.0, 0.5 + delta), {0, k});
    return (above - below) / (2 * delta);
  };
  // momentum-0 branch follows e1 = -3(j0+j)/2, momentum-pi follows e2;
  // their distinct slopes are what makes the crossing transversal
  const double de1 = (n6_exact(CouplingParams::uniform(6, 1.0, 0.5 + delta)).e1 -
                      n6_exact(CouplingParams::uniform(6, 1.0, 0.5 - delta)).e1) /
                     (2 * delta);
  const double de2 = (n6_exact(CouplingParams::uniform(6, 1.0, 0.5 + delta)).e2 -
                      n6_exact(CouplingParams::uniform(6, 1.0, 0.5 - delta)).e2) /
                     (2 * delta);
  CHECK(std::abs(de1 - (-1.5)) < 1e-10);
  CHECK(std::abs(slope(0) - de1) < 1e-6);
  CHECK(std::abs(slope(3) - de2) < 1e-6);
  CHECK(de2 > de1 + 1.0);
}

TEST_CASE("table rows carry the point-B data") {
  const auto rows = table1({8});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n_sites == 8);
  CHECK(std::abs(rows[0].j_c - 0.748176911) < 1e-8);
  REQUIRE(rows[0].delta_per_alpha.size() == 4);
  CHECK(std::abs(rows[0].delta_per_alpha[0] - 0.769364736448) < 1e-6);
  CHECK(std::abs(rows[0].delta_total - 1.01896948972) < 1e-6);
  const std::set<int> momenta{rows[0].left_momentum, rows[0].right_momentum};
  CHECK(momenta == std::set<int>{0, 4});
}
