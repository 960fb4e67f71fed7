#pragma once

#include <vector>

#include "spinring/concurrence.hpp"
#include "spinring/hamiltonian.hpp"
#include "spinring/spectra.hpp"

namespace spinring {

struct ScanPoint {
  double j_over_j0 = 0.0;
  double e_ground = 0.0;
  double e_first_excited = 0.0;
  int ground_momentum = 0;
  ConcurrenceReport concurrences;
};

struct CrossingPoint {
  enum class Label { A, B, Other };
  Label label = Label::Other;
  double j_c = 0.0;
  SymmetrySector left_sector;
  SymmetrySector right_sector;
  JumpReport jump;
};

// One ScanPoint per grid value (j in units of j0). Deterministic ordering;
// points are independent and evaluated in parallel.
std::vector<ScanPoint> scan(const CouplingParams& params_template,
                            const std::vector<double>& j_grid,
                            SumConvention convention = kDefaultConvention,
                            int n_threads = 0);

// Bisection on the energy difference of the two competing groundstate
// sectors until |dE| < 1e-10 * j0. The bracket endpoints must have
// different groundstate momenta (NoCrossingError otherwise). The jump is
// evaluated at j_c -+ 1e-6 * j0.
CrossingPoint locate_crossing(const CouplingParams& params_template,
                              double j_lo, double j_hi,
                              SumConvention convention = kDefaultConvention);

// First groundstate-momentum switch at J > 0.5 j0: coarse scan over the
// bracket (default (0.55, 3.0) j0), then bisection.
CrossingPoint find_point_b(const CouplingParams& params_template,
                           double j_lo = 0.55, double j_hi = 3.0,
                           SumConvention convention = kDefaultConvention);

struct Table1Row {
  int n_sites = 0;
  double j_c = 0.0;
  std::vector<double> delta_per_alpha;
  double delta_total = 0.0;
  int left_momentum = 0;
  int right_momentum = 0;
};

// Point-B jump rows for the requested sizes (the published table covers
// N = 8, 10, 12).
std::vector<Table1Row> table1(const std::vector<int>& sizes, double j0 = 1.0,
                              SumConvention convention = kDefaultConvention);

}  // namespace spinring
