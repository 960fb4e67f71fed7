#pragma once

#include <string>
#include <vector>

#include "spinring/observables.hpp"
#include "spinring/state.hpp"

namespace spinring {

// How C^[alpha] sums the pairwise terms C_{i,i+alpha}:
//   PaperLiteral : i = 0..N-2 (N-1 terms, periodic wrap)
//   Ring         : i = 0..N-1 (alpha = N/2 then counts each pair twice)
//   UniquePairs  : each unordered pair once
// All three stay selectable behind the CLI --convention flag. Ring is the
// default: it is the convention under which the N=8 jump values reproduce
// the reference table digits (the other two are off by the (N-1)/N or the
// alpha = N/2 factor everywhere).
enum class SumConvention { PaperLiteral, Ring, UniquePairs };

SumConvention parse_convention(const std::string& name);
std::string convention_name(SumConvention convention);

inline constexpr SumConvention kDefaultConvention = SumConvention::Ring;

struct ConcurrenceReport {
  std::vector<double> per_alpha;  // index alpha-1, alpha = 1..N/2
  double total = 0.0;             // sum of per_alpha
  SumConvention convention = kDefaultConvention;
};

struct JumpReport {
  double j_critical = 0.0;
  std::vector<double> delta_per_alpha;
  double delta_total = 0.0;
  int left_momentum = 0;
  int right_momentum = 0;
  SumConvention convention = kDefaultConvention;
};

// C = max{0, 2(|z| - v)} for the symmetric two-qubit form.
double pairwise_concurrence(const TwoSiteRDM& rdm);

// C = max{0, -<sigma.sigma> - 1} / 2; valid for spin-zero states.
double concurrence_from_correlator(double sigma_dot);

// All C^[alpha] of one state under the given convention.
ConcurrenceReport alpha_concurrences(
    const StateVector& state, SumConvention convention = kDefaultConvention);

// Concurrence jump between the ground states at two couplings that sit just
// left/right of a crossing. Throws NoCrossingError if the groundstate
// momentum does not change between them.
JumpReport concurrence_jump(const CouplingParams& left,
                            const CouplingParams& right,
                            SumConvention convention = kDefaultConvention);

// Offset used when evaluating jumps at j_c -+ epsilon.
inline double crossing_epsilon(double j0) { return 1e-6 * std::abs(j0); }

}  // namespace spinring
