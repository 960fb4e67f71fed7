#include "spinring/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include "spinring/errors.hpp"
#include "spinring/spectra.hpp"

namespace spinring {

SumConvention parse_convention(const std::string& name) {
  if (name == "paper-literal") return SumConvention::PaperLiteral;
  if (name == "ring") return SumConvention::Ring;
  if (name == "unique-pairs") return SumConvention::UniquePairs;
  throw Error("unknown sum convention: " + name);
}

std::string convention_name(SumConvention convention) {
  switch (convention) {
    case SumConvention::PaperLiteral:
      return "paper-literal";
    case SumConvention::Ring:
      return "ring";
    case SumConvention::UniquePairs:
      return "unique-pairs";
  }
  throw Error("unknown sum convention");
}

double pairwise_concurrence(const TwoSiteRDM& rdm) {
  return std::max(0.0, 2.0 * (std::abs(rdm.z) - rdm.v));
}

double concurrence_from_correlator(double sigma_dot) {
  return 0.5 * std::max(0.0, -sigma_dot - 1.0);
}

ConcurrenceReport alpha_concurrences(const StateVector& state,
                                     SumConvention convention) {
  const StateVector s = state.kind() == StateVector::Kind::Momentum
                            ? state.to_sz_sector()
                            : state;
  const int n = s.n_sites();
  ConcurrenceReport report;
  report.convention = convention;
  report.per_alpha.resize(n / 2);
  for (int alpha = 1; alpha <= n / 2; ++alpha) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (convention == SumConvention::PaperLiteral && i == n - 1) continue;
      if (convention == SumConvention::UniquePairs && alpha == n / 2 &&
          i >= n / 2)
        continue;
      sum += pairwise_concurrence(
          reduced_density_matrix(s, i, (i + alpha) % n));
    }
    report.per_alpha[alpha - 1] = sum;
  }
  for (double c : report.per_alpha) report.total += c;
  return report;
}

JumpReport concurrence_jump(const CouplingParams& left,
                            const CouplingParams& right,
                            SumConvention convention) {
  if (left.n_sites != right.n_sites || left.j0 != right.j0 ||
      !left.uniform_nnn() || !right.uniform_nnn())
    throw ShapeError("jump endpoints must differ only in the NNN coupling");

  RingSolver solver(left.n_sites);
  const SpectrumResult sl = solver.lowest_levels(left, 1);
  const SpectrumResult sr = solver.lowest_levels(right, 1);
  const EigenLevel& gl = sl.ground();
  const EigenLevel& gr = sr.ground();
  if (gl.sector.momentum_index == gr.sector.momentum_index)
    throw NoCrossingError(
        "groundstate momentum does not change across the bracket");

  JumpReport report;
  report.convention = convention;
  report.j_critical = 0.5 * (left.j1 + right.j1);
  report.left_momentum = gl.sector.momentum_index;
  report.right_momentum = gr.sector.momentum_index;
  const ConcurrenceReport cl = alpha_concurrences(gl.vector, convention);
  const ConcurrenceReport cr = alpha_concurrences(gr.vector, convention);
  report.delta_per_alpha.resize(cl.per_alpha.size());
  for (std::size_t a = 0; a < cl.per_alpha.size(); ++a)
    report.delta_per_alpha[a] = std::abs(cl.per_alpha[a] - cr.per_alpha[a]);
  report.delta_total = std::abs(cl.total - cr.total);
  return report;
}

}  // namespace spinring
