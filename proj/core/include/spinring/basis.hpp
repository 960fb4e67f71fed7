#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace spinring {

// Spin-1/2 configurations are bit patterns: bit i set <=> site i is up.
// Sites live on a periodic ring of n_sites (even, 4..32), so one 32-bit
// word always suffices.
using config_t = std::uint32_t;

constexpr int kMaxSites = 32;

struct SpinConfiguration {
  config_t bits = 0;
  int n_sites = 0;

  int popcount() const;
  /// 2*Sz of the configuration (number of up spins minus down spins).
  int sz_twice() const { return 2 * popcount() - n_sites; }
};

/// Cyclic shift moving the spin at site i to site i+shift (mod n_sites).
config_t translate_bits(config_t bits, int n_sites, int shift);

SpinConfiguration translate(const SpinConfiguration& config, int shift);

/// All configurations of n_sites spins with the given 2*Sz, strictly
/// increasing by bit pattern. Throws InvalidSectorError on parity mismatch
/// or |sz_twice| > n_sites.
std::vector<config_t> enumerate_sz_sector(int n_sites, int sz_twice);

struct TranslationOrbit {
  config_t representative = 0;  // numerically smallest pattern in the orbit
  int period = 0;               // smallest R > 0 with T^R |rep> = |rep>
};

/// Representative of the translation orbit of `bits` together with the
/// shift l such that T^l bits = representative, and the orbit period.
struct OrbitLocation {
  config_t representative;
  int shift;
  int period;
};
OrbitLocation locate_orbit(config_t bits, int n_sites);

struct SymmetrySector {
  int sz_twice = 0;
  int momentum_index = 0;  // n in k = 2*pi*n/N

  friend bool operator==(const SymmetrySector&, const SymmetrySector&) = default;
};

/// Momentum index n is realizable on an orbit of period R iff n*R = 0 mod N.
bool momentum_compatible(int momentum_index, int period, int n_sites);

/// Sorted list of configurations in one Sz sector with binary-search lookup.
class SzBasis {
 public:
  SzBasis(int n_sites, int sz_twice);

  int n_sites() const { return n_sites_; }
  int sz_twice() const { return sz_twice_; }
  std::size_t dim() const { return configs_.size(); }
  config_t config_at(std::size_t i) const { return configs_[i]; }
  const std::vector<config_t>& configs() const { return configs_; }

  /// Index of `bits` in the sorted list, or nullopt if absent.
  std::optional<std::size_t> index_of(config_t bits) const;

 private:
  int n_sites_;
  int sz_twice_;
  std::vector<config_t> configs_;
};

/// Translation-adapted basis of one (Sz, momentum) block. Basis states are
///   |a(k)> = (1/sqrt(R_a)) sum_{r=0}^{R_a-1} exp(-i k r) T^r |a>,
/// one per compatible orbit representative a.
class MomentumBasis {
 public:
  MomentumBasis(SymmetrySector sector, int n_sites);
  MomentumBasis(SymmetrySector sector, std::shared_ptr<const SzBasis> parent);

  const SymmetrySector& sector() const { return sector_; }
  int n_sites() const { return n_sites_; }
  double momentum() const;  // k = 2*pi*n/N
  std::size_t dim() const { return orbits_.size(); }
  const TranslationOrbit& orbit_at(std::size_t i) const { return orbits_[i]; }
  const std::vector<TranslationOrbit>& orbits() const { return orbits_; }
  const std::shared_ptr<const SzBasis>& parent() const { return parent_; }

  /// Row index of the orbit whose representative is `rep`, or nullopt.
  std::optional<std::size_t> index_of_representative(config_t rep) const;

  /// exp(-i k r) for r in 0..N-1, exact at the quarter points.
  const std::vector<std::complex<double>>& phases() const { return phases_; }

 private:
  void build();

  SymmetrySector sector_;
  int n_sites_;
  std::shared_ptr<const SzBasis> parent_;
  std::vector<TranslationOrbit> orbits_;
  std::vector<config_t> representatives_;  // sorted, parallel to orbits_
  std::vector<std::complex<double>> phases_;
};

/// Number of up spins for a given 2*Sz, throwing on parity mismatch.
int ups_for_sz(int n_sites, int sz_twice);

}  // namespace spinring
