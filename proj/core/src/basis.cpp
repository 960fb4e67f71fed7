#include "spinring/basis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spinring/errors.hpp"

namespace spinring {

namespace {

void check_sites(int n_sites) {
  if (n_sites < 4 || n_sites > kMaxSites || n_sites % 2 != 0)
    throw std::invalid_argument("n_sites must be even and in [4, 32]");
}

config_t low_mask(int n_sites) {
  return n_sites == 32 ? ~config_t{0} : ((config_t{1} << n_sites) - 1);
}

}  // namespace

int SpinConfiguration::popcount() const { return std::popcount(bits); }

config_t translate_bits(config_t bits, int n_sites, int shift) {
  shift %= n_sites;
  if (shift < 0) shift += n_sites;
  if (shift == 0) return bits;
  const config_t mask = low_mask(n_sites);
  return ((bits << shift) | (bits >> (n_sites - shift))) & mask;
}

SpinConfiguration translate(const SpinConfiguration& config, int shift) {
  return {translate_bits(config.bits, config.n_sites, shift), config.n_sites};
}

int ups_for_sz(int n_sites, int sz_twice) {
  if (std::abs(sz_twice) > n_sites || (sz_twice + n_sites) % 2 != 0)
    throw InvalidSectorError("sz_twice incompatible with n_sites");
  return (sz_twice + n_sites) / 2;
}

std::vector<config_t> enumerate_sz_sector(int n_sites, int sz_twice) {
  check_sites(n_sites);
  const int n_up = ups_for_sz(n_sites, sz_twice);
  std::vector<config_t> out;
  if (n_up == 0) {
    out.push_back(0);
    return out;
  }
  const config_t last = low_mask(n_sites) & ~low_mask(n_sites - n_up);
  // Gosper's hack walks same-popcount patterns in increasing order.
  std::uint64_t v = (config_t{1} << n_up) - 1;
  while (true) {
    out.push_back(static_cast<config_t>(v));
    if (v == last) break;
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

OrbitLocation locate_orbit(config_t bits, int n_sites) {
  config_t rep = bits;
  int shift = 0;
  int period = n_sites;
  config_t c = bits;
  for (int r = 1; r <= n_sites; ++r) {
    c = translate_bits(c, n_sites, 1);
    if (c == bits && r < period) period = r;
    if (c < rep) {
      rep = c;
      shift = r;
    }
  }
  return {rep, shift % period, period};
}

bool momentum_compatible(int momentum_index, int period, int n_sites) {
  return (momentum_index * period) % n_sites == 0;
}

SzBasis::SzBasis(int n_sites, int sz_twice)
    : n_sites_(n_sites),
      sz_twice_(sz_twice),
      configs_(enumerate_sz_sector(n_sites, sz_twice)) {}

std::optional<std::size_t> SzBasis::index_of(config_t bits) const {
  auto it = std::lower_bound(configs_.begin(), configs_.end(), bits);
  if (it == configs_.end() || *it != bits) return std::nullopt;
  return static_cast<std::size_t>(it - configs_.begin());
}

MomentumBasis::MomentumBasis(SymmetrySector sector, int n_sites)
    : MomentumBasis(sector,
                    std::make_shared<const SzBasis>(n_sites, sector.sz_twice)) {}

MomentumBasis::MomentumBasis(SymmetrySector sector,
                             std::shared_ptr<const SzBasis> parent)
    : sector_(sector), n_sites_(parent->n_sites()), parent_(std::move(parent)) {
  if (sector_.sz_twice != parent_->sz_twice())
    throw InvalidSectorError("sector Sz does not match parent basis");
  if (sector_.momentum_index < 0 || sector_.momentum_index >= n_sites_)
    throw InvalidSectorError("momentum index out of range");
  build();
}

void MomentumBasis::build() {
  const int n = sector_.momentum_index;
  for (config_t c : parent_->configs()) {
    const OrbitLocation loc = locate_orbit(c, n_sites_);
    if (loc.representative != c) continue;  // not the orbit minimum
    if (!momentum_compatible(n, loc.period, n_sites_)) continue;
    orbits_.push_back({c, loc.period});
    representatives_.push_back(c);
  }
  phases_.resize(n_sites_);
  for (int r = 0; r < n_sites_; ++r) {
    // exp(-2*pi*i*n*r/N), kept exact at multiples of pi/2 so that k = 0 and
    // k = pi blocks come out real to machine precision.
    const int q = (4 * n * r) % (4 * n_sites_);
    if (q == 0)
      phases_[r] = {1.0, 0.0};
    else if (q == n_sites_)
      phases_[r] = {0.0, -1.0};
    else if (q == 2 * n_sites_)
      phases_[r] = {-1.0, 0.0};
    else if (q == 3 * n_sites_)
      phases_[r] = {0.0, 1.0};
    else
      phases_[r] = std::polar(1.0, -2.0 * std::numbers::pi * n * r / n_sites_);
  }
}

double MomentumBasis::momentum() const {
  return 2.0 * std::numbers::pi * sector_.momentum_index / n_sites_;
}

std::optional<std::size_t> MomentumBasis::index_of_representative(
    config_t rep) const {
  auto it =
      std::lower_bound(representatives_.begin(), representatives_.end(), rep);
  if (it == representatives_.end() || *it != rep) return std::nullopt;
  return static_cast<std::size_t>(it - representatives_.begin());
}

}  // namespace spinring
