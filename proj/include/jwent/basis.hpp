#pragma once

// Bit-encoded occupation basis shared by the spin and the fermion picture.
// Site l (1-based) lives in bit l-1; a set bit is spin-up / one fermion.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jwent {

using Bits = std::uint32_t;

/// Largest chain the basis layer accepts. Dense Hamiltonians are capped lower
/// (see kMaxDenseSites in model.hpp).
inline constexpr int kMaxSites = 24;

struct OccupationState {
  Bits bits = 0;

  friend constexpr auto operator<=>(const OccupationState&, const OccupationState&) = default;
};

/// Reads a configuration written site 1 first, e.g. "01011" or "duduu".
/// Accepts 0/1 and d/u, skips whitespace; anything else is a DomainError.
OccupationState parse_sites(const std::string& text);
/// Inverse of parse_sites in 0/1 form, site 1 first.
std::string to_site_string(OccupationState s, int n);

struct Sector {
  int n = 0;
  int n_up = 0;

  std::size_t dimension() const;
  /// Total S^z = n_up - n/2.
  double sz() const { return n_up - 0.5 * n; }

  friend bool operator==(const Sector&, const Sector&) = default;
};

/// All n-bit configurations with exactly n_up set bits, in ascending order.
/// Immutable after construction.
class SectorBasis {
 public:
  SectorBasis(int n, int n_up);

  const Sector& sector() const noexcept { return sector_; }
  int sites() const noexcept { return sector_.n; }
  int n_up() const noexcept { return sector_.n_up; }
  std::size_t size() const noexcept { return states_.size(); }

  std::span<const OccupationState> states() const noexcept { return states_; }
  OccupationState operator[](std::size_t idx) const { return states_[idx]; }

  /// Ordinal of a configuration, or nullopt if it is not in this sector.
  std::optional<std::size_t> find(OccupationState s) const;
  /// As find(), but a missing state is a DomainError.
  std::size_t index_of(OccupationState s) const;

 private:
  Sector sector_;
  std::vector<OccupationState> states_;
};

SectorBasis enumerate_sector(int n, int n_up);

std::uint64_t binomial(int n, int k);

/// Bit l-1 of the configuration; l must lie in 1..n.
int site_occupation(OccupationState s, int l, int n = kMaxSites);

/// (-1)^(number of occupied sites strictly between i and j), 1 <= i < j.
int string_parity(OccupationState s, int i, int j);

/// Mask with the bits of sites lo..hi (1-based, inclusive) set; empty if lo > hi.
constexpr Bits site_range_mask(int lo, int hi) {
  if (lo > hi) return 0;
  const Bits upper = (hi >= 32) ? ~Bits{0} : ((Bits{1} << hi) - 1);
  const Bits lower = (Bits{1} << (lo - 1)) - 1;
  return upper & ~lower;
}

constexpr Bits site_bit(int l) { return Bits{1} << (l - 1); }

}  // namespace jwent
