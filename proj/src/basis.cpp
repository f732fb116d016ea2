#include "jwent/basis.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "jwent/errors.hpp"

namespace jwent {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
  return r;
}

std::size_t Sector::dimension() const { return static_cast<std::size_t>(binomial(n, n_up)); }

SectorBasis::SectorBasis(int n, int n_up) : sector_{n, n_up} {
  if (n < 2 || n > kMaxSites) {
    throw CapacityError("chain length " + std::to_string(n) + " outside supported range 2.." +
                        std::to_string(kMaxSites));
  }
  if (n_up < 0 || n_up > n) {
    throw DomainError("up-count " + std::to_string(n_up) + " outside 0.." + std::to_string(n));
  }
  states_.reserve(sector_.dimension());
  if (n_up == 0) {
    states_.push_back({0});
    return;
  }
  // Gosper's hack walks same-popcount words in increasing order.
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t v = (std::uint64_t{1} << n_up) - 1;
  while (v < limit) {
    states_.push_back({static_cast<Bits>(v)});
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

std::optional<std::size_t> SectorBasis::find(OccupationState s) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t SectorBasis::index_of(OccupationState s) const {
  if (auto idx = find(s)) return *idx;
  throw DomainError("configuration " + to_site_string(s, sites()) + " is not in sector (" +
                    std::to_string(sites()) + "," + std::to_string(n_up()) + ")");
}

SectorBasis enumerate_sector(int n, int n_up) { return SectorBasis(n, n_up); }

int site_occupation(OccupationState s, int l, int n) {
  if (l < 1 || l > n) throw DomainError("site " + std::to_string(l) + " outside 1.." + std::to_string(n));
  return static_cast<int>((s.bits >> (l - 1)) & 1u);
}

int string_parity(OccupationState s, int i, int j) {
  if (i < 1 || i >= j || j > kMaxSites) {
    throw DomainError("string parity needs 1 <= i < j, got (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  const int between = std::popcount(s.bits & site_range_mask(i + 1, j - 1));
  return (between % 2 == 0) ? 1 : -1;
}

OccupationState parse_sites(const std::string& text) {
  OccupationState s;
  int site = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    ++site;
    if (site > kMaxSites) throw CapacityError("configuration longer than " + std::to_string(kMaxSites) + " sites");
    switch (ch) {
      case '1':
      case 'u':
        s.bits |= site_bit(site);
        break;
      case '0':
      case 'd':
        break;
      default:
        throw DomainError(std::string("unexpected site symbol '") + ch + "'");
    }
  }
  return s;
}

std::string to_site_string(OccupationState s, int n) {
  std::string out;
  out.reserve(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) out.push_back(((s.bits >> (l - 1)) & 1u) ? '1' : '0');
  return out;
}

}  // namespace jwent
