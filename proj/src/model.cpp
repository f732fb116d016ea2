#include "jwent/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <omp.h>

#include "jwent/errors.hpp"

namespace jwent {

int max_threads() { return omp_get_max_threads(); }

bool CouplingSet::is_xy() const {
  return std::all_of(j_z.begin(), j_z.end(), [](double v) { return v == 0.0; });
}

CouplingSet CouplingSet::uniform(int n, double j, double jz) {
  if (n < 2) throw DomainError("a chain needs at least two sites");
  const auto bonds = static_cast<std::size_t>(n - 1);
  return {std::vector<double>(bonds, j), std::vector<double>(bonds, jz)};
}

CouplingSet CouplingSet::xy(std::vector<double> j_xy) {
  std::vector<double> jz(j_xy.size(), 0.0);
  return {std::move(j_xy), std::move(jz)};
}

namespace {

void check_inputs(const CouplingSet& c, const BasisPtr& basis) {
  if (!basis) throw DomainError("null basis");
  if (basis->sites() > kMaxDenseSites) {
    throw CapacityError("dense Hamiltonian limited to " + std::to_string(kMaxDenseSites) + " sites");
  }
  const auto bonds = static_cast<std::size_t>(basis->sites() - 1);
  if (c.j_xy.size() != bonds || c.j_z.size() != bonds) {
    throw DomainError("coupling lengths (" + std::to_string(c.j_xy.size()) + "," + std::to_string(c.j_z.size()) +
                      ") do not match " + std::to_string(bonds) + " bonds");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(c.j_xy.begin(), c.j_xy.end(), finite) || !std::all_of(c.j_z.begin(), c.j_z.end(), finite)) {
    throw DomainError("non-finite coupling");
  }
}

}  // namespace

int hopping_sign(OccupationState ket, int from, int to) {
  const Bits below_from = ket.bits & site_range_mask(1, from - 1);
  const Bits mid = ket.bits & ~site_bit(from);
  const Bits below_to = mid & site_range_mask(1, to - 1);
  const int swaps = std::popcount(below_from) + std::popcount(below_to);
  return (swaps % 2 == 0) ? 1 : -1;
}

SectorMatrix build_xxz_spin(const CouplingSet& couplings, const BasisPtr& basis, Execution exec) {
  check_inputs(couplings, basis);
  const SectorBasis& b = *basis;
  const int bonds = b.sites() - 1;
  const auto dim = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);

  // Column `col` is written only by the iteration that owns it.
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Bits s = b[static_cast<std::size_t>(col)].bits;
    double diag = 0.0;
    for (int bond = 0; bond < bonds; ++bond) {
      const Bits left = (s >> bond) & 1u;
      const Bits right = (s >> (bond + 1)) & 1u;
      diag += couplings.j_z[bond] * (left == right ? 0.25 : -0.25);
      if (left != right && couplings.j_xy[bond] != 0.0) {
        const OccupationState flipped{s ^ (Bits{3} << bond)};
        m(static_cast<Eigen::Index>(b.index_of(flipped)), col) += couplings.j_xy[bond];
      }
    }
    m(col, col) += diag;
  }
  return {basis, std::move(m)};
}

SectorMatrix build_tb_fermion(const CouplingSet& couplings, const BasisPtr& basis, Execution exec) {
  check_inputs(couplings, basis);
  const SectorBasis& b = *basis;
  const int n = b.sites();
  const auto dim = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);

#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
  for (Eigen::Index col = 0; col < dim; ++col) {
    const OccupationState ket = b[static_cast<std::size_t>(col)];
    double diag = 0.0;
    for (int j = 1; j < n; ++j) {
      const int nj = site_occupation(ket, j, n);
      const int nk = site_occupation(ket, j + 1, n);
      diag += couplings.j_z[j - 1] * (nj - 0.5) * (nk - 0.5);
      const double hop = couplings.j_xy[j - 1];
      if (hop == 0.0 || nj == nk) continue;
      // a+_j a_{j+1} when the particle sits on j+1, its conjugate otherwise.
      const int from = (nk == 1) ? j + 1 : j;
      const int to = (nk == 1) ? j : j + 1;
      const OccupationState bra{(ket.bits & ~site_bit(from)) | site_bit(to)};
      m(static_cast<Eigen::Index>(b.index_of(bra)), col) += hop * hopping_sign(ket, from, to);
    }
    m(col, col) += diag;
  }
  return {basis, std::move(m)};
}

SectorMatrix build_xy_spin(std::span<const double> j_xy, const BasisPtr& basis, Execution exec) {
  return build_xxz_spin(CouplingSet::xy({j_xy.begin(), j_xy.end()}), basis, exec);
}

ModelBuilder spin_builder() {
  return [](const CouplingSet& c, const BasisPtr& b) { return build_xxz_spin(c, b); };
}

ModelBuilder fermion_builder() {
  return [](const CouplingSet& c, const BasisPtr& b) { return build_tb_fermion(c, b); };
}

}  // namespace jwent
