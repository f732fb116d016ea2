#pragma once

// Sector-restricted Hamiltonians of the open XXZ/XY spin chain and of its
// Jordan-Wigner counterpart, the tight-binding chain with NN interaction.

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "jwent/basis.hpp"
#include "jwent/execution.hpp"

namespace jwent {

/// Dense builders refuse longer chains (largest sector 12870 at 16 sites).
inline constexpr int kMaxDenseSites = 16;

/// Bond couplings; entry b (0-based) couples sites b+1 and b+2.
struct CouplingSet {
  std::vector<double> j_xy;
  std::vector<double> j_z;

  int sites() const { return static_cast<int>(j_xy.size()) + 1; }
  bool is_xy() const;

  static CouplingSet uniform(int n, double j, double jz);
  static CouplingSet xy(std::vector<double> j_xy);
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

inline BasisPtr make_basis(int n, int n_up) { return std::make_shared<const SectorBasis>(n, n_up); }

struct SectorMatrix {
  BasisPtr basis;
  Eigen::MatrixXd entries;

  Eigen::Index dim() const { return entries.rows(); }
};

/// Signature shared by the model builders; diag and the verification battery
/// take one of these so either picture (or a test double) can be plugged in.
using ModelBuilder = std::function<SectorMatrix(const CouplingSet&, const BasisPtr&)>;

/// H = sum_j J_j (S+_j S-_{j+1} + h.c.) + Jz_j S^z_j S^z_{j+1}.
SectorMatrix build_xxz_spin(const CouplingSet& couplings, const BasisPtr& basis,
                            Execution exec = Execution::Parallel);

/// H = sum_j Jz_j (n_j - 1/2)(n_{j+1} - 1/2) + J_j (a+_j a_{j+1} + h.c.),
/// basis kets ordered as prod_l a+_l in ascending l.
SectorMatrix build_tb_fermion(const CouplingSet& couplings, const BasisPtr& basis,
                              Execution exec = Execution::Parallel);

/// XXZ with Jz = 0.
SectorMatrix build_xy_spin(std::span<const double> j_xy, const BasisPtr& basis,
                           Execution exec = Execution::Parallel);

ModelBuilder spin_builder();
ModelBuilder fermion_builder();

/// Sign picked up by a+_to a_from acting on ket (which must have `from`
/// occupied and `to` empty), with creation operators in ascending site order.
int hopping_sign(OccupationState ket, int from, int to);

}  // namespace jwent
