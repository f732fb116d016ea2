#pragma once

// Dense full-Hilbert-space constructions used as independent oracles for the
// sector kernels. Exponential in chain length; meant for n <= 10.

#include <Eigen/Dense>

#include "jwent/basis.hpp"
#include "jwent/model.hpp"

namespace jwent::reference {

inline constexpr int kMaxReferenceSites = 10;

/// Full-space index of a configuration is its bit value.
Eigen::MatrixXd spin_raising(int n, int site);
Eigen::MatrixXd spin_z(int n, int site);

/// a+_site defined by its action on occupation kets ordered prod_l a+_l, l ascending.
Eigen::MatrixXd fermion_creation(int n, int site);

/// XXZ Hamiltonian assembled from Kronecker products of single-site operators.
Eigen::MatrixXd xxz_full(const CouplingSet& couplings);
/// TB Hamiltonian assembled from products of fermion creation/annihilation matrices.
Eigen::MatrixXd tb_full(const CouplingSet& couplings);

/// Rows/columns of `full` belonging to `basis`, in basis order.
Eigen::MatrixXd restrict_to(const Eigen::MatrixXd& full, const SectorBasis& basis);

}  // namespace jwent::reference
