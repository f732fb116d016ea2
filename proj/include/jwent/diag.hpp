#pragma once

// Dense symmetric eigensolution of sector matrices and ground-state search
// across sectors with explicit degeneracy reporting.

#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "jwent/model.hpp"

namespace jwent {

/// Absolute energy window (coupling units) inside which levels count as tied.
inline constexpr double kDegeneracyTol = 1e-9;

/// Real amplitudes over an ordered sector basis.
struct StateVector {
  BasisPtr basis;
  Eigen::VectorXd amps;

  double norm() const { return amps.norm(); }
  int sites() const { return basis->sites(); }
  double amplitude(OccupationState s) const;

  /// Takes ownership of amplitudes and rescales them to unit norm.
  static StateVector normalized(BasisPtr basis, Eigen::VectorXd amps);
};

struct Eigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column k belongs to values(k)
};

Eigensystem eigensystem(const SectorMatrix& m);

/// ||M v - lambda v||.
double residual_norm(const SectorMatrix& m, double lambda, const Eigen::VectorXd& v);

struct GroundStateReport {
  double energy = 0.0;
  StateVector state;
  Sector sector;
  /// Distance to the next level in the searched space; infinity if there is none.
  double gap_to_next = std::numeric_limits<double>::infinity();
  bool degenerate = false;
  /// Up-counts of every sector holding a level within tolerance of the ground energy.
  std::vector<int> tied_sectors;
};

struct GroundStateOptions {
  /// nullopt scans every sector n_up = 0..n (AUTO).
  std::optional<int> n_up;
  /// Throw DegeneracyError instead of flagging.
  bool strict = false;
  double tolerance = kDegeneracyTol;
  Execution exec = Execution::Parallel;
};

GroundStateReport ground_state(const ModelBuilder& builder, const CouplingSet& couplings,
                               const GroundStateOptions& options = {});

}  // namespace jwent
