#pragma once

// Seeded random XXZ ensembles with uniform-sign transverse couplings, solved
// sector by sector in both pictures.

#include <cstdint>
#include <vector>

#include "jwent/diag.hpp"
#include "jwent/signrule.hpp"

namespace jwent {

struct EnsembleSpec {
  std::uint64_t seed = 42;
  int draws = 100;
  int min_sites = 4;
  int max_sites = 10;
  /// |J_j| ~ U[j_min, j_max], one sign per draw.
  double j_min = 0.1;
  double j_max = 2.0;
  /// Jz_j ~ U[-jz_max, jz_max].
  double jz_max = 2.0;
  /// Per-sector ground levels closer than this force a redraw.
  double degeneracy_tolerance = kDegeneracyTol;
};

inline constexpr const char* kEnsemblePrng = "mt19937_64(seed_seq{seed, draw})";

struct SectorSolution {
  int n_up = 0;
  StateVector spin;     // ground state of the spin matrix
  StateVector fermion;  // ground state of the fermion matrix
  double energy = 0.0;
  double gap = 0.0;
  /// max |H_spin - H_fermion| entrywise.
  double matrix_mismatch = 0.0;
  /// max |lambda_spin - lambda_fermion| over the sorted spectra.
  double spectrum_mismatch = 0.0;
  double residual = 0.0;
};

struct DrawOutcome {
  int index = 0;
  CouplingSet couplings;
  SignConvention convention = SignConvention::Antiferro;
  int redraws = 0;
  /// Sectors n_up = 1..n-1, ascending.
  std::vector<SectorSolution> sectors;
};

/// One coupling draw from the stream.
CouplingSet draw_couplings(std::uint64_t seed, int index, int attempt, const EnsembleSpec& spec);

/// Solves every sector 1 <= n_up <= n-1 of the draw in both pictures.
std::vector<SectorSolution> solve_sectors(const CouplingSet& couplings, const ModelBuilder& spin,
                                          const ModelBuilder& fermion);

/// Draw d uses its own stream seeded by (seed, d, attempt); draws whose sectors
/// have a degenerate ground level are redrawn. Results are in draw order and do
/// not depend on `exec`.
std::vector<DrawOutcome> run_ensemble(const EnsembleSpec& spec, const ModelBuilder& spin, const ModelBuilder& fermion,
                                      Execution exec = Execution::Parallel);

}  // namespace jwent
