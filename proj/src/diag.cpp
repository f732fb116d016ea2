#include "jwent/diag.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "jwent/errors.hpp"

namespace jwent {

double StateVector::amplitude(OccupationState s) const {
  auto idx = basis->find(s);
  return idx ? amps(static_cast<Eigen::Index>(*idx)) : 0.0;
}

StateVector StateVector::normalized(BasisPtr basis, Eigen::VectorXd amps) {
  if (!basis || static_cast<std::size_t>(amps.size()) != basis->size()) {
    throw DomainError("amplitude count does not match the basis");
  }
  const double nrm = amps.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw DomainError("cannot normalize a zero or non-finite vector");
  amps /= nrm;
  return {std::move(basis), std::move(amps)};
}

Eigensystem eigensystem(const SectorMatrix& m) {
  if (!m.entries.allFinite()) throw NumericError("matrix has non-finite entries");
  if (m.entries.rows() != m.entries.cols()) throw DomainError("matrix is not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.entries, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double residual_norm(const SectorMatrix& m, double lambda, const Eigen::VectorXd& v) {
  return (m.entries * v - lambda * v).norm();
}

namespace {

struct SectorSolve {
  BasisPtr basis;
  Eigensystem system;
};

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

}  // namespace

GroundStateReport ground_state(const ModelBuilder& builder, const CouplingSet& couplings,
                               const GroundStateOptions& options) {
  const int n = couplings.sites();
  std::vector<int> up_counts;
  if (options.n_up) {
    up_counts.push_back(*options.n_up);
  } else {
    for (int k = 0; k <= n; ++k) up_counts.push_back(k);
  }

  // Bases are built up front so range errors surface outside the parallel region.
  std::vector<SectorSolve> solves(up_counts.size());
  for (std::size_t s = 0; s < up_counts.size(); ++s) solves[s].basis = make_basis(n, up_counts[s]);
  // Builder validation also runs up front for the same reason.
  (void)builder(couplings, solves.front().basis);

  const auto count = static_cast<std::ptrdiff_t>(solves.size());
#pragma omp parallel for schedule(dynamic) if (options.exec == Execution::Parallel)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    solves[s].system = eigensystem(builder(couplings, solves[s].basis));
  }

  // Lowest level over all sectors; ties keep the smallest n_up.
  std::size_t best = 0;
  for (std::size_t s = 1; s < solves.size(); ++s) {
    if (solves[s].system.values(0) < solves[best].system.values(0)) best = s;
  }
  const double e0 = solves[best].system.values(0);

  GroundStateReport report;
  report.energy = e0;
  report.sector = solves[best].basis->sector();
  report.state = {solves[best].basis, solves[best].system.vectors.col(0)};

  // Second-lowest level overall, counted with multiplicity.
  double second = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < solves.size(); ++s) {
    const Eigen::VectorXd& vals = solves[s].system.values;
    const Eigen::Index first = (s == best) ? 1 : 0;
    if (first < vals.size()) second = std::min(second, vals(first));
    if (vals(0) - e0 <= options.tolerance) report.tied_sectors.push_back(up_counts[s]);
  }
  report.gap_to_next = std::max(0.0, second - e0);
  report.degenerate = report.gap_to_next <= options.tolerance;

  if (report.degenerate && options.strict) {
    throw DegeneracyError("degenerate ground state (E=" + std::to_string(e0) + ") in sectors n_up={" +
                              join(report.tied_sectors) + "}; pin a sector",
                          report.tied_sectors);
  }
  return report;
}

}  // namespace jwent
