#include "jwent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "jwent/errors.hpp"

namespace jwent {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_pair(const StateVector& psi, int i, int j) {
  if (!psi.basis) throw DomainError("state has no basis");
  const int n = psi.sites();
  if (i < 1 || j > n || i >= j) {
    throw DomainError("site pair (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for " +
                      std::to_string(n) + " sites");
  }
  if (std::abs(psi.amps.squaredNorm() - 1.0) > kNormTolerance) throw DomainError("state is not normalized");
}

struct PairMoments {
  double n_i = 0.0;
  double n_j = 0.0;
  double n_ij = 0.0;
  double flip = 0.0;         // sum over rest of amp(i1 j0) amp(i0 j1)
  double flip_string = 0.0;  // same, weighted by the parity between i and j
};

PairMoments pair_moments(const StateVector& psi, int i, int j) {
  const SectorBasis& basis = *psi.basis;
  const Bits bi = site_bit(i);
  const Bits bj = site_bit(j);
  PairMoments m;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const OccupationState s = basis[k];
    const double a = psi.amps(static_cast<Eigen::Index>(k));
    const double w = a * a;
    const bool oi = s.bits & bi;
    const bool oj = s.bits & bj;
    if (oi) m.n_i += w;
    if (oj) m.n_j += w;
    if (oi && oj) m.n_ij += w;
    if (oi && !oj) {
      const double b = psi.amplitude({s.bits ^ bi ^ bj});
      m.flip += a * b;
      m.flip_string += a * b * string_parity(s, i, j);
    }
  }
  return m;
}

}  // namespace

std::vector<SitePair> all_pairs(int n) {
  std::vector<SitePair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

SpinPairCorrelations spin_correlations(const StateVector& psi, int i, int j) {
  check_pair(psi, i, j);
  const PairMoments m = pair_moments(psi, i, j);
  // sigma^z = 2n - 1 turns (1/4)[1 +- (<s_i> + <s_j>) + <s_i s_j>] into these.
  return {m.n_ij, 1.0 - m.n_i - m.n_j + m.n_ij, m.n_i - m.n_ij, m.n_j - m.n_ij, m.flip};
}

FermionPairCorrelations fermion_correlations(const StateVector& psi, int i, int j) {
  check_pair(psi, i, j);
  const PairMoments m = pair_moments(psi, i, j);
  return {m.n_ij, 1.0 - m.n_i - m.n_j + m.n_ij, m.n_i - m.n_ij, m.n_j - m.n_ij, m.flip_string};
}

double concurrence(const SpinPairCorrelations& c) {
  return 2.0 * std::max(0.0, std::abs(c.z) - std::sqrt(std::max(0.0, c.u_plus * c.u_minus)));
}

double mode_concurrence(const FermionPairCorrelations& c) {
  return 2.0 * std::max(0.0, std::abs(c.z_f) - std::sqrt(std::max(0.0, c.x_plus * c.x_minus)));
}

TwoSiteRdm two_site_rdm(const StateVector& psi, int i, int j, Picture picture) {
  check_pair(psi, i, j);
  const SectorBasis& basis = *psi.basis;
  const Bits pair_mask = site_bit(i) | site_bit(j);
  auto code = [&](Bits s) {
    const bool oi = s & site_bit(i);
    const bool oj = s & site_bit(j);
    return (oi ? 0 : 2) + (oj ? 0 : 1);  // 11 -> 0, 10 -> 1, 01 -> 2, 00 -> 3
  };
  TwoSiteRdm rho = TwoSiteRdm::Zero();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Bits s = basis[a].bits;
    const double amp_s = psi.amps(static_cast<Eigen::Index>(a));
    // Every local configuration of (i, j) that shares the rest of s.
    for (Bits local : {Bits{0}, site_bit(i), site_bit(j), pair_mask}) {
      const OccupationState t{(s & ~pair_mask) | local};
      const auto b = basis.find(t);
      if (!b) continue;
      double w = amp_s * psi.amps(static_cast<Eigen::Index>(*b));
      if (picture == Picture::Fermion && t.bits != s) w *= string_parity(t, i, j);
      rho(code(s), code(t.bits)) += w;
    }
  }
  return rho;
}

PairMeasure measure_pair(const StateVector& psi, int i, int j) { return measure_pair(psi, psi, i, j); }

PairMeasure measure_pair(const StateVector& spin_state, const StateVector& fermion_state, int i, int j) {
  if (spin_state.sites() != fermion_state.sites()) throw DomainError("spin and fermion states live on different chains");
  PairMeasure out;
  out.pair = {i, j};
  out.spin = spin_correlations(spin_state, i, j);
  out.fermion = fermion_correlations(fermion_state, i, j);
  out.concurrence = concurrence(out.spin);
  out.mode_concurrence = mode_concurrence(out.fermion);
  return out;
}

std::vector<PairMeasure> measure_pairs(const StateVector& psi, const std::vector<SitePair>& pairs, Execution exec) {
  return measure_pairs(psi, psi, pairs, exec);
}

std::vector<PairMeasure> measure_pairs(const StateVector& spin_state, const StateVector& fermion_state,
                                       const std::vector<SitePair>& pairs, Execution exec) {
  for (const SitePair& p : pairs) {
    check_pair(spin_state, p.i, p.j);
    check_pair(fermion_state, p.i, p.j);
  }
  std::vector<PairMeasure> out(pairs.size());
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    out[k] = measure_pair(spin_state, fermion_state, pairs[k].i, pairs[k].j);
  }
  return out;
}

std::complex<double> jw_string_correlator(const StateVector& psi, int i, int j) {
  check_pair(psi, i, j);
  const SectorBasis& basis = *psi.basis;
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Bits ket = basis[k].bits;
    std::complex<double> coeff = psi.amps(static_cast<Eigen::Index>(k));
    double exponent = 0.0;
    for (int p = i; p <= j - 1; ++p) {
      const double sz = (ket & site_bit(p)) ? 1.0 : -1.0;
      exponent += (1.0 + sz) / 2.0;
    }
    coeff *= std::polar(1.0, std::numbers::pi * exponent);
    // sigma-_j = 2 S-_j, sigma+_i = 2 S+_i.
    if (!(ket & site_bit(j))) continue;
    ket &= ~site_bit(j);
    coeff *= 2.0;
    if (ket & site_bit(i)) continue;
    ket |= site_bit(i);
    coeff *= 2.0;
    acc += psi.amplitude({ket}) * coeff;
  }
  return 0.25 * acc;
}

RdmCheck inspect_rdm(const TwoSiteRdm& rho) {
  RdmCheck c;
  c.trace_error = std::abs(rho.trace() - 1.0);
  c.asymmetry = (rho - rho.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<TwoSiteRdm> solver(0.5 * (rho + rho.transpose()), Eigen::EigenvaluesOnly);
  c.min_eigenvalue = solver.eigenvalues().minCoeff();
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col) {
      const bool on_x = r == col || (r == 1 && col == 2) || (r == 2 && col == 1);
      if (!on_x) c.off_x_magnitude = std::max(c.off_x_magnitude, std::abs(rho(r, col)));
    }
  return c;
}

double sigma_z_expectation(const StateVector& psi, int l) {
  double acc = 0.0;
  for (std::size_t k = 0; k < psi.basis->size(); ++k) {
    const double a = psi.amps(static_cast<Eigen::Index>(k));
    acc += a * a * (((*psi.basis)[k].bits & site_bit(l)) ? 1.0 : -1.0);
  }
  return acc;
}

double sigma_zz_expectation(const StateVector& psi, int i, int j) {
  double acc = 0.0;
  for (std::size_t k = 0; k < psi.basis->size(); ++k) {
    const double a = psi.amps(static_cast<Eigen::Index>(k));
    const Bits s = (*psi.basis)[k].bits;
    const double si = (s & site_bit(i)) ? 1.0 : -1.0;
    const double sj = (s & site_bit(j)) ? 1.0 : -1.0;
    acc += a * a * si * sj;
  }
  return acc;
}

}  // namespace jwent
