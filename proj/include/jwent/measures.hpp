#pragma once

// Two-site reduced density matrices, correlation functions, concurrence (spin
// picture) and mode concurrence (fermion picture) of sector eigenstates.
//
// Both pictures read the same amplitude vector: with creation operators in
// ascending site order the Jordan-Wigner map keeps every coefficient, so only
// the coherence term differs (by the string parity of the sites between i and j).

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "jwent/diag.hpp"
#include "jwent/execution.hpp"

namespace jwent {

struct SitePair {
  int i = 1;
  int j = 2;

  bool nearest_neighbor() const { return j == i + 1; }
  friend bool operator==(const SitePair&, const SitePair&) = default;
};

/// Every (i, j) with 1 <= i < j <= n, lexicographic.
std::vector<SitePair> all_pairs(int n);

struct SpinPairCorrelations {
  double u_plus = 0.0;   // P(i up, j up)
  double u_minus = 0.0;  // P(i down, j down)
  double omega1 = 0.0;   // P(i up, j down)
  double omega2 = 0.0;   // P(i down, j up)
  double z = 0.0;        // <S+_i S-_j> = <sigma+_i sigma-_j>/4
};

struct FermionPairCorrelations {
  double x_plus = 0.0;   // <n_i n_j>
  double x_minus = 0.0;  // 1 - <n_i> - <n_j> + <n_i n_j>
  double y_plus = 0.0;
  double y_minus = 0.0;
  double z_f = 0.0;      // <a+_i a_j>
};

struct PairMeasure {
  SitePair pair;
  SpinPairCorrelations spin;
  FermionPairCorrelations fermion;
  double concurrence = 0.0;
  double mode_concurrence = 0.0;
};

enum class Picture { Spin, Fermion };

/// Rows/columns ordered {11, 10, 01, 00} for (site i, site j).
using TwoSiteRdm = Eigen::Matrix4d;

SpinPairCorrelations spin_correlations(const StateVector& psi, int i, int j);
FermionPairCorrelations fermion_correlations(const StateVector& psi, int i, int j);

/// C = 2 max{0, |z| - sqrt(u+ u-)}.
double concurrence(const SpinPairCorrelations& c);
/// MC = 2 max{0, |Z| - sqrt(X+ X-)}.
double mode_concurrence(const FermionPairCorrelations& c);

/// Partial trace over all sites except i and j. In the fermion picture the
/// 10/01 coherence carries the parity of the occupied sites between i and j.
TwoSiteRdm two_site_rdm(const StateVector& psi, int i, int j, Picture picture);

PairMeasure measure_pair(const StateVector& psi, int i, int j);
/// C from the spin-model state, MC from the separately obtained fermion-model state.
PairMeasure measure_pair(const StateVector& spin_state, const StateVector& fermion_state, int i, int j);

std::vector<PairMeasure> measure_pairs(const StateVector& psi, const std::vector<SitePair>& pairs,
                                       Execution exec = Execution::Parallel);
std::vector<PairMeasure> measure_pairs(const StateVector& spin_state, const StateVector& fermion_state,
                                       const std::vector<SitePair>& pairs, Execution exec = Execution::Parallel);

/// (1/4) <sigma+_i sigma-_j exp(i pi sum_{p=i}^{j-1} (1 + sigma^z_p)/2)> evaluated
/// in the spin picture by applying the three operators to each ket. Equals
/// <a+_i a_j> of the Jordan-Wigner image.
std::complex<double> jw_string_correlator(const StateVector& psi, int i, int j);

struct RdmCheck {
  double trace_error = 0.0;     // |tr rho - 1|
  double asymmetry = 0.0;       // max |rho - rho^T|
  double min_eigenvalue = 0.0;
  /// Largest entry outside the diagonal and the 10/01 coherence (fixed
  /// magnetization forbids the 11/00 coherence as well).
  double off_x_magnitude = 0.0;

  bool ok(double tolerance = 1e-10) const {
    return trace_error <= tolerance && asymmetry <= tolerance && min_eigenvalue >= -tolerance &&
           off_x_magnitude <= tolerance;
  }
};

RdmCheck inspect_rdm(const TwoSiteRdm& rho);

/// <sigma^z_l> and <sigma^z_i sigma^z_j> from Pauli matrices directly.
double sigma_z_expectation(const StateVector& psi, int l);
double sigma_zz_expectation(const StateVector& psi, int i, int j);

}  // namespace jwent
