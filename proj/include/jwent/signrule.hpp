#pragma once

// Marshall sign rule checks and the site-pair decomposition of a sector state
// |psi> = |uu>|psi1> + |dd>|psi2> + sum_k (x_k |ud> + y_k |du>) |phi_k>.

#include <vector>

#include "jwent/diag.hpp"

namespace jwent {

inline constexpr double kSignRuleTolerance = 1e-9;
/// Amplitudes (and products) below this magnitude carry no sign.
inline constexpr double kSignlessMagnitude = 1e-12;
inline constexpr double kIdentityTolerance = 1e-10;

struct SublatticePartition {
  int n = 0;
  Bits a_mask = 0;

  /// A = {1, 3, 5, ...}.
  static SublatticePartition odd_sites(int n);
  static SublatticePartition from_sites(int n, const std::vector<int>& a_sites);

  bool in_a(int site) const { return a_mask & site_bit(site); }
  std::vector<int> a_sites() const;
  std::vector<int> b_sites() const;
  /// Every chain bond (l, l+1) joins A to B.
  bool bipartite_on_chain() const;
};

enum class SignConvention { Ferro, Antiferro };

struct SignRuleReport {
  bool holds = false;
  double max_violation = 0.0;
  SignConvention convention = SignConvention::Antiferro;
};

/// Flips the global sign so the largest-magnitude amplitude is positive; ties
/// go to the lowest basis index.
StateVector phase_fix(const StateVector& psi);

/// Number of up spins on sublattice A.
int marshall_phi(OccupationState s, const SublatticePartition& part);

/// Antiferro (all J > 0): (-1)^phi(m) g_m share one sign. Ferro (all J <= 0):
/// g_m share one sign. The global sign is taken from the largest-magnitude
/// entry of the rotated vector, so the check does not depend on the sign the
/// eigensolver returned.
SignRuleReport check_marshall(const StateVector& psi, const SublatticePartition& part, const CouplingSet& couplings,
                              double tolerance = kSignRuleTolerance);

SignConvention sign_convention(const CouplingSet& couplings);

struct PairDecomposition {
  int i = 1;
  int j = 2;
  /// Configurations of the other n-2 sites (bits i, j cleared), ascending.
  std::vector<OccupationState> rest;
  std::vector<double> x;  // amp(i up, j down, rest_k)
  std::vector<double> y;  // amp(i down, j up, rest_k)
  // Aligned-spin parts, exposed for completeness.
  std::vector<OccupationState> rest_uu;
  std::vector<double> uu;
  std::vector<OccupationState> rest_dd;
  std::vector<double> dd;

  /// sum_k x_k y_k = <S+_i S-_j>.
  double product_sum() const;
};

PairDecomposition pair_decompose(const StateVector& psi, int i, int j);

struct XyIdentityCheck {
  double lhs = 0.0;  // |sum_k x_k y_k|
  double rhs = 0.0;  // sum_k |x_k y_k|
  bool holds = false;
};

XyIdentityCheck check_xy_identity(const PairDecomposition& d, double tolerance = kIdentityTolerance);

struct ProductSignPattern {
  bool constant = true;
  /// +1 or -1 for the common sign, 0 if every product is signless.
  int sign = 0;
};

ProductSignPattern product_sign_pattern(const PairDecomposition& d, double signless = kSignlessMagnitude);

/// Sign the sign rule predicts for every x_k y_k: +1 for ferro couplings or
/// when i and j share a sublattice, -1 otherwise.
int predicted_product_sign(int i, int j, const SublatticePartition& part, SignConvention convention);

}  // namespace jwent
