#include "jwent/signrule.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "jwent/errors.hpp"

namespace jwent {

SublatticePartition SublatticePartition::odd_sites(int n) {
  SublatticePartition p{n, 0};
  for (int l = 1; l <= n; l += 2) p.a_mask |= site_bit(l);
  return p;
}

SublatticePartition SublatticePartition::from_sites(int n, const std::vector<int>& a_sites) {
  SublatticePartition p{n, 0};
  for (int l : a_sites) {
    if (l < 1 || l > n) throw DomainError("sublattice site " + std::to_string(l) + " outside the chain");
    p.a_mask |= site_bit(l);
  }
  return p;
}

std::vector<int> SublatticePartition::a_sites() const {
  std::vector<int> out;
  for (int l = 1; l <= n; ++l)
    if (in_a(l)) out.push_back(l);
  return out;
}

std::vector<int> SublatticePartition::b_sites() const {
  std::vector<int> out;
  for (int l = 1; l <= n; ++l)
    if (!in_a(l)) out.push_back(l);
  return out;
}

bool SublatticePartition::bipartite_on_chain() const {
  for (int l = 1; l < n; ++l)
    if (in_a(l) == in_a(l + 1)) return false;
  return true;
}

StateVector phase_fix(const StateVector& psi) {
  if (psi.amps.size() == 0 || psi.amps.cwiseAbs().maxCoeff() == 0.0) throw DomainError("cannot phase-fix a zero vector");
  Eigen::Index lead = 0;
  for (Eigen::Index k = 1; k < psi.amps.size(); ++k) {
    if (std::abs(psi.amps(k)) > std::abs(psi.amps(lead))) lead = k;
  }
  StateVector out = psi;
  if (out.amps(lead) < 0.0) out.amps = -out.amps;
  return out;
}

int marshall_phi(OccupationState s, const SublatticePartition& part) { return std::popcount(s.bits & part.a_mask); }

SignConvention sign_convention(const CouplingSet& couplings) {
  const bool all_pos = std::all_of(couplings.j_xy.begin(), couplings.j_xy.end(), [](double v) { return v > 0.0; });
  const bool all_nonpos = std::all_of(couplings.j_xy.begin(), couplings.j_xy.end(), [](double v) { return v <= 0.0; });
  if (all_pos) return SignConvention::Antiferro;
  if (all_nonpos) return SignConvention::Ferro;
  throw ConventionError("transverse couplings have mixed signs; no sign rule applies");
}

SignRuleReport check_marshall(const StateVector& psi, const SublatticePartition& part, const CouplingSet& couplings,
                              double tolerance) {
  SignRuleReport report;
  report.convention = sign_convention(couplings);
  if (part.n != psi.sites()) throw DomainError("partition and state disagree on chain length");

  const SectorBasis& basis = *psi.basis;
  Eigen::VectorXd rotated(psi.amps.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double g = psi.amps(static_cast<Eigen::Index>(k));
    const bool flip = report.convention == SignConvention::Antiferro && (marshall_phi(basis[k], part) % 2 == 1);
    rotated(static_cast<Eigen::Index>(k)) = flip ? -g : g;
  }
  Eigen::Index lead = 0;
  rotated.cwiseAbs().maxCoeff(&lead);
  if (rotated(lead) < 0.0) rotated = -rotated;

  for (Eigen::Index k = 0; k < rotated.size(); ++k) {
    if (std::abs(rotated(k)) < kSignlessMagnitude) continue;
    report.max_violation = std::max(report.max_violation, -rotated(k));
  }
  report.holds = report.max_violation <= tolerance;
  return report;
}

double PairDecomposition::product_sum() const {
  double acc = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k];
  return acc;
}

PairDecomposition pair_decompose(const StateVector& psi, int i, int j) {
  const int n = psi.sites();
  if (i < 1 || j > n || i >= j) throw DomainError("site pair out of range");
  PairDecomposition d;
  d.i = i;
  d.j = j;
  const SectorBasis& basis = *psi.basis;
  const Bits bi = site_bit(i);
  const Bits bj = site_bit(j);
  // Ascending basis order makes each rest list ascending as well: removing two
  // fixed bits from states that agree on them preserves order.
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Bits s = basis[k].bits;
    const OccupationState rest{s & ~(bi | bj)};
    const double a = psi.amps(static_cast<Eigen::Index>(k));
    const bool oi = s & bi;
    const bool oj = s & bj;
    if (oi && oj) {
      d.rest_uu.push_back(rest);
      d.uu.push_back(a);
    } else if (!oi && !oj) {
      d.rest_dd.push_back(rest);
      d.dd.push_back(a);
    } else if (oi && !oj) {
      d.rest.push_back(rest);
      d.x.push_back(a);
      d.y.push_back(psi.amplitude({rest.bits | bj}));
    }
  }
  return d;
}

XyIdentityCheck check_xy_identity(const PairDecomposition& d, double tolerance) {
  XyIdentityCheck out;
  double sum = 0.0;
  for (std::size_t k = 0; k < d.x.size(); ++k) {
    const double p = d.x[k] * d.y[k];
    sum += p;
    out.rhs += std::abs(p);
  }
  out.lhs = std::abs(sum);
  out.holds = std::abs(out.lhs - out.rhs) <= tolerance;
  return out;
}

ProductSignPattern product_sign_pattern(const PairDecomposition& d, double signless) {
  ProductSignPattern out;
  for (std::size_t k = 0; k < d.x.size(); ++k) {
    const double p = d.x[k] * d.y[k];
    if (std::abs(p) < signless) continue;
    const int s = p > 0.0 ? 1 : -1;
    if (out.sign == 0) {
      out.sign = s;
    } else if (s != out.sign) {
      out.constant = false;
    }
  }
  return out;
}

int predicted_product_sign(int i, int j, const SublatticePartition& part, SignConvention convention) {
  if (convention == SignConvention::Ferro) return 1;
  return part.in_a(i) == part.in_a(j) ? 1 : -1;
}

}  // namespace jwent
