#include "jwent/analytic.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "jwent/errors.hpp"

namespace jwent {

namespace {

void check_sites(int sites, int l) {
  if (l < 1 || l > sites) throw DomainError("site " + std::to_string(l) + " outside 1.." + std::to_string(sites));
}

void check_momenta(int sites, const Momentum& k, const Momentum& kp) {
  if (k.sites() != sites || kp.sites() != sites) throw DomainError("momentum belongs to a different chain length");
}

void check_ordered_pair(int sites, int i, int j) {
  check_sites(sites, i);
  check_sites(sites, j);
  if (i >= j) throw DomainError("correlators need i < j");
}

double product(int sites, const Momentum& k, const Momentum& kp, int i, int j, int l) {
  return slater_d(sites, k, kp, j, l) * slater_d(sites, k, kp, i, l);
}

}  // namespace

Momentum::Momentum(int sites, int n) : sites_(sites), n_(n) {
  if (sites < 1) throw DomainError("chain needs at least one site");
  if (n < 1 || n > sites) {
    throw DomainError("mode index " + std::to_string(n) + " outside 1.." + std::to_string(sites));
  }
}

double Momentum::k() const { return n_ * std::numbers::pi / (sites_ + 1); }

double Momentum::energy() const { return 2.0 * std::cos(k()); }

double Momentum::sine(int l) const {
  return std::sin(std::numbers::pi * static_cast<double>(n_) * static_cast<double>(l) / (sites_ + 1));
}

bool is_reflection_pair(const Momentum& k, const Momentum& kp) {
  return k.sites() == kp.sites() && k.index() + kp.index() == k.sites() + 1;
}

double single_particle_amplitude(int sites, const Momentum& k, int l) {
  check_sites(sites, l);
  if (k.sites() != sites) throw DomainError("momentum belongs to a different chain length");
  return std::sqrt(2.0 / (sites + 1)) * k.sine(l);
}

double slater_d(int sites, const Momentum& k, const Momentum& kp, int l, int lp) {
  check_sites(sites, l);
  check_sites(sites, lp);
  check_momenta(sites, k, kp);
  if (l == lp) return 0.0;
  return 2.0 / (sites + 1) * (k.sine(l) * kp.sine(lp) - k.sine(lp) * kp.sine(l));
}

StateVector two_particle_state(int sites, const Momentum& k, const Momentum& kp) {
  check_momenta(sites, k, kp);
  if (k == kp) throw DomainError("two fermions cannot occupy the same mode");
  auto basis = make_basis(sites, 2);
  Eigen::VectorXd amps(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t idx = 0; idx < basis->size(); ++idx) {
    const Bits s = (*basis)[idx].bits;
    const int l = std::countr_zero(s) + 1;
    const int lp = 32 - std::countl_zero(s);
    amps(static_cast<Eigen::Index>(idx)) = slater_d(sites, k, kp, l, lp);
  }
  // Exact normalization holds analytically; rescaling only strips rounding.
  return StateVector::normalized(std::move(basis), std::move(amps));
}

double two_particle_Z(int sites, const Momentum& k, const Momentum& kp, int i, int j) {
  check_momenta(sites, k, kp);
  check_ordered_pair(sites, i, j);
  double acc = 0.0;
  for (int l = 1; l <= sites; ++l) {
    if (l == i || l == j) continue;
    acc += product(sites, k, kp, i, j, l);
  }
  return acc;
}

double two_particle_z(int sites, const Momentum& k, const Momentum& kp, int i, int j) {
  check_momenta(sites, k, kp);
  check_ordered_pair(sites, i, j);
  double acc = 0.0;
  for (int l = 1; l <= sites; ++l) {
    if (l == i || l == j) continue;
    const double sign = (l > i && l < j) ? -1.0 : 1.0;
    acc += sign * product(sites, k, kp, i, j, l);
  }
  return acc;
}

double two_particle_middle_sum(int sites, const Momentum& k, const Momentum& kp, int i, int j) {
  check_momenta(sites, k, kp);
  check_ordered_pair(sites, i, j);
  double acc = 0.0;
  for (int l = i + 1; l < j; ++l) acc += product(sites, k, kp, i, j, l);
  return acc;
}

CaseStudyReport case_study(int sites, CaseFamily family, int i, int j) {
  if (sites < 4) throw DomainError("case studies need at least four sites");
  check_ordered_pair(sites, i, j);
  const Momentum k(sites, 1);
  const Momentum kp(sites, family == CaseFamily::LowPair ? 2 : sites);

  CaseStudyReport r;
  r.family = family;
  r.sites = sites;
  r.pair = {i, j};
  r.all_products_positive = true;
  r.z_terms_positive = true;
  r.all_products_zero = true;
  for (int l = 1; l <= sites; ++l) {
    if (l == i || l == j) continue;
    const double p = product(sites, k, kp, i, j, l);
    const double term = (l > i && l < j) ? -p : p;
    r.all_products_positive = r.all_products_positive && p > 1e-15;
    r.z_terms_positive = r.z_terms_positive && term > 1e-15;
    r.all_products_zero = r.all_products_zero && std::abs(p) <= 1e-12;
  }
  r.zero_case = family == CaseFamily::EdgePair && (i % 2 == 0 || j % 2 == 0);
  r.z = two_particle_z(sites, k, kp, i, j);
  r.Z = two_particle_Z(sites, k, kp, i, j);

  const PairMeasure m = measure_pair(two_particle_state(sites, k, kp), i, j);
  r.concurrence = m.concurrence;
  r.mode_concurrence = m.mode_concurrence;
  r.inequality_holds = r.concurrence >= r.mode_concurrence - 1e-10;
  return r;
}

}  // namespace jwent
