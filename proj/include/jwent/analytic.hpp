#pragma once

// Closed-form two-fermion states of the uniform open tight-binding chain
// H = sum_l (a+_l a_{l+1} + h.c.): single-particle modes
// |k> = sqrt(2/(N+1)) sum_l sin(k l) a+_l |0>, k = n pi/(N+1), energy 2 cos k.

#include "jwent/diag.hpp"
#include "jwent/measures.hpp"

namespace jwent {

/// Mode index n in 1..sites; k is derived, so identities such as k' = pi - k
/// (n' = sites + 1 - n) are exact integer comparisons.
class Momentum {
 public:
  Momentum(int sites, int n);

  int sites() const noexcept { return sites_; }
  int index() const noexcept { return n_; }
  double k() const;
  double energy() const;
  /// sin(k l), evaluated as sin(pi n l / (N + 1)).
  double sine(int l) const;

  friend bool operator==(const Momentum&, const Momentum&) = default;

 private:
  int sites_;
  int n_;
};

/// True if k' = pi - k.
bool is_reflection_pair(const Momentum& k, const Momentum& kp);

double single_particle_amplitude(int sites, const Momentum& k, int l);

/// (2/(N+1)) det[[sin kl, sin kl'], [sin k'l, sin k'l']].
double slater_d(int sites, const Momentum& k, const Momentum& kp, int l, int lp);

/// sum_{l<l'} D(k,k',l,l') a+_l a+_l' |0> on the sector (N, 2) basis.
StateVector two_particle_state(int sites, const Momentum& k, const Momentum& kp);

/// <a+_i a_j> = sum_{l != i,j} D(k,k',j,l) D(k,k',i,l), i < j.
double two_particle_Z(int sites, const Momentum& k, const Momentum& kp, int i, int j);
/// <S+_i S-_j> = (sum_{l<i} - sum_{i<l<j} + sum_{l>j}) D(k,k',j,l) D(k,k',i,l).
double two_particle_z(int sites, const Momentum& k, const Momentum& kp, int i, int j);
/// sum_{i<l<j} D(k,k',j,l) D(k,k',i,l); Z - z is twice this.
double two_particle_middle_sum(int sites, const Momentum& k, const Momentum& kp, int i, int j);

enum class CaseFamily {
  LowPair,   // n = 1, n' = 2
  EdgePair,  // n = 1, n' = N
};

struct CaseStudyReport {
  CaseFamily family = CaseFamily::LowPair;
  int sites = 0;
  SitePair pair;
  /// Every D(k,k',j,l) D(k,k',i,l), l not in {i,j}, exceeds 1e-15.
  bool all_products_positive = false;
  /// Every signed term of z (minus sign for i < l < j) exceeds 1e-15.
  bool z_terms_positive = false;
  /// Every product vanishes (|.| <= 1e-12).
  bool all_products_zero = false;
  /// EdgePair with i or j even: the situation in which z = Z = 0 is expected.
  bool zero_case = false;
  double z = 0.0;
  double Z = 0.0;
  double concurrence = 0.0;
  double mode_concurrence = 0.0;
  /// C >= MC - 1e-10.
  bool inequality_holds = false;
};

CaseStudyReport case_study(int sites, CaseFamily family, int i, int j);

}  // namespace jwent
