// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "jwent/analytic.hpp"
#include "jwent/diag.hpp"
#include "jwent/ensemble.hpp"
#include "jwent/measures.hpp"
#include "jwent/signrule.hpp"

using namespace jwent;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Tally {
  long cases = 0;
  long failures = 0;
  double worst = 0.0;

  void add(bool ok, double deviation) {
    ++cases;
    if (!ok) ++failures;
    worst = std::max(worst, deviation);
  }
  bool ok() const { return cases > 0 && failures == 0; }
};

bool all_ok = true;

void report(int id, const char* title, const Tally& t) {
  all_ok = all_ok && t.ok();
  std::printf("[%s] %2d %-34s cases=%ld failures=%ld worst=%.3e\n", t.ok() ? "PASS" : "FAIL", id, title, t.cases,
              t.failures, t.worst);
}

void note(const char* title, const Tally& t) {
  std::printf("       %-37s cases=%ld failures=%ld worst=%.3e\n", title, t.cases, t.failures, t.worst);
}

// Criterion 10 collects every two-site RDM seen by the other checks.
Tally rdm_tally;

void audit(const StateVector& psi) {
  for (const SitePair& p : all_pairs(psi.sites())) {
    for (Picture pic : {Picture::Spin, Picture::Fermion}) {
      const RdmCheck c = inspect_rdm(two_site_rdm(psi, p.i, p.j, pic));
      const double dev = std::max({c.trace_error, c.asymmetry, std::max(0.0, -c.min_eigenvalue)});
      rdm_tally.add(c.trace_error <= 1e-10 && c.asymmetry <= 1e-10 && c.min_eigenvalue >= -1e-10, dev);
    }
  }
}

void criterion_five_site() {
  Tally t;
  const CouplingSet c = CouplingSet::xy({1, 2, 2, 1});
  GroundStateOptions opts;
  opts.n_up = 3;
  const GroundStateReport spin = ground_state(spin_builder(), c, opts);
  const GroundStateReport fermion = ground_state(fermion_builder(), c, opts);
  audit(spin.state);
  audit(fermion.state);
  const PairMeasure m = measure_pair(spin.state, fermion.state, 1, 3);

  const double expected[][2] = {
      {m.spin.u_plus, 7.0 / 18.0},     {m.spin.u_minus, 1.0 / 9.0},
      {m.spin.z, 2.0 / 9.0},           {m.fermion.x_plus, 7.0 / 18.0},
      {m.fermion.x_minus, 1.0 / 9.0},  {std::abs(m.fermion.z_f), 1.0 / 9.0},
      {m.concurrence, (4.0 - std::sqrt(14.0)) / 9.0}, {m.mode_concurrence, 0.0},
  };
  for (const auto& e : expected) {
    const double dev = std::abs(e[0] - e[1]);
    t.add(dev <= 1e-10, dev);
  }

  const std::pair<const char*, double> printed[] = {
      {"duduu", -2}, {"uudud", -2}, {"uuddu", 2}, {"udduu", 2}, {"uduud", 2},
      {"duudu", 2},  {"dduuu", 1},  {"uuudd", 1}, {"ududu", -3}, {"duuud", -1},
  };
  Eigen::VectorXd target = Eigen::VectorXd::Zero(spin.state.amps.size());
  for (const auto& [s, a] : printed)
    target(static_cast<Eigen::Index>(spin.state.basis->index_of(parse_sites(s)))) = a / 6.0;
  const double dev = std::min((spin.state.amps - target).cwiseAbs().maxCoeff(),
                              (spin.state.amps + target).cwiseAbs().maxCoeff());
  t.add(dev <= 1e-10, dev);
  report(1, "five-site regression", t);
}

void criteria_ensemble() {
  EnsembleSpec spec;
  spec.seed = kSeed;
  spec.draws = 100;
  const std::vector<DrawOutcome> draws = run_ensemble(spec, spin_builder(), fermion_builder());

  Tally nn, non_nn, sign, identity;
  for (const DrawOutcome& d : draws) {
    const int n = d.couplings.sites();
    const SublatticePartition part = SublatticePartition::odd_sites(n);
    for (const SectorSolution& s : d.sectors) {
      audit(s.spin);
      audit(s.fermion);

      const SignRuleReport r = check_marshall(phase_fix(s.spin), part, d.couplings, 1e-9);
      sign.add(r.holds && r.convention == d.convention, r.max_violation);

      for (const SitePair& p : all_pairs(n)) {
        const PairMeasure m = measure_pair(s.spin, s.fermion, p.i, p.j);
        if (p.nearest_neighbor()) {
          const double dev = std::abs(m.concurrence - m.mode_concurrence);
          nn.add(dev <= 1e-10, dev);
        } else {
          const double dev = std::max(m.mode_concurrence - m.concurrence,
                                      std::abs(m.fermion.z_f) - std::abs(m.spin.z));
          non_nn.add(dev <= 1e-10, std::max(0.0, dev));
        }

        const PairDecomposition dec = pair_decompose(s.spin, p.i, p.j);
        const XyIdentityCheck id = check_xy_identity(dec, 1e-10);
        const ProductSignPattern pat = product_sign_pattern(dec);
        const bool sign_ok = pat.constant && (pat.sign == 0 || pat.sign == predicted_product_sign(p.i, p.j, part, d.convention));
        identity.add(id.holds && std::abs(id.lhs - id.rhs) <= 1e-10 && sign_ok, std::abs(id.lhs - id.rhs));
      }
    }
  }
  report(2, "NN equality", nn);
  report(3, "non-NN inequality", non_nn);
  report(4, "sign rule", sign);
  report(5, "pair identity and sign pattern", identity);
}

void criterion_spectrum() {
  Tally t;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> sites(2, 8);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  for (int set = 0; set < 50; ++set) {
    const int n = sites(rng);
    CouplingSet c;
    for (int b = 0; b < n - 1; ++b) {
      c.j_xy.push_back(coupling(rng));
      c.j_z.push_back(coupling(rng));
    }
    for (int k = 0; k <= n; ++k) {
      auto basis = make_basis(n, k);
      const SectorMatrix hs = build_xxz_spin(c, basis);
      const SectorMatrix hf = build_tb_fermion(c, basis);
      const double entry_dev = (hs.entries - hf.entries).cwiseAbs().maxCoeff();
      const double spec_dev = (eigensystem(hs).values - eigensystem(hf).values).cwiseAbs().maxCoeff();
      t.add(entry_dev == 0.0 && spec_dev <= 1e-10, std::max(entry_dev, spec_dev));
    }
  }
  report(6, "spectrum/matrix equality", t);
}

void criterion_string() {
  Tally t;
  std::mt19937_64 rng(kSeed + 1);
  std::normal_distribution<double> g;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto basis = make_basis(n, k);
      for (int sample = 0; sample < 100; ++sample) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(basis->size()));
        for (auto& a : v) a = g(rng);
        const StateVector psi = StateVector::normalized(basis, std::move(v));
        if (sample == 0) audit(psi);
        for (const SitePair& p : all_pairs(n)) {
          const PairMeasure m = measure_pair(psi, p.i, p.j);
          const std::complex<double> s = jw_string_correlator(psi, p.i, p.j);
          const double dev = std::max(std::abs(s.real() - m.fermion.z_f), std::abs(s.imag()));
          const bool exact = m.spin.u_plus == m.fermion.x_plus && m.spin.u_minus == m.fermion.x_minus;
          t.add(dev <= 1e-12 && exact, dev);
        }
      }
    }
  }
  report(7, "JW string identity", t);
}

void criterion_analytic() {
  Tally t;
  for (int n = 2; n <= 12; ++n) {
    auto basis = make_basis(n, 2);
    const Eigensystem es = eigensystem(build_tb_fermion(CouplingSet::uniform(n, 1.0, 0.0), basis));
    for (int n1 = 1; n1 <= n; ++n1) {
      for (int n2 = n1 + 1; n2 <= n; ++n2) {
        const Momentum k(n, n1), kp(n, n2);
        const StateVector closed = two_particle_state(n, k, kp);
        // The exact state is the closed form projected onto the ED eigenspace.
        const double energy = k.energy() + kp.energy();
        Eigen::VectorXd proj = Eigen::VectorXd::Zero(closed.amps.size());
        for (Eigen::Index c = 0; c < es.values.size(); ++c)
          if (std::abs(es.values(c) - energy) <= 1e-8) proj += es.vectors.col(c).dot(closed.amps) * es.vectors.col(c);
        const double proj_err = (proj - closed.amps).norm();
        t.add(proj_err <= 1e-10, proj_err);
        if (proj.norm() < 0.5) continue;
        const StateVector exact = StateVector::normalized(basis, proj);
        audit(exact);
        for (const SitePair& p : all_pairs(n)) {
          const PairMeasure m = measure_pair(exact, p.i, p.j);
          const double Z = two_particle_Z(n, k, kp, p.i, p.j);
          const double z = two_particle_z(n, k, kp, p.i, p.j);
          const double mid = two_particle_middle_sum(n, k, kp, p.i, p.j);
          const double dev = std::max({std::abs(Z - m.fermion.z_f), std::abs(z - m.spin.z),
                                       std::abs(Z - z - 2.0 * mid)});
          t.add(dev <= 1e-12, dev);
        }
      }
    }
  }
  report(8, "analytic two-particle oracle", t);
}

void criterion_case_studies() {
  // Literal statements: LOW_PAIR has every D-product positive and C >= MC;
  // EDGE_PAIR has z = Z = 0 whenever i or j is even.
  Tally literal, low_products, low_terms, low_ineq, edge_even, edge_mixed;
  for (int n = 4; n <= 20; ++n) {
    audit(two_particle_state(n, Momentum(n, 1), Momentum(n, 2)));
    audit(two_particle_state(n, Momentum(n, 1), Momentum(n, n)));
    for (const SitePair& p : all_pairs(n)) {
      const CaseStudyReport low = case_study(n, CaseFamily::LowPair, p.i, p.j);
      const double low_gap = std::max(0.0, low.mode_concurrence - low.concurrence);
      low_products.add(low.all_products_positive, 0.0);
      low_terms.add(low.z_terms_positive, 0.0);
      low_ineq.add(low.inequality_holds, low_gap);
      literal.add(low.all_products_positive && low.inequality_holds, low_gap);

      const CaseStudyReport edge = case_study(n, CaseFamily::EdgePair, p.i, p.j);
      if (edge.zero_case) {
        const double dev = std::max({std::abs(edge.z), std::abs(edge.Z), std::abs(edge.concurrence),
                                     std::abs(edge.mode_concurrence)});
        const bool ok = dev <= 1e-12;
        literal.add(ok, dev);
        if ((p.i + p.j) % 2 == 1) edge_mixed.add(ok, dev);
        else edge_even.add(ok, dev);
      }
    }
  }
  report(9, "excited-state case studies", literal);
  note("low pair: every D-product > 0", low_products);
  note("low pair: every signed z term > 0", low_terms);
  note("low pair: C >= MC", low_ineq);
  note("edge pair, i+j odd: z = Z = 0", edge_mixed);
  note("edge pair, i and j even: z = Z = 0", edge_even);
}

}  // namespace

int main() {
  criterion_five_site();
  criteria_ensemble();
  criterion_spectrum();
  criterion_string();
  criterion_analytic();
  criterion_case_studies();
  report(10, "RDM sanity", rdm_tally);
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all_ok ? 0 : 1;
}
