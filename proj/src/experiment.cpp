#include "jwent/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <random>
#include <sstream>

#include "jwent/errors.hpp"
#include "jwent/signrule.hpp"

namespace jwent {

// ---------------------------------------------------------------------------
// Configuration

std::vector<SitePair> ExperimentConfig::resolved_pairs() const { return pairs ? *pairs : all_pairs(n); }

void ExperimentConfig::validate() const {
  if (n < 2 || n > kMaxDenseSites) {
    throw ConfigError("n must lie in 2.." + std::to_string(kMaxDenseSites) + ", got " + std::to_string(n));
  }
  const auto bonds = static_cast<std::size_t>(n - 1);
  if (couplings.j_xy.size() != bonds || couplings.j_z.size() != bonds) {
    throw ConfigError("j_xy and j_z need " + std::to_string(bonds) + " entries each");
  }
  for (double v : couplings.j_xy)
    if (!std::isfinite(v)) throw ConfigError("non-finite j_xy entry");
  for (double v : couplings.j_z)
    if (!std::isfinite(v)) throw ConfigError("non-finite j_z entry");
  if (sector && (*sector < 0 || *sector > n)) throw ConfigError("sector must lie in 0..n");
  if (pairs) {
    for (const SitePair& p : *pairs) {
      if (p.i < 1 || p.j > n || p.i >= p.j) {
        throw ConfigError("pair (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") needs 1 <= i < j <= n");
      }
    }
  }
  if (grid.size() > 1) {
    const bool up = std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<>()) == grid.end();
    const bool down = std::adjacent_find(grid.begin(), grid.end(), std::less_equal<>()) == grid.end();
    if (!up && !down) throw ConfigError("grid must be strictly monotone");
  }
  for (double g : grid)
    if (!std::isfinite(g)) throw ConfigError("non-finite grid value");
  if (ensemble < 0) throw ConfigError("ensemble size must be non-negative");
  if (!(degeneracy_tolerance > 0.0)) throw ConfigError("degeneracy tolerance must be positive");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (!j.contains("j_xy")) throw ConfigError("config needs j_xy");
    c.couplings.j_xy = j.at("j_xy").get<std::vector<double>>();
    c.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(c.couplings.j_xy.size()) + 1;
    c.couplings.j_z = j.contains("j_z") ? j.at("j_z").get<std::vector<double>>()
                                        : std::vector<double>(c.couplings.j_xy.size(), 0.0);
    if (j.contains("sector")) {
      const auto& s = j.at("sector");
      if (s.is_string()) {
        if (s.get<std::string>() != "auto") throw ConfigError("sector must be an integer or \"auto\"");
      } else {
        c.sector = s.get<int>();
      }
    }
    if (j.contains("pairs")) {
      const auto& p = j.at("pairs");
      if (p.is_string()) {
        if (p.get<std::string>() != "all") throw ConfigError("pairs must be a list or \"all\"");
      } else {
        std::vector<SitePair> pairs;
        for (const auto& entry : p) {
          const auto ij = entry.get<std::vector<int>>();
          if (ij.size() != 2) throw ConfigError("each pair needs exactly two sites");
          pairs.push_back({ij[0], ij[1]});
        }
        c.pairs = std::move(pairs);
      }
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("grid")) c.grid = j.at("grid").get<std::vector<double>>();
    if (j.contains("ensemble")) c.ensemble = j.at("ensemble").get<int>();
    if (j.contains("strict_degeneracy")) c.strict_degeneracy = j.at("strict_degeneracy").get<bool>();
    if (j.contains("tolerances") && j.at("tolerances").contains("degeneracy")) {
      c.degeneracy_tolerance = j.at("tolerances").at("degeneracy").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["j_xy"] = c.couplings.j_xy;
  j["j_z"] = c.couplings.j_z;
  j["sector"] = c.sector ? nlohmann::json(*c.sector) : nlohmann::json("auto");
  if (c.pairs) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const SitePair& p : *c.pairs) pairs.push_back({p.i, p.j});
    j["pairs"] = pairs;
  } else {
    j["pairs"] = "all";
  }
  j["seed"] = c.seed;
  j["grid"] = c.grid;
  j["ensemble"] = c.ensemble;
  j["strict_degeneracy"] = c.strict_degeneracy;
  j["tolerances"] = {{"degeneracy", c.degeneracy_tolerance}};
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

// ---------------------------------------------------------------------------
// measure / sweep

ReportRow make_row(const PairMeasure& m) {
  ReportRow r;
  r.i = m.pair.i;
  r.j = m.pair.j;
  r.nn = m.pair.nearest_neighbor();
  r.u_plus = m.spin.u_plus;
  r.u_minus = m.spin.u_minus;
  r.z = m.spin.z;
  r.x_plus = m.fermion.x_plus;
  r.x_minus = m.fermion.x_minus;
  r.z_f = m.fermion.z_f;
  r.concurrence = m.concurrence;
  r.mode_concurrence = m.mode_concurrence;
  r.c_minus_mc = m.concurrence - m.mode_concurrence;
  return r;
}

namespace {

struct PointResult {
  GroundStateReport ground;
  std::vector<ReportRow> rows;
};

PointResult measure_point(const CouplingSet& couplings, const ExperimentConfig& config, bool strict) {
  GroundStateOptions opts;
  opts.n_up = config.sector;
  opts.strict = strict;
  opts.tolerance = config.degeneracy_tolerance;
  PointResult out;
  out.ground = ground_state(spin_builder(), couplings, opts);

  GroundStateOptions fopts = opts;
  fopts.n_up = out.ground.sector.n_up;
  fopts.strict = false;
  const GroundStateReport fermion = ground_state(fermion_builder(), couplings, fopts);

  for (const PairMeasure& m : measure_pairs(out.ground.state, fermion.state, config.resolved_pairs())) {
    out.rows.push_back(make_row(m));
  }
  return out;
}

}  // namespace

MeasureResult cmd_measure(const ExperimentConfig& config) {
  config.validate();
  const bool strict = config.strict_degeneracy || !config.sector;
  PointResult p = measure_point(config.couplings, config, strict);
  return {std::move(p.ground), std::move(p.rows)};
}

std::vector<SweepRow> cmd_sweep(const ExperimentConfig& config, Execution exec) {
  config.validate();
  if (config.grid.empty()) throw ConfigError("sweep needs a non-empty grid");
  std::vector<PointResult> points(config.grid.size());
  std::vector<std::exception_ptr> errors(config.grid.size());
  const auto count = static_cast<std::ptrdiff_t>(config.grid.size());

#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (std::ptrdiff_t g = 0; g < count; ++g) {
    try {
      CouplingSet c = config.couplings;
      for (std::size_t b = 0; b < c.j_xy.size(); ++b) c.j_z[b] = config.grid[g] * c.j_xy[b];
      points[g] = measure_point(c, config, false);
    } catch (...) {
      errors[g] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SweepRow> out;
  for (std::size_t g = 0; g < points.size(); ++g) {
    for (const ReportRow& r : points[g].rows) out.push_back({config.grid[g], points[g].ground.degenerate, r});
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify

bool VerifySummary::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

nlohmann::json VerifySummary::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["draws"] = draws;
  j["prng"] = kEnsemblePrng;
  j["all_passed"] = all_passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const SuiteResult& s : suites) {
    arr.push_back({{"suite", s.suite}, {"cases", s.cases}, {"passed", s.passed}, {"worst_deviation", s.worst_deviation}});
  }
  j["suites"] = arr;
  return j;
}

namespace {

void record(SuiteResult& s, bool pass, double deviation) {
  ++s.cases;
  if (pass) ++s.passed;
  if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
  s.worst_deviation = std::max(s.worst_deviation, deviation);
}

void merge(SuiteResult& into, const SuiteResult& from) {
  into.cases += from.cases;
  into.passed += from.passed;
  into.worst_deviation = std::max(into.worst_deviation, from.worst_deviation);
}

constexpr double kRdmTol = 1e-10;
constexpr double kPairTol = 1e-10;
constexpr double kSpectrumTol = 1e-10;
constexpr double kOracleTol = 1e-12;

void audit_rdms(SuiteResult& rdm, const StateVector& psi) {
  for (const SitePair& p : all_pairs(psi.sites())) {
    for (Picture pic : {Picture::Spin, Picture::Fermion}) {
      const RdmCheck c = inspect_rdm(two_site_rdm(psi, p.i, p.j, pic));
      const double dev = std::max({c.trace_error, c.asymmetry, -c.min_eigenvalue, c.off_x_magnitude, 0.0});
      record(rdm, c.ok(kRdmTol), dev);
    }
  }
}

struct GroundSuites {
  SuiteResult spectrum{"spectrum_equality"};
  SuiteResult sign{"sign_rule"};
  SuiteResult identity{"xy_identity"};
  SuiteResult nn{"nn_equality"};
  SuiteResult non_nn{"non_nn_inequality"};
  SuiteResult rdm{"rdm_sanity"};
};

GroundSuites check_draw(const DrawOutcome& o) {
  GroundSuites g;
  const int n = o.couplings.sites();
  const SublatticePartition part = SublatticePartition::odd_sites(n);
  for (const SectorSolution& s : o.sectors) {
    record(g.spectrum, s.matrix_mismatch == 0.0 && s.spectrum_mismatch <= kSpectrumTol,
           std::max(s.matrix_mismatch, s.spectrum_mismatch));

    const SignRuleReport sr = check_marshall(s.spin, part, o.couplings);
    record(g.sign, sr.holds, sr.max_violation);

    for (const SitePair& p : all_pairs(n)) {
      const PairDecomposition d = pair_decompose(s.spin, p.i, p.j);
      const XyIdentityCheck xy = check_xy_identity(d);
      const ProductSignPattern pattern = product_sign_pattern(d);
      const bool sign_ok =
          pattern.constant && (pattern.sign == 0 || pattern.sign == predicted_product_sign(p.i, p.j, part, o.convention));
      record(g.identity, xy.holds && sign_ok, std::abs(xy.lhs - xy.rhs));

      const PairMeasure m = measure_pair(s.spin, s.fermion, p.i, p.j);
      if (p.nearest_neighbor()) {
        const double dev = std::abs(m.concurrence - m.mode_concurrence);
        record(g.nn, dev <= kPairTol, dev);
      } else {
        const double dev = std::max({0.0, m.mode_concurrence - m.concurrence,
                                     std::abs(m.fermion.z_f) - std::abs(m.spin.z)});
        record(g.non_nn, dev <= kPairTol, dev);
      }
    }
    audit_rdms(g.rdm, s.spin);
    audit_rdms(g.rdm, s.fermion);
  }
  return g;
}

SuiteResult jw_string_suite(std::uint64_t seed, int max_sites, int samples, SuiteResult& rdm) {
  SuiteResult suite{"jw_string"};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int n = 2; n <= max_sites; ++n) {
    for (int n_up = 0; n_up <= n; ++n_up) {
      auto basis = make_basis(n, n_up);
      for (int s = 0; s < samples; ++s) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(basis->size()));
        for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = gauss(rng);
        const StateVector psi = StateVector::normalized(basis, v);
        for (const SitePair& p : all_pairs(n)) {
          const std::complex<double> expect = jw_string_correlator(psi, p.i, p.j);
          const SpinPairCorrelations sc = spin_correlations(psi, p.i, p.j);
          const FermionPairCorrelations fc = fermion_correlations(psi, p.i, p.j);
          const double dev = std::max(std::abs(fc.z_f - expect.real()), std::abs(expect.imag()));
          const bool exact = sc.u_plus == fc.x_plus && sc.u_minus == fc.x_minus;
          record(suite, dev <= kOracleTol && exact, dev);
        }
        if (s == 0) audit_rdms(rdm, psi);
      }
    }
  }
  return suite;
}

SuiteResult analytic_suite(int max_sites, SuiteResult& rdm) {
  SuiteResult suite{"analytic_oracle"};
  for (int n = 2; n <= max_sites; ++n) {
    auto basis = make_basis(n, 2);
    const Eigensystem es = eigensystem(build_tb_fermion(CouplingSet::uniform(n, 1.0, 0.0), basis));
    for (int n1 = 1; n1 <= n; ++n1) {
      for (int n2 = n1 + 1; n2 <= n; ++n2) {
        const Momentum k(n, n1);
        const Momentum kp(n, n2);
        const StateVector built = two_particle_state(n, k, kp);
        // Project onto the exact eigenspace of energy e_k + e_k'.
        const double energy = k.energy() + kp.energy();
        Eigen::VectorXd projected = Eigen::VectorXd::Zero(built.amps.size());
        for (Eigen::Index c = 0; c < es.values.size(); ++c) {
          if (std::abs(es.values(c) - energy) <= 1e-8) {
            projected += es.vectors.col(c).dot(built.amps) * es.vectors.col(c);
          }
        }
        const double projection_error = (projected - built.amps).norm();
        record(suite, projection_error <= 1e-10, projection_error);
        if (!(projected.norm() > 0.5)) continue;
        const StateVector exact = StateVector::normalized(basis, projected);
        audit_rdms(rdm, exact);
        for (const SitePair& p : all_pairs(n)) {
          const double Z = two_particle_Z(n, k, kp, p.i, p.j);
          const double z = two_particle_z(n, k, kp, p.i, p.j);
          const double mid = two_particle_middle_sum(n, k, kp, p.i, p.j);
          const PairMeasure m = measure_pair(exact, p.i, p.j);
          const double dev = std::max({std::abs(Z - m.fermion.z_f), std::abs(z - m.spin.z),
                                       std::abs((Z - z) - 2.0 * mid)});
          record(suite, dev <= kOracleTol, dev);
        }
      }
    }
  }
  return suite;
}

SuiteResult case_study_suite(int max_sites) {
  SuiteResult suite{"case_studies"};
  for (int n = 4; n <= max_sites; ++n) {
    for (const SitePair& p : all_pairs(n)) {
      const CaseStudyReport low = case_study(n, CaseFamily::LowPair, p.i, p.j);
      record(suite, low.z_terms_positive && low.inequality_holds,
             std::max(0.0, low.mode_concurrence - low.concurrence));
      if ((p.i + p.j) % 2 == 1) {
        const CaseStudyReport edge = case_study(n, CaseFamily::EdgePair, p.i, p.j);
        const double dev = std::max({std::abs(edge.z), std::abs(edge.Z),
                                     std::abs(edge.concurrence - edge.mode_concurrence)});
        record(suite, dev <= kOracleTol, dev);
      }
    }
  }
  return suite;
}

}  // namespace

VerifySummary cmd_verify(const ExperimentConfig& config, const VerifyOptions& options) {
  EnsembleSpec spec;
  spec.seed = config.seed;
  spec.draws = config.ensemble;
  spec.degeneracy_tolerance = config.degeneracy_tolerance;
  const std::vector<DrawOutcome> outcomes = run_ensemble(spec, options.spin, options.fermion, options.exec);

  std::vector<GroundSuites> per_draw(outcomes.size());
  std::vector<std::exception_ptr> errors(outcomes.size());
  const auto count = static_cast<std::ptrdiff_t>(outcomes.size());
#pragma omp parallel for schedule(dynamic) if (options.exec == Execution::Parallel)
  for (std::ptrdiff_t d = 0; d < count; ++d) {
    try {
      per_draw[d] = check_draw(outcomes[d]);
    } catch (...) {
      errors[d] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  GroundSuites total;
  for (const GroundSuites& g : per_draw) {
    merge(total.spectrum, g.spectrum);
    merge(total.sign, g.sign);
    merge(total.identity, g.identity);
    merge(total.nn, g.nn);
    merge(total.non_nn, g.non_nn);
    merge(total.rdm, g.rdm);
  }

  VerifySummary summary;
  summary.seed = config.seed;
  summary.draws = config.ensemble;
  SuiteResult jw = jw_string_suite(config.seed, options.string_max_sites, options.string_samples, total.rdm);
  SuiteResult analytic = analytic_suite(options.analytic_max_sites, total.rdm);
  SuiteResult cases = case_study_suite(options.case_study_max_sites);
  summary.suites = {total.spectrum, total.sign, total.identity, total.nn, total.non_nn, jw, analytic, cases, total.rdm};
  return summary;
}

// ---------------------------------------------------------------------------
// analytic / spectrum

std::vector<AnalyticRow> cmd_analytic(int sites, int n1, int n2, const std::optional<std::vector<SitePair>>& pairs) {
  if (n1 == n2) throw DomainError("both fermions in mode " + std::to_string(n1) + " violates Pauli exclusion");
  const Momentum k(sites, n1);
  const Momentum kp(sites, n2);
  const StateVector psi = two_particle_state(sites, k, kp);
  std::vector<AnalyticRow> rows;
  for (const SitePair& p : pairs ? *pairs : all_pairs(sites)) {
    AnalyticRow r;
    r.sites = sites;
    r.n1 = n1;
    r.n2 = n2;
    r.i = p.i;
    r.j = p.j;
    r.nn = p.nearest_neighbor();
    r.Z = two_particle_Z(sites, k, kp, p.i, p.j);
    r.z = two_particle_z(sites, k, kp, p.i, p.j);
    r.middle_sum = two_particle_middle_sum(sites, k, kp, p.i, p.j);
    const PairMeasure m = measure_pair(psi, p.i, p.j);
    r.concurrence = m.concurrence;
    r.mode_concurrence = m.mode_concurrence;
    r.z_dominates = std::abs(r.z) - std::abs(r.Z) > 1e-12;
    rows.push_back(r);
  }
  return rows;
}

std::vector<SpectrumRow> cmd_spectrum(const ExperimentConfig& config) {
  config.validate();
  std::vector<int> sectors;
  if (config.sector) {
    sectors.push_back(*config.sector);
  } else {
    for (int k = 0; k <= config.n; ++k) sectors.push_back(k);
  }
  std::vector<SpectrumRow> rows;
  for (int n_up : sectors) {
    auto basis = make_basis(config.n, n_up);
    const Eigensystem es = eigensystem(build_xxz_spin(config.couplings, basis));
    const Eigensystem ef = eigensystem(build_tb_fermion(config.couplings, basis));
    for (Eigen::Index l = 0; l < es.values.size(); ++l) {
      rows.push_back({n_up, static_cast<int>(l), es.values(l), ef.values(l)});
    }
  }
  return rows;
}

}  // namespace jwent
