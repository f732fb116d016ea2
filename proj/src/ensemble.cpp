#include "jwent/ensemble.hpp"

#include <limits>
#include <random>

#include "jwent/errors.hpp"

namespace jwent {

namespace {

constexpr int kMaxRedraws = 64;

}  // namespace

CouplingSet draw_couplings(std::uint64_t seed, int index, int attempt, const EnsembleSpec& spec) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> sites(spec.min_sites, spec.max_sites);
  std::bernoulli_distribution negative(0.5);
  std::uniform_real_distribution<double> magnitude(spec.j_min, spec.j_max);
  std::uniform_real_distribution<double> ising(-spec.jz_max, spec.jz_max);

  const int n = sites(rng);
  const double sign = negative(rng) ? -1.0 : 1.0;
  CouplingSet c;
  for (int b = 0; b < n - 1; ++b) c.j_xy.push_back(sign * magnitude(rng));
  for (int b = 0; b < n - 1; ++b) c.j_z.push_back(ising(rng));
  return c;
}

std::vector<SectorSolution> solve_sectors(const CouplingSet& couplings, const ModelBuilder& spin,
                                          const ModelBuilder& fermion) {
  const int n = couplings.sites();
  std::vector<SectorSolution> out;
  for (int n_up = 1; n_up < n; ++n_up) {
    auto basis = make_basis(n, n_up);
    const SectorMatrix hs = spin(couplings, basis);
    const SectorMatrix hf = fermion(couplings, basis);
    const Eigensystem es = eigensystem(hs);
    const Eigensystem ef = eigensystem(hf);

    SectorSolution s;
    s.n_up = n_up;
    s.spin = {basis, es.vectors.col(0)};
    s.fermion = {basis, ef.vectors.col(0)};
    s.energy = es.values(0);
    s.gap = es.values.size() > 1 ? es.values(1) - es.values(0) : std::numeric_limits<double>::infinity();
    s.matrix_mismatch = (hs.entries - hf.entries).cwiseAbs().maxCoeff();
    s.spectrum_mismatch = (es.values - ef.values).cwiseAbs().maxCoeff();
    s.residual = residual_norm(hs, es.values(0), es.vectors.col(0));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<DrawOutcome> run_ensemble(const EnsembleSpec& spec, const ModelBuilder& spin, const ModelBuilder& fermion,
                                      Execution exec) {
  if (spec.draws < 0 || spec.min_sites < 2 || spec.max_sites < spec.min_sites || spec.max_sites > kMaxDenseSites) {
    throw DomainError("invalid ensemble specification");
  }
  std::vector<DrawOutcome> out(static_cast<std::size_t>(spec.draws));
  const int draws = spec.draws;
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (int d = 0; d < draws; ++d) {
    DrawOutcome& o = out[static_cast<std::size_t>(d)];
    o.index = d;
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
      o.couplings = draw_couplings(spec.seed, d, attempt, spec);
      o.sectors = solve_sectors(o.couplings, spin, fermion);
      o.redraws = attempt;
      bool degenerate = false;
      for (const SectorSolution& s : o.sectors) degenerate = degenerate || s.gap <= spec.degeneracy_tolerance;
      if (!degenerate) break;
    }
    o.convention = o.couplings.j_xy.front() > 0.0 ? SignConvention::Antiferro : SignConvention::Ferro;
  }
  return out;
}

}  // namespace jwent
