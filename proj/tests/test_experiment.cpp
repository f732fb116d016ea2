#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "jwent/errors.hpp"
#include "jwent/experiment.hpp"
#include "jwent/report.hpp"

using namespace jwent;
using nlohmann::json;

namespace {

ExperimentConfig five_site_config() {
  return config_from_json(json::parse(R"({"j_xy": [1, 2, 2, 1], "sector": 3, "pairs": [[1, 3], [1, 2]]})"));
}

// Fermion builder with the hopping string counted one site too far: the bond
// (b, b+1) hop also picks up the occupation of site b+2.
ModelBuilder next_site_string_builder() {
  return [](const CouplingSet& c, const BasisPtr& basis) {
    SectorMatrix m = build_tb_fermion(c, basis);
    const int n = basis->sites();
    for (Eigen::Index col = 0; col < m.dim(); ++col) {
      const Bits s = (*basis)[static_cast<std::size_t>(col)].bits;
      for (int b = 1; b + 2 <= n; ++b) {
        const Bits pair = site_bit(b) | site_bit(b + 1);
        if (std::popcount(s & pair) != 1 || !(s & site_bit(b + 2))) continue;
        const auto row = static_cast<Eigen::Index>(basis->index_of({s ^ pair}));
        m.entries(row, col) = -m.entries(row, col);
      }
    }
    return m;
  };
}

const SuiteResult& suite(const VerifySummary& s, const std::string& name) {
  for (const auto& r : s.suites)
    if (r.suite == name) return r;
  throw std::runtime_error("no suite " + name);
}

VerifyOptions quick_options() {
  VerifyOptions o;
  o.analytic_max_sites = 8;
  o.string_samples = 10;
  o.string_max_sites = 6;
  o.case_study_max_sites = 10;
  return o;
}

}  // namespace

TEST(Config, ParsesAndDerivesLength) {
  const auto c = five_site_config();
  EXPECT_EQ(c.n, 5);
  EXPECT_EQ(c.couplings.j_z, std::vector<double>(4, 0.0));
  ASSERT_TRUE(c.sector.has_value());
  EXPECT_EQ(*c.sector, 3);
  EXPECT_EQ(c.resolved_pairs(), (std::vector<SitePair>{{1, 3}, {1, 2}}));
  EXPECT_EQ(c.seed, 42u);
}

TEST(Config, AutoAndAll) {
  const auto c = config_from_json(json::parse(R"({"n": 4, "j_xy": [1, 1, 1], "sector": "auto", "pairs": "all"})"));
  EXPECT_FALSE(c.sector.has_value());
  EXPECT_EQ(c.resolved_pairs().size(), 6u);
}

TEST(Config, RoundTrip) {
  auto c = five_site_config();
  c.grid = {0.0, 0.5};
  c.seed = 7;
  c.strict_degeneracy = true;
  const auto back = config_from_json(config_to_json(c));
  EXPECT_EQ(back.n, c.n);
  EXPECT_EQ(back.couplings.j_xy, c.couplings.j_xy);
  EXPECT_EQ(back.couplings.j_z, c.couplings.j_z);
  EXPECT_EQ(back.sector, c.sector);
  EXPECT_EQ(back.pairs, c.pairs);
  EXPECT_EQ(back.grid, c.grid);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(back.strict_degeneracy, c.strict_degeneracy);
  EXPECT_EQ(config_to_json(back), config_to_json(c));
}

TEST(Config, Rejections) {
  EXPECT_THROW(config_from_json(json::parse(R"({"n": 4})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"n": 4, "j_xy": [1, 1]})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"j_xy": [1, 1], "j_z": [1]})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"j_xy": [1, 1], "sector": 4})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"j_xy": [1, 1], "sector": "any"})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"j_xy": [1, 1], "pairs": [[2, 1]]})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"j_xy": [1, 1], "pairs": [[1, 2, 3]]})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"j_xy": [1, 1], "grid": [0.5, 0.5]})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"({"j_xy": "1,1"})")), ConfigError);
  EXPECT_THROW(config_from_json(json::parse(R"([1, 2])")), ConfigError);
  std::vector<double> long_chain(16, 1.0);
  EXPECT_THROW(config_from_json(json{{"j_xy", long_chain}}), ConfigError);
}

TEST(Config, LoadFromFile) {
  const std::string path = ::testing::TempDir() + "jwent_config.json";
  {
    std::ofstream out(path);
    out << R"({"j_xy": [1, 2, 2, 1], "sector": 3, "seed": 5})";
  }
  const auto c = load_config(path);
  EXPECT_EQ(c.n, 5);
  EXPECT_EQ(c.seed, 5u);
  EXPECT_THROW(load_config(path + ".missing"), ConfigError);
}

TEST(Measure, FiveSiteRows) {
  const auto r = cmd_measure(five_site_config());
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].i, 1);
  EXPECT_EQ(r.rows[0].j, 3);
  EXPECT_FALSE(r.rows[0].nn);
  EXPECT_NEAR(r.rows[0].concurrence, (4.0 - std::sqrt(14.0)) / 9.0, 1e-10);
  EXPECT_NEAR(r.rows[0].mode_concurrence, 0.0, 1e-10);
  EXPECT_NEAR(r.rows[0].c_minus_mc, r.rows[0].concurrence - r.rows[0].mode_concurrence, 1e-15);
  EXPECT_TRUE(r.rows[1].nn);
  EXPECT_NEAR(r.rows[1].concurrence, r.rows[1].mode_concurrence, 1e-10);
  EXPECT_NEAR(r.ground.energy, -4.0, 1e-12);
}

TEST(Measure, AutoTieAborts) {
  auto c = config_from_json(json::parse(R"({"j_xy": [0, 0], "sector": "auto"})"));
  EXPECT_THROW(cmd_measure(c), DegeneracyError);
}

TEST(Measure, ExplicitSectorDegeneracyWarnsUnlessStrict) {
  auto c = config_from_json(json::parse(R"({"j_xy": [1, 0, 1], "sector": 1})"));
  const auto r = cmd_measure(c);
  EXPECT_TRUE(r.ground.degenerate);
  c.strict_degeneracy = true;
  EXPECT_THROW(cmd_measure(c), DegeneracyError);
}

TEST(Sweep, SinglePointMatchesMeasure) {
  auto c = config_from_json(json::parse(R"({"j_xy": [1, 1.5, 0.7, 1.2], "sector": 2})"));
  c.grid = {0.8};
  const auto sweep = cmd_sweep(c);
  auto m = c;
  for (std::size_t b = 0; b < m.couplings.j_z.size(); ++b) m.couplings.j_z[b] = 0.8 * m.couplings.j_xy[b];
  const auto direct = cmd_measure(m);
  ASSERT_EQ(sweep.size(), direct.rows.size());
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    EXPECT_EQ(sweep[k].grid_value, 0.8);
    EXPECT_EQ(sweep[k].row.i, direct.rows[k].i);
    EXPECT_EQ(sweep[k].row.concurrence, direct.rows[k].concurrence);
    EXPECT_EQ(sweep[k].row.mode_concurrence, direct.rows[k].mode_concurrence);
  }
}

TEST(Sweep, RowsInGridOrder) {
  auto c = config_from_json(json::parse(R"({"j_xy": [1, 1, 1], "sector": 2, "pairs": [[1, 3]]})"));
  c.grid = {2.0, 1.0, 0.0, -1.0};
  const auto rows = cmd_sweep(c);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(rows[k].grid_value, c.grid[k]);
}

TEST(Verify, AllSuitesPassOnSmallEnsemble) {
  auto c = config_from_json(json::parse(R"({"j_xy": [1, 1, 1], "ensemble": 20, "seed": 3})"));
  const auto s = cmd_verify(c, quick_options());
  EXPECT_TRUE(s.all_passed()) << s.to_json().dump(2);
  EXPECT_EQ(s.suites.size(), 9u);
  for (const auto& r : s.suites) EXPECT_GT(r.cases, 0) << r.suite;
  const json j = s.to_json();
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(j.contains("suites"));
}

TEST(Verify, DeterministicForSeed) {
  auto c = config_from_json(json::parse(R"({"j_xy": [1, 1, 1], "ensemble": 10, "seed": 11})"));
  EXPECT_EQ(cmd_verify(c, quick_options()).to_json(), cmd_verify(c, quick_options()).to_json());
}

TEST(Verify, MisplacedStringBreaksNonNeighbourInequality) {
  auto c = config_from_json(json::parse(R"({"j_xy": [1, 1, 1], "ensemble": 30})"));
  auto opts = quick_options();
  opts.fermion = next_site_string_builder();
  const auto s = cmd_verify(c, opts);
  EXPECT_FALSE(s.all_passed());
  EXPECT_FALSE(suite(s, "non_nn_inequality").ok());
  EXPECT_FALSE(suite(s, "spectrum_equality").ok());
  EXPECT_GT(suite(s, "non_nn_inequality").worst_deviation, 1e-6);
}

TEST(AnalyticTable, RowsForAllPairs) {
  const auto rows = cmd_analytic(8, 1, 2, std::nullopt);
  EXPECT_EQ(rows.size(), 28u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.Z - r.z, 2 * r.middle_sum, 1e-12);
    EXPECT_EQ(r.nn, r.j == r.i + 1);
    EXPECT_GE(r.concurrence, r.mode_concurrence - 1e-12);
  }
  const auto one = cmd_analytic(8, 1, 2, std::vector<SitePair>{{2, 5}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].z_dominates);
  EXPECT_THROW(cmd_analytic(8, 2, 2, std::nullopt), DomainError);
}

TEST(SpectrumTable, BothPicturesAgree) {
  auto c = config_from_json(json::parse(R"({"j_xy": [1, -0.4, 0.9], "j_z": [0.3, 1.1, -0.7]})"));
  const auto rows = cmd_spectrum(c);
  EXPECT_EQ(rows.size(), 16u);
  for (const auto& r : rows) EXPECT_NEAR(r.spin_energy, r.fermion_energy, 1e-12);
}

TEST(Report, CsvHeaderAndPrecision) {
  const auto r = cmd_measure(five_site_config());
  std::ostringstream os;
  write_csv(os, r.rows);
  std::istringstream in(os.str());
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "i,j,nn_flag,u_plus,u_minus,z,x_plus,x_minus,z_f,concurrence,mode_concurrence,c_minus_mc");
  std::vector<std::string> cells;
  std::stringstream ss(first);
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  ASSERT_EQ(cells.size(), 12u);
  EXPECT_EQ(std::stod(cells[9]), r.rows[0].concurrence);
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
}

TEST(Report, JsonRows) {
  const auto r = cmd_measure(five_site_config());
  const json j = to_json(r.rows);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["i"], 1);
  EXPECT_EQ(j[0]["j"], 3);
  EXPECT_EQ(j[0]["concurrence"].get<double>(), r.rows[0].concurrence);
}
