// jwent: concurrence vs. mode concurrence for XXZ chains and their
// Jordan-Wigner fermion counterparts.
//
// Exit codes: 0 success, 1 usage/config error, 2 degenerate ground state,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jwent/errors.hpp"
#include "jwent/experiment.hpp"
#include "jwent/report.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kDegenerate = 2, kVerifyFailed = 3 };

struct CommonFlags {
  std::string config_path;
  std::optional<int> n;
  std::string sector;
  std::string pairs;
  std::string grid;
  std::string j_xy;
  std::string j_z;
  std::optional<double> j_uniform;
  std::optional<double> jz_uniform;
  std::optional<std::uint64_t> seed;
  std::optional<int> ensemble;
  std::string format = "csv";
  std::string out_path;
  bool strict = false;
};

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw jwent::ConfigError("not a number: '" + tok + "'");
    }
  }
  return out;
}

// "1-3,2-4" or "all".
std::optional<std::vector<jwent::SitePair>> parse_pairs(const std::string& text) {
  if (text == "all") return std::nullopt;
  std::vector<jwent::SitePair> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw jwent::ConfigError("pair '" + tok + "' must look like i-j");
    try {
      out.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
    } catch (const std::exception&) {
      throw jwent::ConfigError("pair '" + tok + "' must look like i-j");
    }
  }
  return out;
}

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON experiment config");
  cmd->add_option("--n", f.n, "chain length");
  cmd->add_option("--sector", f.sector, "up-count n_up or 'auto'");
  cmd->add_option("--pairs", f.pairs, "site pairs as i-j,i-j or 'all'");
  cmd->add_option("--j-xy", f.j_xy, "transverse couplings, comma separated");
  cmd->add_option("--j-z", f.j_z, "Ising couplings, comma separated");
  cmd->add_option("--j", f.j_uniform, "uniform transverse coupling (needs --n)");
  cmd->add_option("--jz", f.jz_uniform, "uniform Ising coupling (needs --n)");
  cmd->add_option("--seed", f.seed, "seed for random ensembles");
  cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out_path, "write output here instead of stdout");
  cmd->add_flag("--strict-degeneracy", f.strict, "abort on any degenerate ground state");
}

// File first, then flags on top.
jwent::ExperimentConfig resolve(const CommonFlags& f) {
  nlohmann::json j = nlohmann::json::object();
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw jwent::ConfigError("cannot open config file " + f.config_path);
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw jwent::ConfigError("config " + f.config_path + ": " + e.what());
    }
  }
  if (f.n) j["n"] = *f.n;
  if (!f.j_xy.empty()) j["j_xy"] = parse_reals(f.j_xy);
  if (!f.j_z.empty()) j["j_z"] = parse_reals(f.j_z);
  const int n = j.contains("n") ? j["n"].get<int>() : 0;
  if (f.j_uniform || f.jz_uniform) {
    if (n < 2) throw jwent::ConfigError("--j/--jz need --n");
    const auto bonds = static_cast<std::size_t>(n - 1);
    if (f.j_uniform) j["j_xy"] = std::vector<double>(bonds, *f.j_uniform);
    if (f.jz_uniform) j["j_z"] = std::vector<double>(bonds, *f.jz_uniform);
  }
  if (!f.sector.empty()) {
    if (f.sector == "auto") {
      j["sector"] = "auto";
    } else {
      try {
        j["sector"] = std::stoi(f.sector);
      } catch (const std::exception&) {
        throw jwent::ConfigError("--sector must be an integer or 'auto'");
      }
    }
  }
  if (f.seed) j["seed"] = *f.seed;
  if (f.ensemble) j["ensemble"] = *f.ensemble;
  if (f.strict) j["strict_degeneracy"] = true;
  if (!j.contains("j_xy") && n >= 2) j["j_xy"] = std::vector<double>(static_cast<std::size_t>(n - 1), 1.0);

  jwent::ExperimentConfig c = jwent::config_from_json(j);
  if (!f.pairs.empty()) {
    c.pairs = parse_pairs(f.pairs);
    c.validate();
  }
  return c;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw jwent::ConfigError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

template <typename Rows>
void emit(const CommonFlags& f, const Rows& rows) {
  Output out(f.out_path);
  if (f.format == "json") {
    out.stream() << jwent::to_json(rows).dump(2) << '\n';
  } else {
    jwent::write_csv(out.stream(), rows);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence vs. mode concurrence in XXZ chains and their Jordan-Wigner fermion counterparts"};
  app.require_subcommand(1);

  CommonFlags measure_f, sweep_f, verify_f, spectrum_f, analytic_f;

  auto* measure = app.add_subcommand("measure", "ground-state C and MC for the requested site pairs");
  add_common(measure, measure_f);

  auto* sweep = app.add_subcommand("sweep", "measure over a grid of Jz/J ratios");
  add_common(sweep, sweep_f);
  sweep->add_option("--grid", sweep_f.grid, "Jz/J values, comma separated")->required();

  auto* verify = app.add_subcommand("verify", "run the invariant battery on a seeded random ensemble");
  add_common(verify, verify_f);
  verify->add_option("--ensemble", verify_f.ensemble, "number of coupling draws (default 100)");
  int analytic_max = 12;
  verify->add_option("--analytic-max-n", analytic_max, "largest chain for the closed-form oracle");
  int string_samples = 100;
  verify->add_option("--string-samples", string_samples, "random vectors per sector in the string check");

  auto* spectrum = app.add_subcommand("spectrum", "full spectra of the spin and fermion sector matrices");
  add_common(spectrum, spectrum_f);

  auto* analytic = app.add_subcommand("analytic", "closed-form two-fermion correlators on the uniform chain");
  int a_sites = 0, a_n1 = 0, a_n2 = 0;
  analytic->add_option("--n", a_sites, "chain length")->required();
  analytic->add_option("--n1", a_n1, "first mode index (k = n1 pi/(N+1))")->required();
  analytic->add_option("--n2", a_n2, "second mode index")->required();
  analytic->add_option("--pairs", analytic_f.pairs, "site pairs as i-j,i-j or 'all'");
  analytic->add_option("--format", analytic_f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  analytic->add_option("--out", analytic_f.out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*measure) {
      const jwent::ExperimentConfig c = resolve(measure_f);
      const jwent::MeasureResult r = jwent::cmd_measure(c);
      if (r.ground.degenerate) {
        std::cerr << "warning: ground state in sector n_up=" << r.ground.sector.n_up
                  << " is degenerate; amplitudes depend on the eigensolver\n";
      }
      emit(measure_f, r.rows);
    } else if (*sweep) {
      jwent::ExperimentConfig c = resolve(sweep_f);
      c.grid = parse_reals(sweep_f.grid);
      c.validate();
      emit(sweep_f, jwent::cmd_sweep(c));
    } else if (*verify) {
      if (verify_f.j_xy.empty() && !verify_f.n && verify_f.config_path.empty()) verify_f.n = 4;
      const jwent::ExperimentConfig c = resolve(verify_f);
      jwent::VerifyOptions opts;
      opts.analytic_max_sites = analytic_max;
      opts.string_samples = string_samples;
      const jwent::VerifySummary s = jwent::cmd_verify(c, opts);
      Output out(verify_f.out_path);
      out.stream() << s.to_json().dump(2) << '\n';
      return s.all_passed() ? kOk : kVerifyFailed;
    } else if (*spectrum) {
      emit(spectrum_f, jwent::cmd_spectrum(resolve(spectrum_f)));
    } else if (*analytic) {
      const auto pairs = analytic_f.pairs.empty() ? std::nullopt : parse_pairs(analytic_f.pairs);
      emit(analytic_f, jwent::cmd_analytic(a_sites, a_n1, a_n2, pairs));
    }
  } catch (const jwent::DegeneracyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
