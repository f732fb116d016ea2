#include "jwent/report.hpp"

#include <cstdio>

namespace jwent {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

constexpr const char* kRowHeader =
    "i,j,nn_flag,u_plus,u_minus,z,x_plus,x_minus,z_f,concurrence,mode_concurrence,c_minus_mc";

void write_row_fields(std::ostream& os, const ReportRow& r) {
  os << r.i << ',' << r.j << ',' << (r.nn ? 1 : 0);
  for (double v : {r.u_plus, r.u_minus, r.z, r.x_plus, r.x_minus, r.z_f, r.concurrence, r.mode_concurrence,
                   r.c_minus_mc}) {
    os << ',' << format_number(v);
  }
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << kRowHeader << '\n';
  for (const ReportRow& r : rows) {
    write_row_fields(os, r);
    os << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "grid," << kRowHeader << ",degenerate\n";
  for (const SweepRow& s : rows) {
    os << format_number(s.grid_value) << ',';
    write_row_fields(os, s.row);
    os << ',' << (s.degenerate ? 1 : 0) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<AnalyticRow>& rows) {
  os << "n_sites,n1,n2,i,j,nn_flag,Z,z,middle_sum,concurrence,mode_concurrence,z_dominates\n";
  for (const AnalyticRow& r : rows) {
    os << r.sites << ',' << r.n1 << ',' << r.n2 << ',' << r.i << ',' << r.j << ',' << (r.nn ? 1 : 0);
    for (double v : {r.Z, r.z, r.middle_sum, r.concurrence, r.mode_concurrence}) os << ',' << format_number(v);
    os << ',' << (r.z_dominates ? 1 : 0) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
  os << "n_up,level,spin_energy,fermion_energy\n";
  for (const SpectrumRow& r : rows) {
    os << r.n_up << ',' << r.level << ',' << format_number(r.spin_energy) << ',' << format_number(r.fermion_energy)
       << '\n';
  }
}

nlohmann::json to_json(const ReportRow& r) {
  return {{"i", r.i},
          {"j", r.j},
          {"nn_flag", r.nn},
          {"u_plus", r.u_plus},
          {"u_minus", r.u_minus},
          {"z", r.z},
          {"x_plus", r.x_plus},
          {"x_minus", r.x_minus},
          {"z_f", r.z_f},
          {"concurrence", r.concurrence},
          {"mode_concurrence", r.mode_concurrence},
          {"c_minus_mc", r.c_minus_mc}};
}

nlohmann::json to_json(const std::vector<ReportRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ReportRow& r : rows) arr.push_back(to_json(r));
  return arr;
}

nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& s : rows) {
    nlohmann::json o = to_json(s.row);
    o["grid"] = s.grid_value;
    o["degenerate"] = s.degenerate;
    arr.push_back(std::move(o));
  }
  return arr;
}

nlohmann::json to_json(const std::vector<AnalyticRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const AnalyticRow& r : rows) {
    arr.push_back({{"n_sites", r.sites},
                   {"n1", r.n1},
                   {"n2", r.n2},
                   {"i", r.i},
                   {"j", r.j},
                   {"nn_flag", r.nn},
                   {"Z", r.Z},
                   {"z", r.z},
                   {"middle_sum", r.middle_sum},
                   {"concurrence", r.concurrence},
                   {"mode_concurrence", r.mode_concurrence},
                   {"z_dominates", r.z_dominates}});
  }
  return arr;
}

nlohmann::json to_json(const std::vector<SpectrumRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SpectrumRow& r : rows) {
    arr.push_back({{"n_up", r.n_up}, {"level", r.level}, {"spin_energy", r.spin_energy},
                   {"fermion_energy", r.fermion_energy}});
  }
  return arr;
}

}  // namespace jwent
