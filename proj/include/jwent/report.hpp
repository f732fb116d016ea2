#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"

#include "jwent/experiment.hpp"

namespace jwent {

/// %.17g: round-trips every double.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_csv(std::ostream& os, const std::vector<AnalyticRow>& rows);
void write_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);

nlohmann::json to_json(const ReportRow& r);
nlohmann::json to_json(const std::vector<ReportRow>& rows);
nlohmann::json to_json(const std::vector<SweepRow>& rows);
nlohmann::json to_json(const std::vector<AnalyticRow>& rows);
nlohmann::json to_json(const std::vector<SpectrumRow>& rows);

}  // namespace jwent
