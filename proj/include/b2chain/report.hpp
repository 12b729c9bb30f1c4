#pragma once

#include "b2chain/bae.hpp"
#include "b2chain/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace b2chain::report {

using json = nlohmann::ordered_json;

json complex_to_json(cx z);
cx complex_from_json(const json& j);

// canonical digest of a run configuration; part of the report header
std::string config_hash(const ModelConfig& cfg, uint64_t seed);

json reports_to_json(const std::vector<verify::Report>& reports, const ModelConfig& cfg,
                     uint64_t seed);
std::vector<verify::Report> reports_from_json(const json& j);

json match_report_to_json(const bae::MatchReport& rep, const ModelConfig& cfg, uint64_t seed);

json spectrum_to_json(const std::vector<cx>& samples, const SpectrumBranches& br,
                      const ModelConfig& cfg, uint64_t seed);
std::string spectrum_to_csv(const std::vector<cx>& samples, const SpectrumBranches& br);

}  // namespace b2chain::report
