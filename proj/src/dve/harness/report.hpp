#pragma once

#include <string>

#include <json.hpp>

#include "dve/harness/sweep.hpp"

namespace dve {

// JSON records are fully deterministic (sorted keys, no timestamps); run
// metadata lives in a sidecar written by the CLI so byte-identical reruns
// stay byte-identical.
nlohmann::json params_to_json(const DiracParams& p);
nlohmann::json widom_to_json(const WidomResult& r);
nlohmann::json sweep_to_json(const SweepRecord& r);

std::string sweep_to_csv(const SweepRecord& r);  // "L,S" rows
std::string sweep_to_svg(const SweepRecord& r);  // S vs L^2 with the fitted curve

void write_text_file(const std::string& path, const std::string& content);

}  // namespace dve
