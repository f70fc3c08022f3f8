#pragma once

#include "isolp/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>

namespace isolp {

inline constexpr int kReportSchema = 1;

// {"schema", "verdict", "permutation" (1-based images, or null), "reason"
// (null unless not_isomorphic), "restarts_used", "wall_time_s", "seed",
// "mask": {"allowed", "sparsity_ratio"}, "per_restart": [...]}
nlohmann::json report_to_json(const SolveReport& report, std::uint64_t seed);

}  // namespace isolp
