#include "isolp/report_json.hpp"

#include <string>

namespace isolp {

nlohmann::json report_to_json(const SolveReport& report, std::uint64_t seed) {
  using nlohmann::json;
  json j;
  j["schema"] = kReportSchema;
  j["verdict"] = std::string(to_string(report.verdict));
  if (report.permutation) {
    json perm = json::array();
    for (int v : report.permutation->map()) perm.push_back(v + 1);
    j["permutation"] = std::move(perm);
  } else {
    j["permutation"] = nullptr;
  }
  if (report.verdict == Verdict::NotIsomorphic) {
    j["reason"] = std::string(to_string(report.reason));
  } else {
    j["reason"] = nullptr;
  }
  j["restarts_used"] = report.admm_calls();
  j["success_fraction"] = report.success_fraction();
  j["wall_time_s"] = report.wall_time_s;
  j["setup_time_s"] = report.setup_time_s;
  j["seed"] = seed;
  j["mask"] = {{"allowed", report.mask_allowed}, {"sparsity_ratio", report.sparsity_ratio}};
  json restarts = json::array();
  for (const RestartRecord& r : report.restarts) {
    restarts.push_back({{"index", r.index},
                        {"seed", r.seed},
                        {"converged", r.converged},
                        {"iters", r.iters},
                        {"verified", r.verified},
                        {"distance", r.distance},
                        {"wall_time_s", r.wall_time_s}});
  }
  j["per_restart"] = std::move(restarts);
  return j;
}

}  // namespace isolp
