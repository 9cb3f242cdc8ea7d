#pragma once

// JSON result documents written by `rainbow decompose` and read by
// `rainbow verify`. Trees are lists of indices into the .rcg edge order.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rainbow/decomposition.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

inline constexpr const char* kToolVersion = "0.3.0";

inline nlohmann::json params_to_json(const PipelineParams& p) {
  nlohmann::json j;
  j["mode"] = to_string(p.mode);
  j["alpha"] = p.alpha.str();
  j["beta"] = p.beta.str();
  j["ell"] = p.ell ? nlohmann::json(*p.ell) : nlohmann::json(nullptr);
  j["limit"] = p.limit ? nlohmann::json(*p.limit) : nlohmann::json(nullptr);
  j["degree_slack"] = p.degree_slack.str();
  j["max_deg_frac"] = p.max_deg_frac.str();
  j["high_deg_frac"] = p.high_deg_frac.str();
  j["forest_degree_slack"] = p.forest_degree_slack.str();
  j["ell_divisor"] = p.ell_divisor;
  j["rich_gap"] = p.rich_gap;
  j["rich_ell_divisor"] = p.rich_ell_divisor;
  j["theorem_divisor"] = p.theorem_divisor;
  j["matching_rich_ratio"] = p.reservation.rich_ratio.str();
  j["matching_degree_ratio"] = p.reservation.degree_ratio.str();
  j["seed"] = p.seed;
  return j;
}

inline nlohmann::json verification_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["ok"] = r.ok();
  j["tree_count"] = r.tree_count;
  j["pairwise_disjoint"] = r.pairwise_disjoint;
  j["first_failure"] = r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr);
  nlohmann::json trees = nlohmann::json::array();
  for (const TreeCheck& t : r.trees) {
    trees.push_back({{"spanning", t.spanning}, {"rainbow", t.rainbow}, {"acyclic", t.acyclic}, {"connected", t.connected}});
  }
  j["trees"] = std::move(trees);
  return j;
}

struct ResultDocumentOptions {
  std::string input;  // generator descriptor or file path
  bool include_timings = false;
};

/// Full result document. Without timings it is a pure function of the input
/// graph and params, so reruns are byte-identical.
inline nlohmann::json result_to_json(const ColouredGraph& g, const DecompositionResult& res, const VerificationReport& report,
                                     const ResultDocumentOptions& opts = {}) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["mode"] = to_string(res.params.mode);
  j["branch"] = to_string(res.branch);
  j["branch_fallback"] = res.branch_fallback;
  j["params"] = params_to_json(res.params);
  j["seed"] = res.params.seed;
  nlohmann::json trees = nlohmann::json::array();
  for (const RainbowTree& t : res.trees) trees.push_back(t.edges);
  j["trees"] = std::move(trees);

  nlohmann::json stats;
  stats["tree_count"] = res.trees.size();
  stats["ell"] = res.stats.ell;
  stats["reserved_matching_size"] = res.stats.reserved_matching_size;
  stats["degenerate"] = res.stats.degenerate;
  stats["failure"] = res.stats.failure ? nlohmann::json(*res.stats.failure) : nlohmann::json(nullptr);
  stats["notes"] = res.stats.notes;
  if (opts.include_timings) {
    nlohmann::json timings = nlohmann::json::array();
    for (const StageTiming& t : res.stats.timings) timings.push_back({{"stage", t.stage}, {"millis", t.millis}});
    stats["timings"] = std::move(timings);
  }
  j["stats"] = std::move(stats);
  j["input"] = opts.input;
  j["version"] = kToolVersion;
  j["verification"] = verification_to_json(report);
  return j;
}

struct ResultTrees {
  int n = 0;
  std::vector<std::vector<EdgeIndex>> trees;
};

/// Extracts n and the tree lists; throws std::invalid_argument on schema errors.
inline ResultTrees trees_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("result is not a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("result lacks integer 'n'");
  if (!j.contains("trees") || !j["trees"].is_array()) throw std::invalid_argument("result lacks array 'trees'");
  ResultTrees out;
  out.n = j["n"].get<int>();
  for (const auto& t : j["trees"]) {
    if (!t.is_array()) throw std::invalid_argument("tree entry is not an array");
    std::vector<EdgeIndex> edges;
    for (const auto& e : t) {
      if (!e.is_number_integer()) throw std::invalid_argument("edge index is not an integer");
      const auto v = e.get<std::int64_t>();
      if (v < INT32_MIN || v > INT32_MAX) throw std::invalid_argument("edge index out of range");
      edges.push_back(static_cast<EdgeIndex>(v));
    }
    out.trees.push_back(std::move(edges));
  }
  return out;
}

}  // namespace rainbow
