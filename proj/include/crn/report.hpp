#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "crn/analysis.hpp"
#include "crn/decomposition.hpp"
#include "crn/errors.hpp"
#include "crn/network.hpp"

namespace crn {

// Bad command-line input that refers to the network (unknown labels, a
// malformed partition, missing rates).
class UsageError : public CrnError {
 public:
  using CrnError::CrnError;
};

inline constexpr std::string_view kReportSchemaVersion = "1";

struct RelationReport {
  std::string reaction;
  std::vector<std::string> coefficients;  // exact rationals, in basis order

  friend bool operator==(const RelationReport&, const RelationReport&) = default;
};

struct GraphReport {
  std::vector<std::string> basis;
  std::vector<RelationReport> relations;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> components;

  friend bool operator==(const GraphReport&, const GraphReport&) = default;
};

struct PartReport {
  std::vector<std::string> reactions;
  NetworkNumbers numbers;
  DeficiencyVerdict deficiency_zero;
  DeficiencyVerdict deficiency_one;

  friend bool operator==(const PartReport&, const PartReport&) = default;
};

struct IndependenceSummary {
  std::size_t network_rank = 0;
  std::vector<std::size_t> part_ranks;
  bool independent = false;
  std::size_t incidence_network_rank = 0;
  std::vector<std::size_t> incidence_part_ranks;
  bool incidence_independent = false;

  friend bool operator==(const IndependenceSummary&, const IndependenceSummary&) = default;
};

// Everything `crn analyze` reports about one network.
struct AnalysisReport {
  std::string schema_version{kReportSchemaVersion};
  NetworkNumbers network;
  DeficiencyVerdict deficiency_zero;
  DeficiencyVerdict deficiency_one;
  GraphReport coordinate_graph;
  bool trivial_only = true;          // coordinate graph is connected
  std::string partition_source;      // "coordinate_graph", "user" or "none"
  std::vector<PartReport> parts;     // empty when partition_source is "none"
  std::optional<IndependenceSummary> independence;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  std::optional<BasisSelection> basis;      // greedy basis when absent
  std::optional<ReactionPartition> parts;   // coordinate-graph parts when absent
};

AnalysisReport analyze(const Network& net, const AnalyzeOptions& options = {});

GraphReport describe_graph(const Network& net, const CoordinateGraph& g);
IndependenceSummary summarize(const IndependenceReport& rep);

nlohmann::json to_json(const NetworkNumbers& nn);
nlohmann::json to_json(const DeficiencyVerdict& v);
nlohmann::json to_json(const IndependenceSummary& s);
nlohmann::json to_json(const GraphReport& g);
nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

std::string render_text(const AnalysisReport& r);
// Network-numbers table with one column per network.
std::string render_numbers_table(const std::vector<std::string>& headers,
                                 const std::vector<NetworkNumbers>& columns);
std::string render_verdict(const DeficiencyVerdict& v);
std::string render_independence(const IndependenceSummary& s);
// "R11 = -R1 - R2 - R4 - R8"
std::string render_relation(const RelationReport& rel, const std::vector<std::string>& basis);

// "R1,R2|R3,R4": '|' between parts, ',' within. Every reaction label must
// appear exactly once. Throws UsageError.
ReactionPartition parse_partition(const Network& net, std::string_view spec);
// Comma-separated labels, returned as ascending reaction indices.
std::vector<std::size_t> parse_label_list(const Network& net, std::string_view spec);
std::vector<std::string> labels_of(const Network& net, const std::vector<std::size_t>& reactions);

}  // namespace crn
