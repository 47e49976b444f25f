#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpab/graph.hpp"
#include "gpab/relations.hpp"

namespace gpab {

constexpr int kReportSchema = 1;

// JSON analysis of one graph: echo, domination data, SIL census, classification,
// generator counts and, optionally, the relation catalog summary.
nlohmann::json analysis_report(const LabeledGraph& g, const std::optional<RelationReport>& verification = {});

nlohmann::json verification_json(const RelationReport& r);

// Human-readable per-family table of a catalog run.
std::string format_verification_table(const RelationReport& r);

struct CensusOptions {
  int vertices = 4;
  double edge_prob = 0.5;
  std::vector<Order> orders = {Order::infinite()};
  int count = 10;
  uint64_t seed = 1;
};

struct CensusRow {
  uint64_t seed = 0;
  int index = 0;
  int vertices = 0;
  int edges = 0;
  std::string classification;
  std::string reason;  // empty unless a free subgroup was found
  std::optional<int> depth;
};

// Row i is drawn from its own stream derived from (seed, i), so rows are independent of count.
LabeledGraph census_graph(const CensusOptions& options, int index);
std::vector<CensusRow> run_census(const CensusOptions& options);
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace gpab
