#pragma once

#include <string>
#include <vector>

#include "gpab/autos.hpp"

namespace gpab {

// Aut: checked by exact composition. Out: checked up to an inner automorphism found at the bound.
enum class CheckLevel { Aut, Out };
enum class CheckOutcome { Pass, Fail, NotFoundUpTo };

const char* to_string(CheckLevel l);
const char* to_string(CheckOutcome o);

struct RelationCheck {
  std::string family;
  std::string configuration;
  CheckLevel level = CheckLevel::Aut;
  CheckOutcome outcome = CheckOutcome::Pass;
};

struct FamilySummary {
  std::string family;
  int passed = 0;
  int failed = 0;
  int not_found = 0;
  int out_level = 0;  // checks that needed an inner correction search
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_passed() const;
  // One entry per family, in catalog order, including families with no configurations.
  std::vector<FamilySummary> summary() const;
};

struct CatalogOptions {
  int bound = 4;
  // Test hook: reports the first instantiated check as failed.
  bool corrupt_first = false;
};

// Catalog family names in report order.
const std::vector<std::string>& relation_families();

RelationReport verify_relation_catalog(const LabeledGraph& g, const CatalogOptions& options = {});

}  // namespace gpab
