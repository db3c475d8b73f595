#pragma once

#include <string>
#include <vector>

#include "qsuper/catalog.hpp"

namespace qsuper {

// Catalog-level operations shared by the pipelines and the command line.

Presentation derive_space(const RMatrixData& d, SignConvention conv, std::string name = "");
Presentation derive_group(const RMatrixData& d, SignConvention conv, std::string name = "");
GeneratorMatrix group_matrix(const RMatrixData& d);

/// Transform followed by the entry's hand-adjoined relations.
Presentation apply_basis_map(const BasisMapData& d, std::string name = "");

/// Ideal equality with a catalog presentation; objects are labelled by `label`
/// and the catalog id.
CheckReport compare_with(const Presentation& derived, const std::string& label,
                         const std::string& target_id, int d);

struct PipelineResult {
  std::string name;
  std::vector<CheckReport> reports;
  Verdict verdict = Verdict::Pass;
};

std::vector<std::string> pipeline_names();

/// Runs a shipped pipeline; "all" runs every other one in order.
PipelineResult run_pipeline(const std::string& name);

}  // namespace qsuper
