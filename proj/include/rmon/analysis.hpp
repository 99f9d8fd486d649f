// One-stop structural report for a monoid: validation, R-classes, the ideal
// order, the chain forest, and the Ramsey verdict, with text and JSON views.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rmon/order.hpp"

namespace rmon {

struct AnalysisReport {
  Monoid monoid;
  ValidationReport validation;
  std::vector<std::vector<Elem>> classes;
  bool r_trivial = false;
  bool almost_r_trivial = false;
  std::optional<XPoset> x;  // absent when validation fails
  bool x_linear = false;
  std::optional<StrongnessWitness> x_strong_witness;  // expected empty
  std::optional<ChainForest> y;  // absent when the point-count guard trips
  std::string y_note;
  EpimorphismCheck pi;  // meaningful only when y is present
  std::vector<int> maximal;
  int default_chain = -1;
  std::optional<RamseyResult> ramsey;
  double ms_total = 0;
};

AnalysisReport analyze(const Monoid& m);

std::string render_text(const AnalysisReport& rep);
nlohmann::json to_json(const AnalysisReport& rep);

}  // namespace rmon
