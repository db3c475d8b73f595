#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/presentation.hpp"

namespace qsuper {

enum class ContractionMode { LeadingOrder, Nilpotent };

const char* to_string(ContractionMode m);

struct ContractionScheme {
  /// Fresh even parameter; in nilpotent mode it is replaced by a truncated
  /// nilpotent of order `nil_order`.
  std::string eps = "eps";
  std::map<std::string, int> weights;
  /// Parameter substitutions written in terms of eps, e.g. q -> 1 + eps*v.
  std::map<Var, Scalar> param_subst;
  ContractionMode mode = ContractionMode::LeadingOrder;
  int nil_order = 8;
  /// Combine relations whose leading parts are dependent before taking
  /// leading orders (flat limit of the span). Off = per-relation only.
  bool saturate = true;
  /// Output renaming of generators, e.g. r -> rhat.
  std::map<std::string, std::string> rename;
  /// Output precedence after renaming; empty = renamed input precedence.
  std::vector<std::string> precedence;
};

struct ContractionReport {
  struct Entry {
    std::string relation;
    std::optional<int> valuation;
    std::string leading;
  };
  std::vector<Entry> relations;
  int saturation_steps = 0;
  std::vector<std::string> notes;
};

struct ContractionResult {
  Presentation presentation;
  ContractionReport report;
};

ContractionResult contract(const Presentation& p, const ContractionScheme& s,
                           std::string name = "");

/// Sets `param` to zero in every relation; zero relations are dropped.
Presentation parameter_limit(const Presentation& p, const std::string& param,
                             std::string name = "");

/// Compares exact Hilbert dimensions up to d_max.
CheckReport flatness_check(const Presentation& before, const Presentation& after, int d_max);

}  // namespace qsuper
