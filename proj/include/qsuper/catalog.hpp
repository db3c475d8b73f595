#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsuper/contract.hpp"
#include "qsuper/derive.hpp"
#include "qsuper/morphisms.hpp"
#include "qsuper/presentation.hpp"
#include "qsuper/smatrix.hpp"

namespace qsuper {

enum class EntryKind { RMatrix, Presentation, BasisMap, Coaction, Contraction, Pipeline };

const char* to_string(EntryKind k);

/// Undeformed model of a presentation for dimension counts: each generator is
/// free, square-zero, or half of a Laurent pair (k, k^-1 with k k^-1 = 1).
struct ClassicalModel {
  std::vector<std::string> free;
  std::vector<std::string> square_zero;
  std::vector<std::pair<std::string, std::string>> laurent;
};

/// Dimensions from the generating function prod 1/(1-t) * prod (1+t) *
/// prod (1+t)/(1-t).
DimTable classical_dims(const ClassicalModel& m, int d_max);

struct RMatrixData {
  SMatrix r;
  Parities parities;
  ParameterSet params;
  Scalar q;
  std::vector<std::string> coordinates;
  std::vector<std::string> group_names;
  std::vector<std::string> space_precedence;
  std::vector<std::string> group_precedence;
  /// Convention under which the printed space/group relations are expected.
  SignConvention space_convention = SignConvention::Ungraded;
  SignConvention group_convention = SignConvention::Ungraded;
  std::string space_target;
  std::string group_target;
};

struct BasisMapData {
  std::string source;
  BasisMap map;
  /// Relations adjoined to the transformed presentation by hand.
  std::vector<Element> extra_relations;
  std::string target;
};

struct CoactionData {
  std::string group;
  std::string space;
  CoactionSpec spec;
};

struct ContractionData {
  std::string source;
  ContractionScheme scheme;
  std::string target;
};

struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::Presentation;
  std::string anchor;
  std::string description;
  std::vector<std::string> notes;
  std::optional<RMatrixData> rmatrix;
  std::optional<Presentation> presentation;
  std::optional<ClassicalModel> classical;
  std::optional<BasisMapData> basis_map;
  std::optional<CoactionData> coaction;
  std::optional<ContractionData> contraction;
};

/// Copy of the entry; UnknownId (with the nearest id) if absent.
CatalogEntry catalog_get(const std::string& id);
std::vector<std::string> catalog_ids();
Presentation catalog_presentation(const std::string& id);

/// The Cartesian basis change D = [[1,-i],[1,i]] of the plane (unnormalized).
SMatrix cartesian_d();

}  // namespace qsuper
