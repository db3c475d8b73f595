#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsuper/derive.hpp"
#include "qsuper/presentation.hpp"
#include "qsuper/smatrix.hpp"

namespace qsuper {

/// Change of generators: every source generator is sent to an element of
/// degree <= 1 in the target algebra, then parameters are substituted.
struct BasisMap {
  std::map<std::string, Element> images;
  std::map<Var, Scalar> param_subst;
  AlphabetPtr target;
  /// Precedence on the target generators (high to low); empty = default.
  std::vector<std::string> target_precedence;
  /// Parameters of the target algebra; empty = the source's.
  ParameterSet target_params;
  /// Skip the invertibility check.
  bool projection = false;
};

/// Body of the degree-1 coefficient matrix (rows: source, cols: target).
SMatrix linear_part(const BasisMap& m, const Alphabet& source);

Presentation transform_presentation(const Presentation& p, const BasisMap& m,
                                    std::string name = "");

/// Substitutes T = D U D^-1 entrywise; `u` names the new generators.
Presentation induced_group_transform(const Presentation& g, const GeneratorMatrix& t,
                                     const SMatrix& d, const GeneratorMatrix& u,
                                     std::vector<std::string> precedence = {},
                                     std::string name = "");

enum class CrossSign { Koszul, Plain };

const char* to_string(CrossSign c);

/// Generators of g then s (s renamed on collision); s's generators rank above
/// g's; adds x t = (+-) t x for every space x and group t.
Presentation tensor_product_algebra(const Presentation& g, const Presentation& s,
                                    CrossSign cross = CrossSign::Koszul);

struct CoactionSpec {
  Presentation group;
  Presentation space;
  /// matrix[i][k] is a group element; delta(x_i) = sum_k matrix[i][k] (x) x_k.
  std::vector<std::vector<Element>> matrix;
  CrossSign cross = CrossSign::Koszul;
  std::vector<std::string> notes;
};

/// Maps each space relation through delta and reduces it in the tensor
/// product algebra. `used_group_relations`, if given, receives the indices of
/// group relations applied during the reductions.
CheckReport coaction_check(const CoactionSpec& spec,
                           std::vector<int>* used_group_relations = nullptr);

}  // namespace qsuper
