#pragma once

#include <json.hpp>
#include <string>

#include "qsuper/catalog.hpp"

namespace qsuper {

using json = nlohmann::json;

json load_json_file(const std::string& path);

json to_json(const ParameterSet& p);
ParameterSet params_from_json(const json& j);

json to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json to_json(const CheckReport& r);
json to_json(const DimTable& d);

struct RMatrixFile {
  SMatrix r;
  ParameterSet params;
  Parities parities;
};

/// {"dim": n, "entries": [[expr,...],...]} plus optional "parameters"
/// (default: even q) and "parities" (list of "even"/"odd").
RMatrixFile rmatrix_from_json(const json& j);
json rmatrix_to_json(const SMatrix& r, const ParameterSet& params, const Parities& parities);

/// {"images": {gen: expr}, "parameter_subst": {param: expr}} with optional
/// target "generators", "precedence", and "parameters". Unknown identifiers
/// in images and substitutions are declared as even parameters.
BasisMap basismap_from_json(const json& j, const Presentation& source);

/// {"group": id, "space": id, "matrix": [[expr]], "cross_sign": "koszul"|"plain"};
/// ids are catalog presentation ids.
CoactionSpec coaction_from_json(const json& j);

/// {"eps", "weights": {gen: int}, "param_subst": {param: expr},
///  "mode": "leading_order"|"nilpotent"} plus optional "nil_order",
/// "saturate", "rename".
ContractionScheme scheme_from_json(const json& j, const Presentation& source);

}  // namespace qsuper
