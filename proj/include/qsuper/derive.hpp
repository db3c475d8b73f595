#pragma once

#include <string>
#include <vector>

#include "qsuper/presentation.hpp"
#include "qsuper/smatrix.hpp"

namespace qsuper {

/// Sign placement for graded RTT relations. `Graded` attaches
/// (-1)^{p_i (p_k + p_l)} to T2 entries; `GradedT1` attaches
/// (-1)^{p_k (p_i + p_j)} to T1 entries; `GradedBoth` uses both.
enum class SignConvention { Ungraded, Graded, GradedT1, GradedBoth };

const char* to_string(SignConvention c);
SignConvention parse_convention(const std::string& s);
const std::vector<SignConvention>& all_conventions();

/// n x n matrix of group generators t_ij with parity p_i + p_j.
struct GeneratorMatrix {
  int n = 0;
  std::vector<std::string> names;  // row-major
  Parities row_parities;

  const std::string& name(int i, int j) const { return names[i * n + j]; }
  int parity(int i, int j) const;
  AlphabetPtr alphabet() const;
};

GeneratorMatrix make_generator_matrix(std::vector<std::string> names, Parities row_parities);

/// Components of (R-hat - q I)(X (x) X). Any graded convention uses the
/// super-permutation in R-hat. Output relations are interreduced.
Presentation space_relations(const SMatrix& r, const Parities& parities, const Scalar& q,
                             SignConvention conv, const std::vector<std::string>& names,
                             const ParameterSet& params, std::vector<std::string> precedence = {},
                             std::string name = "space");

/// Entries of R T1 T2 - T2 T1 R, interreduced.
Presentation group_relations(const SMatrix& r, const GeneratorMatrix& t, SignConvention conv,
                             const ParameterSet& params, std::vector<std::string> precedence = {},
                             std::string name = "group");

/// Derives group relations under every convention and compares each with
/// `target` up to degree 2. Passes when at least one convention matches.
CheckReport convention_scan(const SMatrix& r, const GeneratorMatrix& t, const Presentation& target);

}  // namespace qsuper
