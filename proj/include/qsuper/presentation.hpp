#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/freealg.hpp"
#include "qsuper/report.hpp"

namespace qsuper {

/// Deglex on words with a per-letter rank (higher rank = bigger letter).
struct RankedDeglex {
  const std::vector<int>* ranks;
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return (*ranks)[a[i]] < (*ranks)[b[i]];
    return false;
  }
};

/// Finitely presented graded algebra over the coefficient superring.
struct Presentation {
  std::string name;
  ParameterSet params;
  AlphabetPtr alphabet;
  /// Generator names, highest precedence first.
  std::vector<std::string> precedence;
  std::vector<Element> relations;

  /// rank[letter]; the first precedence entry gets the highest rank.
  std::vector<int> ranks() const;
};

/// Validates precedence and drops zero and proportional duplicate relations.
/// An empty precedence defaults to reverse declaration order.
Presentation make_presentation(std::string name, ParameterSet params, AlphabetPtr alphabet,
                               std::vector<std::string> precedence,
                               std::vector<Element> relations);

/// Leading word and coefficient of a nonzero element under `ranks`.
std::pair<Word, Scalar> leading_term(const Element& e, const std::vector<int>& ranks);

/// Relation scaled so its leading coefficient is 1 (requires a unit leading coefficient).
std::optional<Element> monic(const Element& e, const std::vector<int>& ranks);

/// Row reduction of a relation list over the coefficient ring with unit pivots,
/// columns processed from the largest word down. The output spans the same
/// two-sided ideal; zero and redundant rows are dropped.
std::vector<Element> interreduce(const std::vector<Element>& relations,
                                 const std::vector<int>& ranks);

/// Same presentation with interreduced relations.
Presentation interreduced(const Presentation& p);

/// Appends a relation; proportional duplicates leave the set unchanged.
Presentation add_relation(const Presentation& p, const Element& r);

struct QuotientResult {
  Presentation presentation;
  /// True when a substituted relation acquired terms of degree <= 1, i.e. the
  /// quotient kills generators rather than merely removing one.
  bool collapsing = false;
  std::vector<std::string> notes;
};

/// Sets an even generator to a scalar value and drops it from the generators.
QuotientResult quotient_set_generator(const Presentation& p, const std::string& generator,
                                      const Scalar& value);

// ---- Rewriting ---------------------------------------------------------------

struct Rule {
  Word lhs;
  Element rhs;
};

/// Oriented relations lhs -> rhs with rhs strictly smaller in ranked deglex.
class RewriteSystem {
 public:
  RewriteSystem(AlphabetPtr alpha, std::vector<int> ranks);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<Rule>& rules() const { return rules_; }
  RankedDeglex order() const { return RankedDeglex{&ranks_}; }

  void add_rule(Rule r);
  /// Orients `e` (must have a unit leading coefficient) and adds it.
  void add_relation(const Element& e);

  /// First (leftmost start, then rule order) rule occurrence in w.
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
  bool reducible(const Word& w) const { return find_redex(w).has_value(); }
  Element normal_form(const Element& e) const;
  /// Rule indices applied while reducing e (for usage audits).
  Element normal_form(const Element& e, std::vector<int>* used) const;

 private:
  AlphabetPtr alpha_;
  std::vector<int> ranks_;
  std::vector<Rule> rules_;
  std::map<Letter, std::vector<std::size_t>> by_first_;
};

/// Monic orientation of every relation. NonUnitLeadingCoefficient names the
/// offending relation.
RewriteSystem orient_relations(const Presentation& p);

/// Element reduction shorthand.
Element normal_form(const RewriteSystem& rs, const Element& a);

/// Resolves every overlap and inclusion ambiguity whose word has length
/// <= d_max; passes iff all reduce to zero.
CheckReport confluence_check(const RewriteSystem& rs, int d_max);

/// Degree-bounded completion: adds reduced nonzero ambiguity resolvents as
/// new rules until all ambiguities up to d_max resolve.
RewriteSystem complete_to_degree(const RewriteSystem& rs, int d_max);

struct DimTable {
  std::vector<long> dims;
  /// True when computed from a system not known to be confluent to d_max.
  bool upper_bound = false;
  friend bool operator==(const DimTable& a, const DimTable& b) { return a.dims == b.dims; }
};

/// Number of irreducible words in each degree 0..d_max, without a confluence check.
DimTable count_normal_words(const RewriteSystem& rs, int d_max);

/// Number of irreducible words in each degree 0..d_max; upper_bound is set
/// unless the system is confluent to d_max.
DimTable hilbert_dims(const RewriteSystem& rs, int d_max);

/// Orient, complete to d_max, then count normal words.
DimTable exact_hilbert_dims(const Presentation& p, int d_max);

/// Ideal equality up to degree d (mutual normal-form membership plus equal
/// Hilbert dimensions), using a's precedence for both.
CheckReport ideals_equal_upto_degree(const Presentation& a, const Presentation& b, int d);

}  // namespace qsuper
