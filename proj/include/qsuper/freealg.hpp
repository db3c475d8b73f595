#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/scalar.hpp"

namespace qsuper {

struct Generator {
  std::string name;
  int parity = 0;  // 0 even, 1 odd

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator list of one free superalgebra.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> gens);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<Generator> gens_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> gens);
bool same_algebra(const AlphabetPtr& a, const AlphabetPtr& b);

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Degree first, then lexicographic by letter index.
struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

int word_parity(const Alphabet& alpha, const Word& w);

/// Finite linear combination of words with Scalar coefficients written on the
/// left: sum c_w * w.
class Element {
 public:
  using Terms = std::map<Word, Scalar, DeglexLess>;

  Element() = default;
  explicit Element(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  static Element scalar(AlphabetPtr alpha, const Scalar& c);
  static Element generator(AlphabetPtr alpha, std::size_t index);
  static Element generator(AlphabetPtr alpha, const std::string& name);
  static Element word(AlphabetPtr alpha, Word w, const Scalar& c = Scalar(1));

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  Scalar scalar_part() const;
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const { return degree() == min_degree(); }
  /// Parity of a homogeneous element (zero is even); nullopt if mixed.
  std::optional<int> parity() const;

  void add_term(const Word& w, const Scalar& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  /// Koszul-signed product: (c w)(c' w') = (-1)^{p(c') p(w)} (c c') (w w').
  friend Element operator*(const Element& a, const Element& b);
  /// Left scalar multiple.
  friend Element operator*(const Scalar& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b);

  Element degree_terms(int d) const;
  Element substitute_params(const std::map<Var, Scalar>& images) const;
  /// Map every coefficient through f (words untouched).
  template <typename F>
  Element map_coefficients(F&& f) const {
    Element r(alpha_);
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }
  /// Same terms, reinterpreted over an equal alphabet object.
  Element rebased(AlphabetPtr alpha) const;
  /// Same words over an alphabet with the same size and parities (renaming).
  Element relabeled(AlphabetPtr alpha) const;

  std::string to_string() const;

 private:
  AlphabetPtr alpha_;
  Terms terms_;
};

/// Bound algebra of a binary operation; AlgebraMismatch if incompatible.
AlphabetPtr common_algebra(const Element& a, const Element& b);

/// Algebra morphism extension of generator images (indexed by source letter,
/// each in `target`), followed by parameter substitution.
Element substitute_generators(const Element& a, const std::vector<Element>& images,
                              const AlphabetPtr& target,
                              const std::map<Var, Scalar>& param_map = {});

std::string word_string(const Alphabet& alpha, const Word& w);

}  // namespace qsuper
