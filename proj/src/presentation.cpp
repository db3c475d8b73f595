#include "qsuper/presentation.hpp"

#include <algorithm>
#include <set>

#include "qsuper/errors.hpp"

namespace qsuper {

std::vector<int> Presentation::ranks() const {
  std::vector<int> r(alphabet->size(), -1);
  int n = static_cast<int>(precedence.size());
  for (int i = 0; i < n; ++i) r[alphabet->index(precedence[i])] = n - 1 - i;
  return r;
}

std::pair<Word, Scalar> leading_term(const Element& e, const std::vector<int>& ranks) {
  if (e.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading term of zero");
  RankedDeglex less{&ranks};
  auto best = e.terms().begin();
  for (auto it = e.terms().begin(); it != e.terms().end(); ++it)
    if (less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::optional<Element> monic(const Element& e, const std::vector<int>& ranks) {
  auto [w, c] = leading_term(e, ranks);
  if (!c.is_unit()) return std::nullopt;
  return c.inverse() * e;
}

namespace {

bool proportional_duplicate(const std::vector<Element>& rels, const Element& r,
                            const std::vector<int>& ranks) {
  auto mr = monic(r, ranks);
  for (const auto& x : rels) {
    if (x == r) return true;
    if (mr) {
      auto mx = monic(x, ranks);
      if (mx && *mx == *mr) return true;
    }
  }
  return false;
}

}  // namespace

Presentation make_presentation(std::string name, ParameterSet params, AlphabetPtr alphabet,
                               std::vector<std::string> precedence,
                               std::vector<Element> relations) {
  Presentation p;
  p.name = std::move(name);
  p.params = std::move(params);
  p.alphabet = std::move(alphabet);
  if (precedence.empty())
    for (auto it = p.alphabet->generators().rbegin(); it != p.alphabet->generators().rend(); ++it)
      precedence.push_back(it->name);
  std::set<std::string> seen(precedence.begin(), precedence.end());
  if (seen.size() != precedence.size() || precedence.size() != p.alphabet->size())
    throw Error(ErrorKind::InvalidArgument,
                "precedence of " + p.name + " must list every generator exactly once");
  for (const auto& n : precedence) p.alphabet->index(n);
  p.precedence = std::move(precedence);
  auto ranks = p.ranks();
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.is_scalar() && !same_algebra(r.alphabet(), p.alphabet))
      throw Error(ErrorKind::AlgebraMismatch, "relation not in the algebra of " + p.name);
    Element rr = r.rebased(p.alphabet);
    if (!proportional_duplicate(p.relations, rr, ranks)) p.relations.push_back(std::move(rr));
  }
  return p;
}

std::vector<Element> interreduce(const std::vector<Element>& relations,
                                 const std::vector<int>& ranks) {
  RankedDeglex less{&ranks};
  std::vector<Element> rows;
  for (const auto& r : relations)
    if (!r.is_zero()) rows.push_back(r);
  std::set<Word, RankedDeglex> words(less);
  for (const auto& r : rows)
    for (const auto& [w, c] : r.terms()) words.insert(w);

  std::vector<bool> is_pivot(rows.size(), false);
  std::vector<std::pair<Word, std::size_t>> pivots;
  for (auto wit = words.rbegin(); wit != words.rend(); ++wit) {
    const Word& col = *wit;
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (is_pivot[i]) continue;
      auto it = rows[i].terms().find(col);
      if (it != rows[i].terms().end() && it->second.is_unit()) {
        // Prefer the sparsest candidate for tidier output.
        if (!pick || rows[i].terms().size() < rows[*pick].terms().size()) pick = i;
      }
    }
    if (!pick) continue;
    std::size_t p = *pick;
    rows[p] = rows[p].terms().at(col).inverse() * rows[p];
    is_pivot[p] = true;
    pivots.emplace_back(col, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == p) continue;
      auto it = rows[i].terms().find(col);
      if (it == rows[i].terms().end()) continue;
      Scalar f = it->second;
      rows[i] -= f * rows[p];
    }
  }
  std::vector<Element> out;
  for (const auto& [w, i] : pivots)
    if (!rows[i].is_zero()) out.push_back(rows[i]);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!is_pivot[i] && !rows[i].is_zero()) out.push_back(rows[i]);
  return out;
}

Presentation interreduced(const Presentation& p) {
  Presentation r = p;
  r.relations = interreduce(p.relations, p.ranks());
  return r;
}

Presentation add_relation(const Presentation& p, const Element& r) {
  if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot add the zero relation");
  if (!r.is_scalar() && !same_algebra(r.alphabet(), p.alphabet))
    throw Error(ErrorKind::AlgebraMismatch, "relation not in the algebra of " + p.name);
  auto rels = p.relations;
  rels.push_back(r.rebased(p.alphabet));
  return make_presentation(p.name, p.params, p.alphabet, p.precedence, std::move(rels));
}

QuotientResult quotient_set_generator(const Presentation& p, const std::string& generator,
                                      const Scalar& value) {
  std::size_t g = p.alphabet->index(generator);
  if ((*p.alphabet)[g].parity != 0)
    throw Error(ErrorKind::ParityViolation, "only even generators can be set to a scalar");
  if (!value.is_even())
    throw Error(ErrorKind::ParityViolation, "quotient value must be an even scalar");

  std::vector<Generator> gens;
  std::vector<Letter> remap(p.alphabet->size());
  for (std::size_t i = 0; i < p.alphabet->size(); ++i) {
    if (i == g) continue;
    remap[i] = static_cast<Letter>(gens.size());
    gens.push_back((*p.alphabet)[i]);
  }
  auto target = make_alphabet(gens);
  std::vector<Element> images;
  for (std::size_t i = 0; i < p.alphabet->size(); ++i)
    images.push_back(i == g ? Element::scalar(target, value)
                            : Element::generator(target, remap[i]));

  QuotientResult out;
  std::vector<Element> rels;
  for (const auto& r : p.relations) {
    Element s = substitute_generators(r, images, target);
    if (s.is_zero()) continue;
    if (s.min_degree() <= 1 && r.min_degree() > s.min_degree()) {
      out.collapsing = true;
      out.notes.push_back("relation " + r.to_string() + " becomes " + s.to_string());
    }
    rels.push_back(std::move(s));
  }
  std::vector<std::string> prec;
  for (const auto& n : p.precedence)
    if (n != generator) prec.push_back(n);
  out.presentation = make_presentation(p.name + "/{" + generator + "=" + value.to_string() + "}",
                                       p.params, target, prec, std::move(rels));
  if (out.collapsing) out.notes.push_back("non-flat quotient: generators are killed");
  return out;
}

}  // namespace qsuper
