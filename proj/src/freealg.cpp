#include "qsuper/freealg.hpp"

#include <algorithm>
#include <set>

#include "qsuper/errors.hpp"

namespace qsuper {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty() || !seen.insert(g.name).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate or empty generator name '" + g.name + "'");
    if (g.parity != 0 && g.parity != 1)
      throw Error(ErrorKind::InvalidArgument, "parity must be 0 or 1");
  }
  if (gens_.size() > 0xffff) throw Error(ErrorKind::InvalidArgument, "too many generators");
}

std::optional<std::size_t> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Alphabet::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error(ErrorKind::UnknownSymbol, "unknown generator '" + name + "'");
  return *i;
}

AlphabetPtr make_alphabet(std::vector<Generator> gens) {
  return std::make_shared<const Alphabet>(std::move(gens));
}

bool same_algebra(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int word_parity(const Alphabet& alpha, const Word& w) {
  int p = 0;
  for (Letter l : w) p += alpha[l].parity;
  return p % 2;
}

std::string word_string(const Alphabet& alpha, const Word& w) {
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += "*";
    s += alpha[l].name;
  }
  return s;
}

Element Element::scalar(AlphabetPtr alpha, const Scalar& c) {
  Element e(std::move(alpha));
  e.add_term({}, c);
  return e;
}

Element Element::generator(AlphabetPtr alpha, std::size_t index) {
  if (!alpha || index >= alpha->size())
    throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  Element e(std::move(alpha));
  e.add_term({static_cast<Letter>(index)}, Scalar(1));
  return e;
}

Element Element::generator(AlphabetPtr alpha, const std::string& name) {
  std::size_t i = alpha->index(name);
  return generator(std::move(alpha), i);
}

Element Element::word(AlphabetPtr alpha, Word w, const Scalar& c) {
  Element e(std::move(alpha));
  e.add_term(w, c);
  return e;
}

bool Element::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar Element::scalar_part() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Scalar() : it->second;
}

int Element::degree() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
}

int Element::min_degree() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.size());
}

std::optional<int> Element::parity() const {
  std::optional<int> p;
  for (const auto& [w, c] : terms_) {
    auto cp = c.parity();
    if (!cp) return std::nullopt;
    int wp = alpha_ ? word_parity(*alpha_, w) : 0;
    int tp = (wp + *cp) % 2;
    if (!p) p = tp;
    else if (*p != tp) return std::nullopt;
  }
  return p.value_or(0);
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (!w.empty() && !alpha_)
    throw Error(ErrorKind::AlgebraMismatch, "word term in an element without algebra");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlphabetPtr common_algebra(const Element& a, const Element& b) {
  if (!a.alphabet()) return b.alphabet();
  if (!b.alphabet()) return a.alphabet();
  if (!same_algebra(a.alphabet(), b.alphabet()))
    throw Error(ErrorKind::AlgebraMismatch, "elements belong to different algebras");
  return a.alphabet();
}

Element& Element::operator+=(const Element& o) {
  alpha_ = common_algebra(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  alpha_ = common_algebra(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  Element r(common_algebra(a, b));
  for (const auto& [w1, c1] : a.terms_) {
    bool odd_word = r.alpha_ && word_parity(*r.alpha_, w1);
    for (const auto& [w2, c2] : b.terms_) {
      Word w;
      w.reserve(w1.size() + w2.size());
      w.insert(w.end(), w1.begin(), w1.end());
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * (odd_word ? c2.twisted() : c2));
    }
  }
  return r;
}

Element operator*(const Scalar& c, const Element& a) {
  Element r(a.alpha_);
  for (const auto& [w, x] : a.terms_) r.add_term(w, c * x);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.terms_.empty() || a.is_scalar()) return true;
  return same_algebra(a.alpha_, b.alpha_);
}

Element Element::degree_terms(int d) const {
  Element r(alpha_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == d) r.terms_.emplace(w, c);
  return r;
}

Element Element::substitute_params(const std::map<Var, Scalar>& images) const {
  if (images.empty()) return *this;
  Element r(alpha_);
  for (const auto& [w, c] : terms_) r.add_term(w, c.substitute(images));
  return r;
}

Element Element::rebased(AlphabetPtr alpha) const {
  if (!same_algebra(alpha_, alpha) && !is_scalar())
    throw Error(ErrorKind::AlgebraMismatch, "rebase onto a different alphabet");
  Element r = *this;
  r.alpha_ = std::move(alpha);
  return r;
}

Element Element::relabeled(AlphabetPtr alpha) const {
  bool ok = alpha_ && alpha && alpha_->size() == alpha->size();
  for (std::size_t i = 0; ok && i < alpha->size(); ++i) ok = (*alpha_)[i].parity == (*alpha)[i].parity;
  if (!ok) throw Error(ErrorKind::AlgebraMismatch, "relabel needs matching generator parities");
  Element r = *this;
  r.alpha_ = std::move(alpha);
  return r;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string t;
    if (w.empty()) {
      t = c.to_string();
      if (c.needs_parens() && c.terms().size() > 1) t = "(" + t + ")";
    } else {
      std::string ws = word_string(*alpha_, w);
      if (c.is_one()) t = ws;
      else if (c == Scalar(-1)) t = "-" + ws;
      else if (c.needs_parens()) t = "(" + c.to_string() + ")*" + ws;
      else t = c.to_string() + "*" + ws;
    }
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out;
}

Element substitute_generators(const Element& a, const std::vector<Element>& images,
                              const AlphabetPtr& target,
                              const std::map<Var, Scalar>& param_map) {
  if (!a.alphabet()) return Element::scalar(target, a.scalar_part()).substitute_params(param_map);
  const Alphabet& src = *a.alphabet();
  if (images.size() != src.size())
    throw Error(ErrorKind::InvalidArgument, "one image per generator required");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].is_zero() && images[i].alphabet() && !images[i].is_scalar() &&
        !same_algebra(images[i].alphabet(), target))
      throw Error(ErrorKind::AlgebraMismatch, "image of " + src[i].name + " not in target algebra");
    auto p = images[i].parity();
    if (!p || (!images[i].is_zero() && *p != src[i].parity))
      throw Error(ErrorKind::ParityViolation, "image of " + src[i].name + " has wrong parity");
  }
  std::vector<Element> imgs;
  imgs.reserve(images.size());
  for (const auto& im : images) imgs.push_back(im.is_scalar() ? Element::scalar(target, im.scalar_part()) : im.rebased(target));

  Element r(target);
  for (const auto& [w, c] : a.terms()) {
    Element t = Element::scalar(target, c);
    for (Letter l : w) {
      t = t * imgs[l];
      if (t.is_zero()) break;
    }
    r += t;
  }
  return r.substitute_params(param_map);
}

}  // namespace qsuper
