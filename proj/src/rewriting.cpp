#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "qsuper/errors.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

RewriteSystem::RewriteSystem(AlphabetPtr alpha, std::vector<int> ranks)
    : alpha_(std::move(alpha)), ranks_(std::move(ranks)) {}

void RewriteSystem::add_rule(Rule r) {
  if (r.lhs.empty()) throw Error(ErrorKind::InvalidArgument, "rule with empty left side");
  by_first_[r.lhs.front()].push_back(rules_.size());
  rules_.push_back(std::move(r));
}

void RewriteSystem::add_relation(const Element& e) {
  auto [w, c] = leading_term(e, ranks_);
  if (!c.is_unit())
    throw Error(ErrorKind::NonUnitLeadingCoefficient,
                "relation " + e.to_string() + " has non-unit leading coefficient " +
                    c.to_string() + " on " + word_string(*alpha_, w) +
                    "; try another precedence");
  Element m = c.inverse() * e;
  Element rhs = Element::word(alpha_, w) - m;
  add_rule({w, rhs.rebased(alpha_)});
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(
    const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = by_first_.find(w[i]);
    if (it == by_first_.end()) continue;
    for (std::size_t r : it->second) {
      const Word& l = rules_[r].lhs;
      if (i + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + i))
        return std::make_pair(i, r);
    }
  }
  return std::nullopt;
}

Element RewriteSystem::normal_form(const Element& e) const { return normal_form(e, nullptr); }

Element RewriteSystem::normal_form(const Element& e, std::vector<int>* used) const {
  Element out(alpha_);
  if (e.is_zero()) return out;
  if (!e.is_scalar() && !same_algebra(e.alphabet(), alpha_))
    throw Error(ErrorKind::AlgebraMismatch, "element not in the rewriting algebra");
  std::map<Word, Scalar, RankedDeglex> work(order());
  auto add = [&work](const Word& w, const Scalar& c) {
    auto [it, fresh] = work.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  for (const auto& [w, c] : e.terms()) add(w, c);
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Word w = top->first;
    Scalar c = top->second;
    work.erase(top);
    auto redex = find_redex(w);
    if (!redex) {
      out.add_term(w, c);
      continue;
    }
    auto [pos, r] = *redex;
    if (used) used->push_back(static_cast<int>(r));
    const Rule& rule = rules_[r];
    Word u(w.begin(), w.begin() + pos);
    Word v(w.begin() + pos + rule.lhs.size(), w.end());
    Element rep = c * (Element::word(alpha_, u) * rule.rhs * Element::word(alpha_, v));
    for (const auto& [w2, c2] : rep.terms()) add(w2, c2);
  }
  return out;
}

RewriteSystem orient_relations(const Presentation& p) {
  RewriteSystem rs(p.alphabet, p.ranks());
  for (const auto& r : p.relations) {
    try {
      rs.add_relation(r);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonUnitLeadingCoefficient) throw;
      throw Error(e.kind(), p.name + ": " + e.what());
    }
  }
  return rs;
}

Element normal_form(const RewriteSystem& rs, const Element& a) { return rs.normal_form(a); }

namespace {

struct Ambiguity {
  Word word;
  Element left;
  Element right;
  std::string label;
};

// Ambiguities between rule i (left) and rule j: overlaps where a suffix of
// lhs_i is a prefix of lhs_j, and occurrences of lhs_j inside lhs_i.
void pair_ambiguities(const RewriteSystem& rs, std::size_t i, std::size_t j, int d_max,
                      std::vector<Ambiguity>& out) {
  const auto& alpha = rs.alphabet();
  const auto& rules = rs.rules();
  auto site = [&](const Word& w, std::size_t pos, std::size_t r) {
    Word u(w.begin(), w.begin() + pos);
    Word v(w.begin() + pos + rules[r].lhs.size(), w.end());
    return Element::word(alpha, u) * rules[r].rhs * Element::word(alpha, v);
  };
  const Word& a = rules[i].lhs;
  const Word& b = rules[j].lhs;
  for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
    if (static_cast<int>(a.size() + b.size() - k) > d_max) continue;
    if (!std::equal(a.end() - k, a.end(), b.begin())) continue;
    Word w = a;
    w.insert(w.end(), b.begin() + k, b.end());
    out.push_back({w, site(w, 0, i), site(w, a.size() - k, j), "overlap " + word_string(*alpha, w)});
  }
  if (i == j || b.size() > a.size() || static_cast<int>(a.size()) > d_max) return;
  if (a.size() == b.size() && j < i) return;  // equal left sides: once per pair
  for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
    if (!std::equal(b.begin(), b.end(), a.begin() + pos)) continue;
    out.push_back({a, site(a, 0, i), site(a, pos, j),
                   "inclusion " + word_string(*alpha, b) + " in " + word_string(*alpha, a)});
  }
}

std::vector<Ambiguity> ambiguities(const RewriteSystem& rs, int d_max) {
  std::vector<Ambiguity> out;
  for (std::size_t i = 0; i < rs.rules().size(); ++i)
    for (std::size_t j = 0; j < rs.rules().size(); ++j) pair_ambiguities(rs, i, j, d_max, out);
  return out;
}

}  // namespace

CheckReport confluence_check(const RewriteSystem& rs, int d_max) {
  if (d_max < 2) throw Error(ErrorKind::InvalidArgument, "confluence degree must be >= 2");
  CheckReport rep;
  rep.check = "confluence";
  auto amb = ambiguities(rs, d_max);
  for (const auto& a : amb) {
    Element d = rs.normal_form(a.left - a.right);
    if (!d.is_zero()) rep.fail(a.label, d.to_string());
  }
  rep.note(std::to_string(amb.size()) + " ambiguities up to degree " + std::to_string(d_max));
  return rep;
}

RewriteSystem complete_to_degree(const RewriteSystem& rs, int d_max) {
  // Critical pairs are resolved once each, shortest words first; a pair that
  // resolves stays resolved when rules are added.
  RewriteSystem cur = rs;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> queue;  // (length, i, j)
  auto push_pairs = [&](std::size_t n) {
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t la = cur.rules()[n].lhs.size(), lb = cur.rules()[k].lhs.size();
      std::size_t shortest = std::max(la, lb);
      queue.insert({shortest, n, k});
      if (k != n) queue.insert({shortest, k, n});
    }
  };
  for (std::size_t n = 0; n < cur.rules().size(); ++n) push_pairs(n);
  while (!queue.empty()) {
    auto [len, i, j] = *queue.begin();
    queue.erase(queue.begin());
    if (static_cast<int>(len) > d_max) break;
    std::vector<Ambiguity> amb;
    pair_ambiguities(cur, i, j, d_max, amb);
    std::sort(amb.begin(), amb.end(),
              [](const Ambiguity& x, const Ambiguity& y) { return x.word.size() < y.word.size(); });
    for (const auto& a : amb) {
      Element d = cur.normal_form(a.left - a.right);
      if (d.is_zero()) continue;
      cur.add_relation(d);
      push_pairs(cur.rules().size() - 1);
    }
  }
  return cur;
}

DimTable count_normal_words(const RewriteSystem& rs, int d_max) {
  DimTable t;
  t.dims.assign(static_cast<std::size_t>(d_max) + 1, 0);
  std::set<Word> lhs;
  std::set<std::size_t> lens;
  for (const auto& r : rs.rules()) {
    lhs.insert(r.lhs);
    lens.insert(r.lhs.size());
  }
  const auto n = static_cast<Letter>(rs.alphabet()->size());
  Word w;
  std::function<void()> dfs = [&]() {
    ++t.dims[w.size()];
    if (static_cast<int>(w.size()) == d_max) return;
    for (Letter l = 0; l < n; ++l) {
      w.push_back(l);
      bool bad = false;
      for (std::size_t len : lens) {
        if (len > w.size()) break;
        if (lhs.count(Word(w.end() - len, w.end()))) {
          bad = true;
          break;
        }
      }
      if (!bad) dfs();
      w.pop_back();
    }
  };
  dfs();
  return t;
}

DimTable hilbert_dims(const RewriteSystem& rs, int d_max) {
  DimTable t = count_normal_words(rs, d_max);
  t.upper_bound = d_max >= 2 && !confluence_check(rs, d_max).passed();
  return t;
}

DimTable exact_hilbert_dims(const Presentation& p, int d_max) {
  auto rs = complete_to_degree(orient_relations(interreduced(p)), d_max);
  return count_normal_words(rs, d_max);
}

CheckReport ideals_equal_upto_degree(const Presentation& a, const Presentation& b, int d) {
  if (!(*a.alphabet == *b.alphabet))
    throw Error(ErrorKind::GeneratorMismatch,
                "presentations " + a.name + " and " + b.name + " have different generators");
  CheckReport rep;
  rep.check = "ideal-equality";
  rep.objects = {a.name, b.name};
  Presentation bb = b;
  bb.alphabet = a.alphabet;
  bb.precedence = a.precedence;
  for (auto& r : bb.relations) r = r.rebased(a.alphabet);
  auto sa = complete_to_degree(orient_relations(interreduced(a)), d);
  auto sb = complete_to_degree(orient_relations(interreduced(bb)), d);
  for (const auto& r : bb.relations) {
    if (r.degree() > d) continue;
    Element nf = sa.normal_form(r);
    if (!nf.is_zero()) rep.fail(b.name + " relation " + r.to_string() + " mod " + a.name, nf.to_string());
  }
  for (const auto& r : a.relations) {
    if (r.degree() > d) continue;
    Element nf = sb.normal_form(r);
    if (!nf.is_zero()) rep.fail(a.name + " relation " + r.to_string() + " mod " + b.name, nf.to_string());
  }
  auto da = count_normal_words(sa, d);
  auto db = count_normal_words(sb, d);
  if (da.dims != db.dims) {
    auto show = [](const DimTable& t) {
      std::string s = "[";
      for (std::size_t i = 0; i < t.dims.size(); ++i) s += (i ? "," : "") + std::to_string(t.dims[i]);
      return s + "]";
    };
    rep.fail("hilbert dimensions", show(da) + " vs " + show(db));
  }
  return rep;
}

}  // namespace qsuper
