#include "qsuper/contract.hpp"

#include <algorithm>
#include <numeric>

#include "qsuper/errors.hpp"

namespace qsuper {

const char* to_string(ContractionMode m) {
  return m == ContractionMode::LeadingOrder ? "leading_order" : "nilpotent";
}

namespace {

ParameterSet param_set_of(const std::vector<Var>& vars) {
  ParameterSet out;
  std::vector<Var> sorted = vars;
  std::sort(sorted.begin(), sorted.end(), [](Var a, Var b) { return name_less(a, b); });
  for (Var v : sorted) {
    if (out.find(v.name())) continue;
    switch (v.kind()) {
      case ParamKind::EvenFree: out.even(v.name()); break;
      case ParamKind::EvenNilpotent: out.nilpotent(v.name(), v.order()); break;
      case ParamKind::Odd: out.odd(v.name()); break;
    }
  }
  return out;
}

// Valuation and leading part of a row in the contraction parameter.
struct Lead {
  std::optional<int> val;
  Element part;
};

class Order {
 public:
  Order(Var t, bool nilpotent) : t_(t), nil_(nilpotent) {}

  std::optional<int> valuation(const Scalar& c) const {
    return nil_ ? c.nil_valuation(t_) : c.valuation(t_);
  }

  Lead lead(const Element& e) const {
    Lead l{std::nullopt, Element(e.alphabet())};
    for (const auto& [w, c] : e.terms()) {
      auto v = valuation(c);
      if (v && (!l.val || *v < *l.val)) l.val = v;
    }
    if (!l.val) return l;
    for (const auto& [w, c] : e.terms()) l.part.add_term(w, coefficient(c, *l.val));
    return l;
  }

  Scalar power(int k) const { return Scalar::param(t_).pow(k); }

 private:
  Scalar coefficient(const Scalar& c, int m) const {
    if (nil_) return c.nil_coefficient(t_, m);
    return (c * Scalar::param(t_).pow(-m)).limit_at_zero(t_);
  }

  Var t_;
  bool nil_;
};

// Multiplies by the lcm of the coefficient denominators, so substituting a
// truncated nilpotent never divides by a non-unit.
Element clear_denominators(const Element& e) {
  Poly l(1);
  for (const auto& [w, c] : e.terms())
    for (const auto& [k, rf] : c.terms()) {
      if (rf.den().is_constant()) continue;
      l = *divide_exact(l * rf.den(), gcd(l, rf.den()));
    }
  return Scalar(RatFunc(l)) * e;
}

struct BasisVec {
  Word pivot;
  Element vec;
  std::map<std::size_t, Scalar> combo;
};

// One saturation step; returns true if a row was replaced or dropped.
bool saturation_step(std::vector<Element>& rows, const Order& ord, bool nilpotent) {
  std::vector<Lead> leads;
  for (const auto& r : rows) leads.push_back(ord.lead(r));
  std::vector<std::size_t> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return *leads[a].val < *leads[b].val; });
  std::vector<BasisVec> basis;
  for (std::size_t j : idx) {
    Element r = leads[j].part;
    std::map<std::size_t, Scalar> combo{{j, Scalar(1)}};
    for (const auto& b : basis) {
      auto it = r.terms().find(b.pivot);
      if (it == r.terms().end()) continue;
      Scalar f = it->second;
      r -= f * b.vec;
      for (const auto& [k, c] : b.combo) {
        combo[k] -= f * c;
        if (combo[k].is_zero()) combo.erase(k);
      }
    }
    if (r.is_zero()) {
      int vj = *leads[j].val;
      Element next(rows[j].alphabet());
      for (const auto& [k, c] : combo)
        next += (c * ord.power(vj - *leads[k].val)) * rows[k];
      if (next.is_zero()) {
        if (nilpotent)
          throw Error(ErrorKind::TruncationTooLow,
                      "relation vanished under the nilpotent truncation; raise its order");
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        rows[j] = next;
      }
      return true;
    }
    std::optional<Word> piv;
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it)
      if (it->second.is_unit()) {
        piv = it->first;
        break;
      }
    if (!piv)
      throw Error(ErrorKind::NonUnitLeadingCoefficient,
                  "leading part " + r.to_string() + " has no unit coefficient");
    Scalar inv = r.terms().at(*piv).inverse();
    BasisVec b{*piv, inv * r, {}};
    for (const auto& [k, c] : combo) b.combo[k] = inv * c;
    basis.push_back(std::move(b));
  }
  return false;
}

}  // namespace

ContractionResult contract(const Presentation& p, const ContractionScheme& s, std::string name) {
  if (p.params.find(s.eps))
    throw Error(ErrorKind::InvalidArgument, "contraction parameter " + s.eps + " already in use");
  bool nil = s.mode == ContractionMode::Nilpotent;
  if (nil && s.nil_order < 2) throw Error(ErrorKind::InvalidArgument, "nilpotent order must be >= 2");
  Var eps = Var::intern(s.eps, ParamKind::EvenFree);
  Var t = nil ? Var::intern(s.eps + "_nil" + std::to_string(s.nil_order), ParamKind::EvenNilpotent,
                            s.nil_order)
              : eps;
  Scalar ts = Scalar::param(t);

  std::map<Var, Scalar> subst;
  for (const auto& [k, v] : s.param_subst) subst[k] = nil ? v.substitute({{eps, ts}}) : v;
  if (nil) subst[eps] = ts;

  std::vector<Element> images;
  for (const auto& g : p.alphabet->generators()) {
    auto it = s.weights.find(g.name);
    int w = it == s.weights.end() ? 0 : it->second;
    if (w < 0) throw Error(ErrorKind::InvalidArgument, "negative weight for " + g.name);
    images.push_back(ts.pow(w) * Element::generator(p.alphabet, g.name));
  }

  Presentation src = interreduced(p);
  Order ord(t, nil);
  ContractionResult out;
  std::vector<Element> rows;
  for (const auto& r : src.relations) {
    Element e = substitute_generators(nil ? clear_denominators(r) : r, images, p.alphabet, subst);
    ContractionReport::Entry entry{r.to_string(), std::nullopt, "0"};
    if (!e.is_zero()) {
      auto l = ord.lead(e);
      entry.valuation = l.val;
      entry.leading = l.part.to_string();
      rows.push_back(std::move(e));
    } else if (nil) {
      throw Error(ErrorKind::TruncationTooLow,
                  "relation " + r.to_string() + " vanished under the nilpotent truncation");
    }
    out.report.relations.push_back(std::move(entry));
  }
  if (s.saturate)
    while (saturation_step(rows, ord, nil)) ++out.report.saturation_steps;

  // Output alphabet with renamed generators.
  std::vector<Generator> gens;
  std::map<std::string, std::string> names;
  for (const auto& g : p.alphabet->generators()) {
    auto it = s.rename.find(g.name);
    std::string nm = it == s.rename.end() ? g.name : it->second;
    names[g.name] = nm;
    gens.push_back({nm, g.parity});
  }
  auto alpha = make_alphabet(gens);
  std::vector<Element> rels;
  std::vector<Var> used;
  for (const auto& v : p.params.vars())
    if (!s.param_subst.count(v)) used.push_back(v);
  for (const auto& r : rows) {
    Element l = ord.lead(r).part.relabeled(alpha);
    if (l.is_zero()) continue;
    for (const auto& [w, c] : l.terms())
      for (Var v : c.vars())
        if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    rels.push_back(std::move(l));
  }
  if (rels.empty()) out.report.notes.push_back("EmptyResult: every relation vanished in the limit");
  if (s.saturate && out.report.saturation_steps)
    out.report.notes.push_back(std::to_string(out.report.saturation_steps) +
                               " saturation steps combined relations with dependent leading parts");
  out.report.notes.push_back("subleading orders in " + s.eps + " are dropped");

  std::vector<std::string> prec = s.precedence;
  if (prec.empty())
    for (const auto& n : p.precedence) prec.push_back(names[n]);
  out.presentation = interreduced(make_presentation(
      name.empty() ? p.name + "-contracted" : std::move(name), param_set_of(used), alpha, prec, rels));
  return out;
}

Presentation parameter_limit(const Presentation& p, const std::string& param, std::string name) {
  auto v = p.params.find(param);
  std::vector<Var> keep;
  for (const auto& x : p.params.vars())
    if (x.name() != param) keep.push_back(x);
  std::vector<Element> rels;
  for (const auto& r : p.relations) {
    Element l = v ? r.map_coefficients([&](const Scalar& c) { return c.limit_at_zero(*v); }) : r;
    if (!l.is_zero()) rels.push_back(std::move(l));
  }
  return make_presentation(name.empty() ? p.name + "|" + param + "=0" : std::move(name),
                           param_set_of(keep), p.alphabet, p.precedence, std::move(rels));
}

CheckReport flatness_check(const Presentation& before, const Presentation& after, int d_max) {
  CheckReport rep;
  rep.check = "flatness";
  rep.objects = {before.name, after.name};
  auto da = exact_hilbert_dims(before, d_max);
  auto db = exact_hilbert_dims(after, d_max);
  for (int d = 0; d <= d_max; ++d)
    if (da.dims[d] != db.dims[d])
      rep.fail("degree " + std::to_string(d),
               std::to_string(da.dims[d]) + " vs " + std::to_string(db.dims[d]));
  return rep;
}

}  // namespace qsuper
