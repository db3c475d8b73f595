#include "qsuper/morphisms.hpp"

#include <set>

#include "qsuper/errors.hpp"

namespace qsuper {

namespace {

std::vector<Element> image_list(const BasisMap& m, const Alphabet& source) {
  std::vector<Element> images;
  for (const auto& g : source.generators()) {
    auto it = m.images.find(g.name);
    if (it != m.images.end()) {
      if (it->second.degree() > 1)
        throw Error(ErrorKind::InvalidArgument, "image of " + g.name + " has degree > 1");
      images.push_back(it->second.is_scalar() ? Element::scalar(m.target, it->second.scalar_part())
                                              : it->second.rebased(m.target));
      continue;
    }
    auto same = m.target->find(g.name);
    if (!same)
      throw Error(ErrorKind::GeneratorMismatch, "no image given for generator " + g.name);
    images.push_back(Element::generator(m.target, *same));
  }
  return images;
}

}  // namespace

SMatrix linear_part(const BasisMap& m, const Alphabet& source) {
  auto images = image_list(m, source);
  SMatrix out = SMatrix::Zero(static_cast<Eigen::Index>(source.size()),
                              static_cast<Eigen::Index>(m.target->size()));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [w, c] : images[i].terms())
      if (w.size() == 1) out(static_cast<Eigen::Index>(i), w[0]) = Scalar(c.body());
  return out;
}

Presentation transform_presentation(const Presentation& p, const BasisMap& m, std::string name) {
  auto images = image_list(m, *p.alphabet);
  if (!m.projection) {
    SMatrix lin = linear_part(m, *p.alphabet);
    if (lin.rows() != lin.cols() || !exact_inverse(lin))
      throw Error(ErrorKind::SingularTransform, "basis map on " + p.name + " is not invertible");
  }
  std::vector<Element> rels;
  for (const auto& r : p.relations) {
    Element s = substitute_generators(r, images, m.target, m.param_subst);
    if (!s.is_zero()) rels.push_back(std::move(s));
  }
  ParameterSet params = m.target_params.vars().empty() ? p.params : m.target_params;
  if (name.empty()) name = p.name + "'";
  return interreduced(
      make_presentation(std::move(name), params, m.target, m.target_precedence, std::move(rels)));
}

Presentation induced_group_transform(const Presentation& g, const GeneratorMatrix& t,
                                     const SMatrix& d, const GeneratorMatrix& u,
                                     std::vector<std::string> precedence, std::string name) {
  int n = t.n;
  if (u.n != n || d.rows() != n || d.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "transform size differs from generator matrix");
  auto dinv = exact_inverse(d);
  if (!dinv) throw Error(ErrorKind::SingularTransform, "transform matrix is not invertible");
  BasisMap m;
  m.target = u.alphabet();
  m.target_precedence = std::move(precedence);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element e(m.target);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar c = d(i, k) * (*dinv)(l, j);
          if (!c.is_zero()) e += c * Element::generator(m.target, static_cast<std::size_t>(k * n + l));
        }
      m.images.emplace(t.name(i, j), e);
    }
  return transform_presentation(g, m, name.empty() ? g.name + "-transformed" : std::move(name));
}

const char* to_string(CrossSign c) { return c == CrossSign::Koszul ? "koszul" : "plain"; }

namespace {

struct Combined {
  Presentation algebra;
  std::vector<Element> group_images;  // group letter -> combined generator
  std::vector<Element> space_images;  // space letter -> combined generator
  std::size_t group_relations = 0;
  std::size_t space_relations = 0;
};

Combined combine(const Presentation& g, const Presentation& s, CrossSign cross) {
  std::vector<Generator> gens = g.alphabet->generators();
  std::set<std::string> taken;
  for (const auto& x : gens) taken.insert(x.name);
  std::vector<std::string> space_names;
  for (const auto& x : s.alphabet->generators()) {
    std::string nm = x.name;
    while (taken.count(nm)) nm += "_s";
    taken.insert(nm);
    space_names.push_back(nm);
    gens.push_back({nm, x.parity});
  }
  auto alpha = make_alphabet(gens);
  Combined c;
  std::size_t ng = g.alphabet->size();
  for (std::size_t i = 0; i < ng; ++i) c.group_images.push_back(Element::generator(alpha, i));
  for (std::size_t i = 0; i < s.alphabet->size(); ++i)
    c.space_images.push_back(Element::generator(alpha, ng + i));

  std::vector<std::string> prec;
  for (const auto& nm : s.precedence) prec.push_back(space_names[s.alphabet->index(nm)]);
  for (const auto& nm : g.precedence) prec.push_back(nm);

  std::vector<Element> rels;
  for (const auto& r : g.relations) rels.push_back(substitute_generators(r, c.group_images, alpha));
  for (const auto& r : s.relations) rels.push_back(substitute_generators(r, c.space_images, alpha));
  c.group_relations = g.relations.size();
  c.space_relations = s.relations.size();
  for (std::size_t k = 0; k < s.alphabet->size(); ++k)
    for (std::size_t t = 0; t < ng; ++t) {
      bool neg = cross == CrossSign::Koszul && (*s.alphabet)[k].parity && (*g.alphabet)[t].parity;
      Element xt = c.space_images[k] * c.group_images[t];
      Element tx = c.group_images[t] * c.space_images[k];
      rels.push_back(neg ? xt + tx : xt - tx);
    }
  // Relations are kept verbatim (no deduplication) so indices stay aligned.
  c.algebra.name = g.name + "(x)" + s.name;
  c.algebra.params = g.params.merged(s.params);
  c.algebra.alphabet = alpha;
  c.algebra.precedence = prec;
  c.algebra.relations = std::move(rels);
  return c;
}

}  // namespace

Presentation tensor_product_algebra(const Presentation& g, const Presentation& s, CrossSign cross) {
  auto c = combine(g, s, cross);
  return make_presentation(c.algebra.name, c.algebra.params, c.algebra.alphabet,
                           c.algebra.precedence, c.algebra.relations);
}

CheckReport coaction_check(const CoactionSpec& spec, std::vector<int>* used_group_relations) {
  CheckReport rep;
  rep.check = "coaction";
  rep.objects = {spec.group.name, spec.space.name};
  for (const auto& n : spec.notes) rep.note(n);
  std::size_t n = spec.space.alphabet->size();
  if (spec.matrix.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "coaction matrix must have one row per space generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.matrix[i].size() != n)
      throw Error(ErrorKind::DimensionMismatch, "coaction matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const Element& e = spec.matrix[i][k];
      if (e.degree() > 1)
        throw Error(ErrorKind::InvalidArgument, "coaction matrix entries must have degree <= 1");
      int want = ((*spec.space.alphabet)[i].parity + (*spec.space.alphabet)[k].parity) % 2;
      auto par = e.parity();
      if (!e.is_zero() && (!par || *par != want))
        throw Error(ErrorKind::ParityViolation,
                    "coaction entry (" + std::to_string(i) + "," + std::to_string(k) + ") has wrong parity");
    }
  }

  auto c = combine(spec.group, spec.space, spec.cross);
  const auto& alpha = c.algebra.alphabet;
  RewriteSystem rs(alpha, c.algebra.ranks());
  bool tracked = true;
  try {
    for (const auto& r : c.algebra.relations) rs.add_relation(r);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonUnitLeadingCoefficient) throw;
    rs = orient_relations(interreduced(c.algebra));
    tracked = false;
    rep.note("group relations were interreduced before orientation");
  }
  auto conf = confluence_check(rs, 3);
  if (!conf.passed()) {
    rep.note("tensor product algebra is not confluent at degree 3; completing to degree 4");
    rs = complete_to_degree(rs, 4);
  }

  auto lift = [&](const Element& e) {
    if (e.is_scalar()) return Element::scalar(alpha, e.scalar_part());
    return substitute_generators(e, c.group_images, alpha);
  };
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) {
    Element img(alpha);
    for (std::size_t k = 0; k < n; ++k)
      if (!spec.matrix[i][k].is_zero()) img += lift(spec.matrix[i][k]) * c.space_images[k];
    images.push_back(img);
  }
  std::set<int> used;
  for (const auto& r : spec.space.relations) {
    Element mapped = substitute_generators(r, images, alpha);
    std::vector<int> u;
    Element nf = rs.normal_form(mapped, &u);
    for (int idx : u)
      if (idx < static_cast<int>(c.group_relations)) used.insert(idx);
    if (!nf.is_zero()) rep.fail("delta(" + r.to_string() + ")", nf.to_string());
  }
  if (used_group_relations) {
    used_group_relations->assign(used.begin(), used.end());
    if (!tracked) used_group_relations->clear();
  }
  return rep;
}

}  // namespace qsuper
