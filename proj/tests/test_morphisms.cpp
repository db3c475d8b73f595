#include <doctest.h>

#include "oracles.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/parser.hpp"
#include "qsuper/pipelines.hpp"

using namespace qsuper;

namespace {

// Adds 1 * (second largest word) to relation i, or removes a single-term relation.
Presentation mutate(const Presentation& g, std::size_t i) {
  Presentation m = g;
  const auto& r = g.relations[i];
  if (r.terms().size() < 2) {
    m.relations.erase(m.relations.begin() + static_cast<long>(i));
    return m;
  }
  auto it = r.terms().begin();
  m.relations[i] = r + Element::word(r.alphabet(), it->first);
  return m;
}

}  // namespace

TEST_CASE("cartesian change of the quantum plane") {
  auto e = catalog_get("map.eq7");
  auto p = apply_basis_map(*e.basis_map);
  CHECK(ideals_equal_upto_degree(catalog_presentation("pres.eq8"), p, 3).passed());
  auto lin = linear_part(e.basis_map->map, *catalog_presentation("pres.cq2").alphabet);
  CHECK(lin.rows() == 2);
  CHECK(exact_inverse(lin).has_value());
}

TEST_CASE("singular changes are rejected") {
  auto m = catalog_get("map.eq7").basis_map->map;
  m.images.at("y") = m.images.at("x");
  try {
    transform_presentation(catalog_presentation("pres.cq2"), m);
    FAIL("expected SingularTransform");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularTransform);
  }
}

TEST_CASE("superlinear changes and limits") {
  auto p15 = apply_basis_map(*catalog_get("map.eq14").basis_map);
  CHECK(ideals_equal_upto_degree(catalog_presentation("pres.eq15"), p15, 3).passed());
  auto p16 = parameter_limit(catalog_presentation("pres.eq15"), "v");
  CHECK(ideals_equal_upto_degree(catalog_presentation("pres.eq16"), p16, 3).passed());
  auto p19 = apply_basis_map(*catalog_get("map.eq19").basis_map);
  CHECK(ideals_equal_upto_degree(catalog_presentation("pres.eq19_transformed"), p19, 2).passed());
  CHECK(ideals_equal_upto_degree(catalog_presentation("pres.ch11_exotic"), parameter_limit(p19, "v"), 3)
            .passed());
}

TEST_CASE("tensor product cross relations") {
  auto g = catalog_presentation("pres.eq13");
  auto s = catalog_presentation("pres.cq11");
  auto t = tensor_product_algebra(g, s);
  ParseContext ctx{t.params, t.alphabet};
  auto rs = orient_relations(interreduced(t));
  CHECK(rs.normal_form(parse_expression("theta*alpha + alpha*theta", ctx)).is_zero());
  CHECK(rs.normal_form(parse_expression("theta*a - a*theta", ctx)).is_zero());
  CHECK(rs.normal_form(parse_expression("x*alpha - alpha*x", ctx)).is_zero());
  auto plain = tensor_product_algebra(g, s, CrossSign::Plain);
  auto ps = orient_relations(interreduced(plain));
  ParseContext pctx{plain.params, plain.alphabet};
  CHECK(ps.normal_form(parse_expression("theta*alpha - alpha*theta", pctx)).is_zero());
}

Verdict verdict(const CoactionSpec& spec) {
  try {
    return coaction_check(spec).result;
  } catch (const Error&) {
    return Verdict::Fail;
  }
}

TEST_CASE("catalog coactions hold and fail when a relation they need is mutated") {
  for (std::string id : {"coact.eq4", "coact.eq10", "coact.eq10_nilpotent", "coact.eq13", "coact.eq17",
                         "coact.eq26"}) {
    auto spec = catalog_get(id).coaction->spec;
    INFO(id);
    CHECK(coaction_check(spec).passed());
    int needed = 0;
    for (std::size_t i = 0; i < spec.group.relations.size(); ++i) {
      CoactionSpec dropped = spec;
      dropped.group.relations.erase(dropped.group.relations.begin() + static_cast<long>(i));
      if (verdict(dropped) != Verdict::Fail) continue;
      ++needed;
      CoactionSpec m = spec;
      m.group = mutate(spec.group, i);
      INFO("mutated relation " << i);
      CHECK(verdict(m) == Verdict::Fail);
    }
    CHECK(needed > 0);
  }
}

TEST_CASE("plain cross signs break the odd coaction") {
  auto spec = catalog_get("coact.eq13").coaction->spec;
  spec.cross = CrossSign::Plain;
  CHECK(coaction_check(spec).result == Verdict::Fail);
}
