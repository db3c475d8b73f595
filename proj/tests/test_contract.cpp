#include <doctest.h>

#include "oracles.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/parser.hpp"

using namespace qsuper;

namespace {

const char* kContractions[] = {"contract.eq8", "contract.eq9", "contract.eq24"};

ContractionResult run(const ContractionData& d) { return contract(catalog_presentation(d.source), d.scheme); }

}  // namespace

TEST_CASE("catalog contractions reach their targets") {
  for (const char* id : kContractions) {
    auto d = *catalog_get(id).contraction;
    INFO(id);
    auto res = run(d);
    CHECK(ideals_equal_upto_degree(catalog_presentation(d.target), res.presentation, 3).passed());
    CHECK(!res.report.relations.empty());
  }
}

TEST_CASE("nilpotent mode agrees with leading order") {
  for (const char* id : kContractions) {
    auto d = *catalog_get(id).contraction;
    auto lead = run(d);
    d.scheme.mode = ContractionMode::Nilpotent;
    auto nil = run(d);
    INFO(id);
    CHECK(ideals_equal_upto_degree(lead.presentation, nil.presentation, 3).passed());
  }
}

TEST_CASE("only q mod eps^2 matters") {
  auto ps = ParameterSet().even("eps").even("v");
  for (const char* id : kContractions) {
    auto d = *catalog_get(id).contraction;
    auto base = run(d);
    d.scheme.param_subst[Var::free("q")] = parse_scalar("1 + eps*v + eps^2*v^2/2", ps);
    INFO(id);
    CHECK(ideals_equal_upto_degree(base.presentation, run(d).presentation, 3).passed());
  }
}

TEST_CASE("a truncation that is too low is reported") {
  auto d = *catalog_get("contract.eq24").contraction;
  d.scheme.mode = ContractionMode::Nilpotent;
  d.scheme.nil_order = 2;
  try {
    run(d);
    FAIL("expected TruncationTooLow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationTooLow);
  }
}

TEST_CASE("the contraction report covers every relation") {
  auto d = *catalog_get("contract.eq24").contraction;
  auto res = run(d);
  CHECK(res.report.relations.size() == interreduced(catalog_presentation(d.source)).relations.size());
  for (const auto& e : res.report.relations) CHECK(e.valuation.has_value());
}

TEST_CASE("eps must be fresh") {
  auto d = *catalog_get("contract.eq8").contraction;
  d.scheme.eps = "q";
  CHECK_THROWS_AS(run(d), Error);
}

TEST_CASE("flatness of the superspace contraction") {
  auto res = run(*catalog_get("contract.eq24").contraction);
  CHECK(flatness_check(catalog_presentation("pres.eq23"), res.presentation, 4).passed());
}
