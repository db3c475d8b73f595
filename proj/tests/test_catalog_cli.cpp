#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "qsuper/cli.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/io.hpp"
#include "qsuper/parser.hpp"

using namespace qsuper;

namespace {

const std::string kData = QSUPER_TEST_DATA;

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  int code = run_command(args, o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("catalog lookup") {
  auto e = catalog_get("R.glq2");
  CHECK(e.kind == EntryKind::RMatrix);
  auto p27 = catalog_presentation("pres.eq27");
  ParseContext ctx{p27.params, p27.alphabet};
  auto rs = orient_relations(p27);
  CHECK(rs.normal_form(parse_expression("k*kinv - 1", ctx)).is_zero());
  CHECK(rs.normal_form(parse_expression("kinv*k - 1", ctx)).is_zero());
  try {
    catalog_get("nosuch");
    FAIL("expected UnknownId");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::UnknownId);
    CHECK(std::string(err.what()).find("did you mean") != std::string::npos);
  }
  for (const auto& id : catalog_ids()) {
    auto entry = catalog_get(id);
    if (entry.kind != EntryKind::Pipeline) CHECK(!entry.anchor.empty());
  }
}

TEST_CASE("json round trips") {
  for (const auto& id : catalog_ids()) {
    auto e = catalog_get(id);
    if (!e.presentation) continue;
    INFO(id);
    auto back = presentation_from_json(to_json(*e.presentation));
    CHECK(back.relations.size() == e.presentation->relations.size());
    CHECK(ideals_equal_upto_degree(*e.presentation, back, 2).passed());
    CHECK(to_json(back) == to_json(*e.presentation));
  }
  auto d = *catalog_get("R.glq12").rmatrix;
  auto f = rmatrix_from_json(rmatrix_to_json(d.r, d.params, d.parities));
  CHECK(is_zero(SMatrix(f.r - d.r)));
  CHECK(f.parities == d.parities);
}

TEST_CASE("command exit codes") {
  CHECK(cli({"verify-ybe", "--catalog", "R.glq2"}) == 0);
  CHECK(cli({"verify-ybe", "--file", kData + "/glq2.json"}) == 0);
  std::string out;
  CHECK(cli({"verify-ybe", "--file", kData + "/broken.json"}, &out) == 1);
  CHECK(out.find("residual") != std::string::npos);
  CHECK(cli({"verify-ybe", "--catalog", "nosuch"}) == 2);
  CHECK(cli({"frobnicate"}) == 2);
  CHECK(cli({"verify-ybe"}) == 2);
  CHECK(cli({"derive", "--catalog", "R.glq2"}) == 0);
  CHECK(cli({"derive", "--file", kData + "/glq2.json", "--compare", "pres.cq2", "--kind", "space"}) == 0);
  CHECK(cli({"transform", "--catalog", "map.eq22"}) == 0);
  CHECK(cli({"transform", "--file", kData + "/eq7_map.json", "--source", "pres.cq2", "--compare",
             "pres.eq8"}) == 0);
  CHECK(cli({"contract", "--catalog", "contract.eq8", "--mode", "nilpotent"}) == 0);
  CHECK(cli({"contract", "--file", kData + "/eq8_scheme.json", "--source", "pres.eq8", "--compare",
             "pres.ch2"}) == 0);
  CHECK(cli({"limit", "--catalog", "pres.eq15", "--param", "v", "--compare", "pres.eq16"}) == 0);
  CHECK(cli({"coact", "--catalog", "coact.eq17"}) == 0);
  CHECK(cli({"coact", "--file", kData + "/eq4_coaction.json"}) == 0);
  CHECK(cli({"pbw", "--catalog", "pres.eq21"}) == 0);
  CHECK(cli({"pbw", "--file", kData + "/hplane.json"}) == 0);
  CHECK(cli({"confluence", "--catalog", "pres.eq6"}) == 0);
  CHECK(cli({"confluence", "--catalog", "pres.eq23"}) == 1);
  CHECK(cli({"compare", "--catalog", "pres.cq2", "--with", "pres.cq2"}) == 0);
  CHECK(cli({"compare", "--catalog", "pres.cq2", "--with", "pres.eq11"}) == 1);
  CHECK(cli({"quotient", "--catalog", "pres.eq24", "--generator", "x", "--value", "1", "--compare",
             "pres.eq25"}) == 0);
  CHECK(cli({"catalog"}) == 0);
  CHECK(cli({"catalog", "pres.eq27"}) == 0);
  CHECK(cli({"pipeline", "eq18"}) == 3);
  CHECK(cli({"pipeline", "eq13"}) == 0);
  CHECK(cli({"pipeline", "nosuch"}) == 2);
}

TEST_CASE("json reports are deterministic") {
  std::string a = "qsuper_det_a.json", b = "qsuper_det_b.json";
  CHECK(cli({"pipeline", "eq13", "--quiet", "--json", a}) == 0);
  CHECK(cli({"pipeline", "eq13", "--quiet", "--json", b}) == 0);
  CHECK(slurp(a) == slurp(b));
  auto j = load_json_file(a);
  CHECK(j.at("result") == "pass");
  CHECK(j.at("reports").size() == 3);
  std::remove(a.c_str());
  std::remove(b.c_str());
}
