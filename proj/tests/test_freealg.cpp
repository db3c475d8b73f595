#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/parser.hpp"

using namespace qsuper;

namespace {

struct Fixture {
  ParameterSet ps = ParameterSet().even("q").odd("h");
  AlphabetPtr alpha = make_alphabet({{"x", 0}, {"theta", 1}, {"y", 0}});
  Element E(const std::string& s) const { return parse_expression(s, ParseContext{ps, alpha}); }
};

Element random_element(const Fixture& f, std::mt19937& rng) {
  static const char* atoms[] = {"x", "theta", "y", "q", "h", "1", "i"};
  std::uniform_int_distribution<int> pick(0, 6), len(1, 3), terms(1, 3);
  std::string s;
  for (int t = terms(rng); t > 0; --t) {
    std::string term;
    for (int k = len(rng); k > 0; --k) term += std::string(term.empty() ? "" : "*") + atoms[pick(rng)];
    s += (s.empty() ? "" : " + ") + term;
  }
  return f.E(s);
}

}  // namespace

TEST_CASE("koszul signs") {
  Fixture f;
  CHECK(f.E("theta*h") == f.E("-h*theta"));
  CHECK(f.E("x*h") == f.E("h*x"));
  CHECK(f.E("theta*h*theta") == f.E("-h*theta*theta"));
  CHECK((f.E("h*theta") * f.E("h*theta")).is_zero());
  CHECK(f.E("q*x*y") == f.E("x*q*y"));
}

TEST_CASE("product is associative") {
  Fixture f;
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Element a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("parser grammar") {
  Fixture f;
  CHECK(f.E("0").is_zero());
  CHECK(f.E("x*y - q*y*x").terms().size() == 2);
  CHECK(f.E("(x + y)^2") == f.E("x*x + x*y + y*x + y*y"));
  CHECK(f.E("x/(q+1)") == f.E("1/(q+1)*x"));
  CHECK(f.E("-x") == f.E("0 - x"));
  auto ctx8 = ParseContext{ParameterSet().even("q"), make_alphabet({{"p", 0}, {"r", 0}})};
  Element e8 = parse_expression("i*(q-1)/(q+1)*(r^2+p^2)", ctx8);
  CHECK(e8.degree() == 2);
  CHECK(e8.terms().size() == 2);

  auto err = [&](const std::string& s) {
    try {
      f.E(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(err("x y") == ErrorKind::SyntaxError);
  CHECK(err("x*") == ErrorKind::SyntaxError);
  CHECK(err("x*z") == ErrorKind::UnknownSymbol);
  CHECK(err("q/x") == ErrorKind::DivisionByGeneratorExpression);
  CHECK(err("x^0") == ErrorKind::SyntaxError);
}

TEST_CASE("print and parse round trip on every catalog relation") {
  for (const auto& id : catalog_ids()) {
    auto e = catalog_get(id);
    if (!e.presentation) continue;
    const auto& p = *e.presentation;
    ParseContext ctx{p.params, p.alphabet};
    for (const auto& r : p.relations) {
      INFO(id << ": " << r.to_string());
      CHECK(parse_expression(r.to_string(), ctx) == r);
    }
  }
}

TEST_CASE("generator substitution is an algebra map") {
  Fixture f;
  std::vector<Element> images{f.E("x + y"), f.E("theta"), f.E("q*y")};
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    Element a = random_element(f, rng), b = random_element(f, rng);
    CHECK(substitute_generators(a * b, images, f.alpha) ==
          substitute_generators(a, images, f.alpha) * substitute_generators(b, images, f.alpha));
  }
}
