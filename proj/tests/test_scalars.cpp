#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/parser.hpp"

using namespace qsuper;

namespace {

ParameterSet qv() { return ParameterSet().even("q").even("v"); }
Scalar S(const std::string& s, const ParameterSet& p = qv()) { return parse_scalar(s, p); }

}  // namespace

TEST_CASE("gauss rationals") {
  GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  GaussRational z(mpq_class(3, 4), mpq_class(-2, 5));
  CHECK((z * z.inverse()).is_one());
  CHECK_THROWS_AS(GaussRational(0).inverse(), Error);
}

TEST_CASE("polynomial gcd divides and is maximal") {
  std::mt19937 rng(7);
  std::vector<Var> vars{Var::free("q"), Var::free("v")};
  for (int trial = 0; trial < 25; ++trial) {
    auto uni = std::vector<Var>{vars[trial % 2]};
    const auto& vs = trial % 3 ? uni : vars;
    Poly g = oracle::random_poly(rng, vs, 3, 2);
    Poly f1 = oracle::random_poly(rng, vs, 3, 2), f2 = oracle::random_poly(rng, vs, 3, 2);
    if (g.is_zero() || f1.is_zero() || f2.is_zero()) continue;
    Poly a = g * f1, b = g * f2;
    Poly d = gcd(a, b);
    CHECK(divide_exact(a, d).has_value());
    CHECK(divide_exact(b, d).has_value());
    CHECK(divide_exact(d, g).has_value());
  }
}

TEST_CASE("rational function arithmetic agrees with evaluation") {
  std::mt19937 rng(11);
  std::vector<Var> vars{Var::free("q"), Var::free("v")};
  for (int trial = 0; trial < 30; ++trial) {
    Poly n1 = oracle::random_poly(rng, vars, 3, 2), d1 = oracle::random_poly(rng, vars, 2, 2);
    Poly n2 = oracle::random_poly(rng, vars, 3, 2), d2 = oracle::random_poly(rng, vars, 2, 2);
    if (d1.is_zero() || d2.is_zero() || n2.is_zero()) continue;
    RatFunc a(n1, d1), b(n2, d2);
    std::map<Var, GaussRational> pt{{vars[0], oracle::random_rational(rng)},
                                    {vars[1], oracle::random_rational(rng)}};
    GaussRational ea, eb;
    try {
      ea = a.evaluate(pt);
      eb = b.evaluate(pt);
      if (eb.is_zero()) continue;
      (a * b).evaluate(pt);
      (a / b).evaluate(pt);
      (a + b).evaluate(pt);
    } catch (const Error&) {
      continue;  // sample hit a pole
    }
    CHECK((a + b).evaluate(pt) == ea + eb);
    CHECK((a - b).evaluate(pt) == ea - eb);
    CHECK((a * b).evaluate(pt) == ea * eb);
    CHECK((a / b).evaluate(pt) == ea / eb);
  }
}

TEST_CASE("canonical form") {
  CHECK(S("(q^2-1)/(q-1)") == S("q+1"));
  CHECK(S("q-1/q") == S("(q^2-1)/q"));
  CHECK(S("2/(2*q)") == S("1/q"));
  CHECK(S("(q-1)/(q-1)").is_one());
  CHECK(S("i*i") == Scalar(-1));
  CHECK(S("q-q").is_zero());
  CHECK(S("i*(q-1)/(q+1)").to_string() == S("(i*q-i)/(q+1)").to_string());
}

TEST_CASE("grassmann and nilpotent parameters") {
  auto ps = ParameterSet().even("q").odd("h").odd("k").nilpotent("iota", 2);
  Scalar h = S("h", ps), k = S("k", ps), iota = S("iota", ps);
  CHECK((h * h).is_zero());
  CHECK(h * k == -(k * h));
  CHECK((iota * iota).is_zero());
  CHECK(h.parity() == 1);
  CHECK((h * k).parity() == 0);
  CHECK(!(h + Scalar(1)).parity().has_value());
  Scalar u = Scalar(1) + iota * S("q", ps) + h * k;
  CHECK((u * u.inverse()).is_one());
  CHECK_THROWS_AS(h.inverse(), Error);
}

TEST_CASE("valuations and limits") {
  auto ps = ParameterSet().even("eps").even("v");
  Var eps = Var::free("eps");
  CHECK(S("eps^2*v/(1+eps)", ps).valuation(eps) == 2);
  CHECK(S("(eps+eps^2)/eps^3", ps).valuation(eps) == -2);
  CHECK(S("(1+eps*v)/(1-eps)", ps).limit_at_zero(eps).is_one());
  CHECK(S("eps/(1+eps)", ps).limit_at_zero(eps).is_zero());
  CHECK_THROWS_AS(S("1/eps", ps).limit_at_zero(eps), Error);
}

TEST_CASE("substitution") {
  auto ps = ParameterSet().even("q").even("eps").even("v");
  Scalar x = S("(q-1)/(q+1)", ps);
  std::map<Var, Scalar> sub{{Var::free("q"), S("1+eps*v", ps)}};
  CHECK(x.substitute(sub) == S("eps*v/(2+eps*v)", ps));
}
