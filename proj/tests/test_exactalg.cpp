#include <doctest.h>

#include <random>

#include "mfkit/error.hpp"
#include "mfkit/parse.hpp"
#include "mfkit/weights.hpp"

using namespace mfkit;

namespace {

Polynomial P(const std::string& text, const std::vector<std::string>& vars, unsigned order = 1) {
  return parse_polynomial(text, Ring(vars), order);
}

}  // namespace

TEST_SUITE("exactalg") {
  TEST_CASE("cyclotomic identities") {
    const Cyclo z = Cyclo::zeta(3);
    CHECK(z.pow(3) == Cyclo(1));
    CHECK(Cyclo(1) + z + z * z == Cyclo(0));
    CHECK(z * z.inverse() == Cyclo(1));
    CHECK(Cyclo::zeta(4).pow(2) == Cyclo(-1));
    CHECK(Cyclo::zeta(2) == Cyclo(-1));
    // zeta_6 = -zeta_3^2 lives in the same field.
    CHECK(Cyclo::zeta(6) == -(z * z));
    CHECK_FALSE(z.is_rational());
    CHECK((z + z * z).is_rational());
  }

  TEST_CASE("inverse is exact on random field elements") {
    std::mt19937_64 rng(7);
    for (unsigned order : {3u, 4u, 5u, 8u, 12u}) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<mpq_class> c(euler_phi(order));
        for (auto& q : c) {
          q = mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
          q.canonicalize();
        }
        const Cyclo a(order, c);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Cyclo(1));
      }
    }
  }

  TEST_CASE("polynomial parse and print round trip") {
    const Ring r({"x", "y"});
    for (const char* text : {"x^3 + x*y^2", "1/2*x^2 - 3*y", "zeta3*x + zeta3^2*y", "(x - y)^3"}) {
      const Polynomial p = parse_polynomial(text, r, 3);
      CHECK(parse_polynomial(p.to_string(), r, 3) == p);
    }
    CHECK(P("(x+y)^2", {"x", "y"}) == P("x^2 + 2*x*y + y^2", {"x", "y"}));
  }

  TEST_CASE("parse errors report a position") {
    const Ring r({"x"});
    CHECK_THROWS_AS(parse_polynomial("x +", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x + q", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
    try {
      parse_polynomial("x * ) ", r);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }

  TEST_CASE("variables are read in order of appearance") {
    CHECK(variables_of("x1^6*x2 + x2^3 + x3^2").names() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(variables_of("zeta3*y + x").names() == std::vector<std::string>{"y", "x"});
  }

  TEST_CASE("derivatives and substitution") {
    const Polynomial f = P("x^3*y + y^4", {"x", "y"});
    CHECK(f.derivative("x") == P("3*x^2*y", {"x", "y"}));
    CHECK(f.derivative("y") == P("x^3 + 4*y^3", {"x", "y"}));
    Substitution s{{"x", P("y", {"x", "y"})}, {"y", P("y", {"x", "y"})}};
    CHECK(substitute(f, s) == P("2*y^4", {"x", "y"}));
  }

  TEST_CASE("weight inference") {
    const auto w = infer_weights(P("x^3 + x*y^2", {"x", "y"}));
    REQUIRE(w);
    CHECK(w->weight("x") == 1);
    CHECK(w->weight("y") == 1);
    CHECK(w->degree() == 3);
    const auto e8 = infer_weights(P("x^3 + y^5", {"x", "y"}));
    REQUIRE(e8);
    CHECK(e8->weight("x") == 5);
    CHECK(e8->weight("y") == 3);
    CHECK(e8->degree() == 15);
    CHECK_FALSE(infer_weights(P("x^3 + x^2 + y^2", {"x", "y"})));
  }

  TEST_CASE("central charge is sum of 1 - 2 q_i") {
    const Polynomial f = P("x^3 + y^3", {"x", "y"});
    const auto w = infer_weights(f);
    REQUIRE(w);
    CHECK(central_charge(f, *w) == mpq_class(2, 3));
  }

  TEST_CASE("weighted degree classification") {
    const WeightSystem w({{"x", 1}, {"y", 2}});
    CHECK(weighted_degree(P("x^2 + y", {"x", "y"}), w).kind == DegreeInfo::Kind::Homogeneous);
    CHECK(weighted_degree(P("x + y", {"x", "y"}), w).kind == DegreeInfo::Kind::Inhomogeneous);
    CHECK(weighted_degree(Polynomial(Ring({"x", "y"})), w).kind == DegreeInfo::Kind::Zero);
  }
}
