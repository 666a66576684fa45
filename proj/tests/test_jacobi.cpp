#include <doctest.h>

#include <random>

#include "mfkit/error.hpp"
#include "mfkit/jacobi.hpp"
#include "mfkit/parse.hpp"

using namespace mfkit;

namespace {

JacobiData J(const std::string& text) { return jacobi_build(parse_polynomial(text, variables_of(text))); }

// Milnor–Orlik: mu = prod (1/q_i - 1) for charges q_i = w_i / D.
mpq_class milnor_oracle(const WeightSystem& w) {
  mpq_class mu = 1;
  for (const auto& [v, q] : w.charges()) mu *= 1 / q - 1;
  return mu;
}

}  // namespace

TEST_SUITE("jacobi") {
  TEST_CASE("ADE Milnor numbers") {
    CHECK(J("x^2").milnor == 1);
    CHECK(J("x^6 + y^2").milnor == 5);
    CHECK(J("x^3 + x*y^2").milnor == 4);
    CHECK(J("x^3 + y^4").milnor == 6);
    CHECK(J("x^3 + x*y^3").milnor == 7);
    CHECK(J("x^3 + y^5").milnor == 8);
  }

  TEST_CASE("three-variable potential quoted with mu 13 has mu 16") {
    // Frozen from an independent computation (sympy Groebner basis of the
    // Jacobian ideal); the weights (2,6,9)/18 give prod(1/q - 1) = 8*2*1 = 16.
    const JacobiData jd = J("x1^6*x2 + x2^3 + x3^2");
    CHECK(jd.milnor == 16);
    CHECK(milnor_oracle(jd.weights) == 16);
  }

  TEST_CASE("Milnor number matches the weight formula on random Brieskorn-Pham sums") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 3);
      std::string text;
      for (int i = 0; i < n; ++i) {
        if (i) text += " + ";
        text += "x" + std::to_string(i) + "^" + std::to_string(2 + rng() % 5);
      }
      const JacobiData jd = J(text);
      CAPTURE(text);
      CHECK(mpq_class(static_cast<long>(jd.milnor)) == milnor_oracle(jd.weights));
    }
  }

  TEST_CASE("residue of the Hessian is the Milnor number") {
    for (const char* f : {"x^5", "x^4 + y^3", "x^3 + x*y^2", "x^3 + y^3 + z^2", "x^2*y + y^4 + z^3"}) {
      const JacobiData jd = J(f);
      CAPTURE(f);
      CHECK(residue(jd.hessian, jd) == Cyclo(static_cast<long>(jd.milnor)));
    }
  }

  TEST_CASE("residue vanishes below the socle") {
    const JacobiData jd = J("x^4 + y^3");
    const Ring& r = jd.potential.ring();
    CHECK(residue(parse_polynomial("1", r), jd).is_zero());
    CHECK(residue(parse_polynomial("x*y", r), jd).is_zero());
    CHECK_FALSE(residue(parse_polynomial("x^2*y", r), jd).is_zero());
  }

  TEST_CASE("basis size is independent of the monomial order") {
    const Polynomial f = parse_polynomial("x^3 + x*y^3", Ring({"x", "y"}));
    CHECK(jacobi_build(f, MonomialOrder::grevlex()).basis.size() == jacobi_build(f, MonomialOrder::lex()).basis.size());
  }

  TEST_CASE("failures") {
    CHECK_THROWS_AS(J("x^4 + x^2*y^2"), NotIsolated);
    CHECK_THROWS_AS(J("x^3 + x^2 + y^2"), Inhomogeneous);
  }
}
