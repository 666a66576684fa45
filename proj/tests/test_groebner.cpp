#include <doctest.h>

#include "mfkit/error.hpp"
#include "mfkit/groebner.hpp"
#include "mfkit/parse.hpp"
#include "mfkit/polysolve.hpp"

using namespace mfkit;

namespace {

const Ring xyz({"x", "y", "z"});

Polynomial P(const std::string& text, const Ring& r = xyz) { return parse_polynomial(text, r, 3); }

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("reduced basis of a twisted cubic") {
    const auto gb = buchberger({P("y - x^2"), P("z - x^3")}, MonomialOrder::lex());
    // Every generator reduces to zero and the curve equations lie in the ideal.
    CHECK(gb.normal_form(P("y^3 - z^2")).is_zero());
    CHECK(gb.normal_form(P("x*z - y^2")).is_zero());
    CHECK_FALSE(gb.normal_form(P("x*y - 1")).is_zero());
  }

  TEST_CASE("normal form is order independent on ideal membership") {
    const std::vector<Polynomial> gens{P("x^2 + y*z"), P("y^2 - x*z"), P("z^3 - x")};
    const auto a = buchberger(gens, MonomialOrder::grevlex());
    const auto b = buchberger(gens, MonomialOrder::lex());
    for (const auto& g : gens) {
      CHECK(a.normal_form(g).is_zero());
      CHECK(b.normal_form(g).is_zero());
    }
    CHECK(quotient_basis(a).dimension() == quotient_basis(b).dimension());
  }

  TEST_CASE("unit ideal") {
    const auto gb = buchberger({P("x"), P("x - 1")}, MonomialOrder::grevlex());
    CHECK(gb.is_unit());
  }

  TEST_CASE("infinite quotient is reported") {
    const auto gb = buchberger({P("x*y")}, MonomialOrder::grevlex());
    CHECK_FALSE(quotient_basis(gb).finite);
  }

  TEST_CASE("budget is enforced") {
    GroebnerOptions tight;
    tight.max_steps = 2;
    const std::vector<Polynomial> cyclic3{P("x + y + z"), P("x*y + y*z + z*x"), P("x*y*z - 1")};
    CHECK_THROWS_AS(buchberger(cyclic3, MonomialOrder::grevlex(), tight), ResourceLimit);
    CHECK_NOTHROW(buchberger(cyclic3, MonomialOrder::grevlex()));
  }

  TEST_CASE("cyclotomic coefficients") {
    const auto gb = buchberger({P("x^2 + x + 1")}, MonomialOrder::grevlex());
    CHECK(gb.normal_form(P("(x - zeta3)*(x - zeta3^2)")).is_zero());
  }

  TEST_CASE("elimination drops variables") {
    // Image of t -> (t^2, t^3).
    const Ring r({"t", "a", "b"});
    const auto rel = eliminate({P("a - t^2", r), P("b - t^3", r)}, {"t"});
    REQUIRE(rel.size() == 1);
    const Polynomial expected = P("a^3 - b^2", rel[0].ring());
    CHECK((rel[0] == expected || rel[0] == -expected));
  }

  TEST_CASE("zero-dimensional solving") {
    const Ring r({"a", "b"});
    const auto out = solve_zero_dimensional({P("a^2 - 1", r), P("b - a", r)}, r);
    CHECK(out.complete);
    CHECK(out.solutions.size() == 2);
    for (const auto& s : out.solutions) CHECK(s[0] == s[1]);
  }

  TEST_CASE("univariate roots over the field") {
    bool complete = true;
    // x^2 + x + 1 splits over Q(zeta3).
    const auto roots = univariate_roots({Cyclo(1), Cyclo(1), Cyclo(1)}, complete);
    CHECK(roots.size() == 2);
    for (const auto& x : roots) CHECK(x * x + x + Cyclo(1) == Cyclo(0));
  }
}
