#include <doctest.h>

#include "mfkit/equivariance.hpp"
#include "mfkit/error.hpp"
#include "mfkit/parse.hpp"

using namespace mfkit;

namespace {

const Ring uv({"u", "v"});
const Ring uvw({"u", "v", "w"});

Polynomial P(const std::string& text, const Ring& r) { return parse_polynomial(text, r, 3); }

}  // namespace

TEST_SUITE("equivariance") {
  TEST_CASE("sign action on two variables") {
    const GroupAction a = make_action(uv, {{{"u", "-u"}, {"v", "-v"}}}, {2});
    CHECK(action_verify(a).pass);
    CHECK(a.group_order == 2);
    CHECK(group_elements(a).size() == 2);
    CHECK(invariance_check(P("u^6 + v^2", uv), a));
    CHECK_FALSE(invariance_check(P("u^3 + v^2", uv), a));
  }

  TEST_CASE("declared order must be the exact order") {
    CHECK_FALSE(action_verify(make_action(uv, {{{"u", "-u"}}}, {4})).pass);
    CHECK_FALSE(action_verify(make_action(uv, {{{"u", "zeta3*u"}}}, {2}, 3)).pass);
  }

  TEST_CASE("non-linear involutions square to the identity") {
    const GroupAction k = make_action(uvw, {{{"u", "-u"}, {"w", "-w - u^4"}}}, {2});
    CHECK(action_verify(k).pass);
    CHECK(invariance_check(P("v^3 + u^8 + (w + 1/2*u^4)^2", uvw), k));
    const GroupAction e = make_action(uvw, {{{"u", "-u"}, {"w", "-w + u^8"}}}, {2});
    CHECK(action_verify(e).pass);
    CHECK(invariance_check(P("v^3 + u^16 + (w - 1/2*u^8)^2", uvw), e));
  }

  TEST_CASE("an action moving the origin is rejected") {
    CHECK_FALSE(action_verify(make_action(uv, {{{"u", "1 - u"}}}, {2})).pass);
  }

  TEST_CASE("Reynolds projection is idempotent and lands in invariants") {
    const GroupAction a = make_action(Ring({"y1", "y2"}), {{{"y1", "zeta3*y1"}, {"y2", "zeta3^2*y2"}}}, {3}, 3);
    const Ring r({"y1", "y2"});
    const Polynomial p = P("y1^3 + y1*y2 + y1^2 + 5*y2^3 + y2", r);
    const Polynomial q = reynolds(p, a);
    CHECK(q == P("y1^3 + y1*y2 + 5*y2^3", r));
    CHECK(reynolds(q, a) == q);
    CHECK(invariance_check(q, a));
  }

  TEST_CASE("invariants of Z/2 on the plane") {
    const InvariantData inv = invariant_generators(make_action(uv, {{{"u", "-u"}, {"v", "-v"}}}, {2}));
    REQUIRE(inv.gens.size() == 3);
    CHECK(inv.gens[0] == P("u^2", uv));
    CHECK(inv.gens[1] == P("u*v", uv));
    CHECK(inv.gens[2] == P("v^2", uv));
    REQUIRE(inv.relations.size() == 1);
    const Polynomial rel = P("z2^2 - z1*z3", inv.z_ring);
    CHECK((inv.relations[0] == rel || inv.relations[0] == -rel));
  }

  TEST_CASE("invariants of the diagonal Z/3 action") {
    const Ring r({"y1", "y2"});
    const InvariantData inv =
        invariant_generators(make_action(r, {{{"y1", "zeta3*y1"}, {"y2", "zeta3^2*y2"}}}, {3}, 3));
    REQUIRE(inv.gens.size() == 3);
    CHECK(inv.gens[0] == P("y1*y2", r));
    REQUIRE(inv.relations.size() == 1);
    const Polynomial rel = P("z1^3 - z2*z3", inv.z_ring);
    CHECK((inv.relations[0] == rel || inv.relations[0] == -rel));
  }

  TEST_CASE("too small a degree bound throws") {
    CHECK_THROWS_AS(invariant_generators(make_action(uv, {{{"u", "-u"}, {"v", "-v"}}}, {2}), 1), Error);
  }

  TEST_CASE("descent witness for the sign action on u^6 + v^2") {
    const GroupAction a = make_action(uv, {{{"u", "-u"}, {"v", "-v"}}}, {2});
    const InvariantData inv = invariant_generators(a);
    DescentWitness w;
    w.action = a;
    w.f = P("u^6 + v^2", uv);
    w.invariant_gens = inv.gens;
    w.z_ring = inv.z_ring;
    w.relations = inv.relations;
    w.F = P("z1^3 + z3", inv.z_ring);
    const Ring st({"s", "t"});
    w.chart_map = {{"z1", P("s", st)}, {"z2", P("s*t", st)}, {"z3", P("s*t^2", st)}};
    w.f_hat = P("s^3 + s*t^2", st);
    const DescentReport r = descent_verify(w);
    CHECK(r.pass);
    CHECK(r.milnor_f == 5);
    CHECK(r.milnor_f_hat == 4);

    w.F = P("z1^3 + z2", inv.z_ring);
    CHECK_FALSE(descent_verify(w).pass);
  }
}
