#include <doctest.h>

#include "mfkit/error.hpp"
#include "mfkit/parse.hpp"
#include "mfkit/search.hpp"

using namespace mfkit;

namespace {

SearchRequest request(const std::string& u, const std::vector<std::string>& xs, const std::string& v,
                      const std::vector<std::string>& ys, long claim) {
  SearchRequest r;
  r.U = parse_polynomial(u, Ring(xs));
  r.V = parse_polynomial(v, Ring(ys));
  r.group_order_claim = claim;
  return r;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("common weights use a shared degree") {
    const auto [w, D] = common_weights(request("x^3 + x*y^2", {"x", "y"}, "u^6 + v^2", {"u", "v"}, 2));
    CHECK(D == 6);
    CHECK(w.weight("x") == 2);
    CHECK(w.weight("u") == 1);
    CHECK(w.weight("v") == 3);
  }

  TEST_CASE("ungraded requests are rejected") {
    CHECK_THROWS_AS(common_weights(request("x^3 + x^2", {"x"}, "u^2", {"u"}, 1)), Ungraded);
  }

  TEST_CASE("profiles have positive entry degrees") {
    const Ring j({"x", "y", "u", "v"});
    const WeightSystem w({{"x", 2}, {"y", 2}, {"u", 1}, {"v", 3}});
    const auto profiles = entry_degree_profiles(j, w, 6);
    CHECK_FALSE(profiles.empty());
    for (const auto& p : profiles) {
      for (long d : p) CHECK(d > 0);
      // Determinant terms of d1 have degree D.
      CHECK(p[0] + p[3] == 6);
      CHECK(p[1] + p[2] == 6);
    }
  }

  TEST_CASE("monomials of a weighted degree") {
    const Ring j({"x", "y"});
    const WeightSystem w({{"x", 1}, {"y", 2}});
    CHECK(monomials_of_degree(j, w, 4).size() == 3);  // x^4, x^2 y, y^2
  }

  TEST_CASE("D4 to A5 finds a certificate with product 2") {
    SearchOptions o;
    o.group_order_claim = 2;
    const SearchResult r = search(request("x^3 + x*y^2", {"x", "y"}, "u^6 + v^2", {"u", "v"}, 2), o);
    REQUIRE_FALSE(r.certificates.empty());
    bool hit = false;
    for (const auto& c : r.certificates) hit = hit || c.product == Cyclo(2);
    CHECK(hit);
  }

  TEST_CASE("serial and parallel search agree") {
    SearchOptions s;
    s.kernel = Kernel::Serial;
    s.stop_on_claim = false;
    s.budget.max_certificates = 3;
    SearchOptions p = s;
    p.kernel = Kernel::Parallel;
    const auto req = request("x^3 + x*y^2", {"x", "y"}, "u^6 + v^2", {"u", "v"}, 2);
    const SearchResult a = search(req, s), b = search(req, p);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
      CHECK(a.solutions[i].d1 == b.solutions[i].d1);
      CHECK(a.certificates[i].product == b.certificates[i].product);
    }
  }

  TEST_CASE("central charge mismatch is rejected up front") {
    const SearchResult r = search(request("x^3", {"x"}, "u^4", {"u"}, 1));
    CHECK(r.stats.prefilter_rejected);
    CHECK(r.solutions.empty());
  }
}
