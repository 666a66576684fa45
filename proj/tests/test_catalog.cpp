#include <doctest.h>

#include <random>

#include "mfkit/catalog.hpp"
#include "mfkit/error.hpp"
#include "mfkit/jacobi.hpp"

using namespace mfkit;

namespace {

const CatalogRow* row(const CatalogReport& r, const std::string& kind, const std::string& name) {
  for (const auto& x : r.rows)
    if (x.kind == kind && x.name == name) return &x;
  return nullptr;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("ADE entries have Milnor number equal to the subscript") {
    const Catalog c = catalog_load();
    for (unsigned n = 1; n <= 10; ++n) {
      CHECK(jacobi_build(normal_form_A(n)).milnor == n);
      if (n >= 3) CHECK(jacobi_build(normal_form_D(n)).milnor == n);
    }
    CHECK(jacobi_build(c.entry("E6")->potential).milnor == 6);
    CHECK(jacobi_build(c.entry("E7")->potential).milnor == 7);
    CHECK(jacobi_build(c.entry("E8")->potential).milnor == 8);
  }

  TEST_CASE("pairs and nonexamples") {
    const Catalog c = catalog_load();
    REQUIRE(c.pair("A5", "D4"));
    CHECK(c.pair("A5", "D4")->group_order == 2);
    CHECK(c.pair("D4", "A5") == c.pair("A5", "D4"));
    CHECK(c.is_nonexample("A11", "E6"));
    CHECK_FALSE(c.is_nonexample("A5", "D4"));
  }

  TEST_CASE("external pairs ship disabled") {
    const Catalog c = catalog_load();
    for (const auto& p : c.pairs)
      if (p.source == "W13" || p.source == "K14" || p.source == "E18" || p.source == "E30") CHECK_FALSE(p.enabled);
    CatalogOptions o;
    o.enable_external = true;
    for (const auto& p : catalog_load(o).pairs) CHECK(p.enabled);
  }

  TEST_CASE("verification rows") {
    const CatalogReport r = catalog_verify(catalog_load());
    for (const char* name : {"A5", "D4", "E8", "A2xA2"}) {
      REQUIRE(row(r, "entry", name));
      CHECK(row(r, "entry", name)->pass);
    }
    REQUIRE(row(r, "pair", "A2xA2~D4"));
    CHECK(row(r, "pair", "A2xA2~D4")->pass);
    REQUIRE(row(r, "pair", "A5~D4"));
    CHECK(row(r, "pair", "A5~D4")->pass);
    // The quoted three-variable potential has mu 16, so its row is reported as failing.
    REQUIRE(row(r, "entry", "Z13"));
    CHECK_FALSE(row(r, "entry", "Z13")->pass);
    CHECK(row(r, "entry", "Z13")->milnor == 16);
  }

  TEST_CASE("an injected wrong Milnor number fails only its own row") {
    Catalog c = catalog_load();
    const CatalogReport before = catalog_verify(c);
    for (auto& e : c.entries)
      if (e.name == "A4") e.expected_milnor = 5;
    const CatalogReport after = catalog_verify(c);
    REQUIRE(before.rows.size() == after.rows.size());
    for (std::size_t i = 0; i < after.rows.size(); ++i) {
      if (after.rows[i].kind == "entry" && after.rows[i].name == "A4")
        CHECK_FALSE(after.rows[i].pass);
      else
        CHECK(after.rows[i].pass == before.rows[i].pass);
    }
  }

  TEST_CASE("parallel and serial verification agree") {
    const Catalog c = catalog_load();
    const CatalogReport a = catalog_verify(c, false), b = catalog_verify(c, true);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].name == b.rows[i].name);
      CHECK(a.rows[i].pass == b.rows[i].pass);
      CHECK(a.rows[i].status == b.rows[i].status);
    }
  }

  TEST_CASE("chains") {
    const Catalog c = catalog_load();
    const ChainReport r = chain_check(c, {"", {{"A5", "D4", StepKind::McKay}, {"D4", "A2xA2", StepKind::McKay}}});
    CHECK(r.product == Cyclo(6));
    CHECK(r.positive_rational);
    REQUIRE(r.group_orders);
    CHECK(*r.group_orders == std::vector<std::size_t>{2, 3});

    const ChainReport empty = chain_check(c, {"", {}});
    CHECK(empty.product == Cyclo(1));

    const ChainReport bad = chain_check(c, {"", {{"A11", "E6", StepKind::Nonexample}}});
    CHECK(bad.necessary_condition_fails);

    CHECK_THROWS_AS(chain_check(c, {"", {{"A5", "D4", StepKind::McKay}, {"A3", "D3", StepKind::McKay}}}), Error);
  }

  TEST_CASE("chain products are order independent") {
    const Catalog c = catalog_load();
    std::mt19937_64 rng(17);
    const std::vector<ChainStep> pool{{"A3", "D3", StepKind::McKay}, {"A5", "D4", StepKind::McKay},
                                      {"D4", "A2xA2", StepKind::McKay}};
    const ChainReport forward = chain_check(c, {"", {pool[1], pool[2]}});
    const ChainReport backward = chain_check(c, {"", {{"A2xA2", "D4", StepKind::McKay}, {"D4", "A5", StepKind::McKay}}});
    CHECK(forward.product == backward.product);
    for (int trial = 0; trial < 5; ++trial) {
      const auto& s = pool[rng() % pool.size()];
      const ChainReport there = chain_check(c, {"", {s}});
      const ChainReport back = chain_check(c, {"", {{s.to, s.from, s.kind}}});
      CHECK(there.product == back.product);
    }
  }

  TEST_CASE("table has the fixed column order") {
    const std::string t = catalog_table(catalog_verify(catalog_load()));
    CHECK(t.rfind("name", 0) == 0);
    CHECK(t.find("mu") < t.find("weights"));
    CHECK(t.find("weights") < t.find("status"));
  }
}
