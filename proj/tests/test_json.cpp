#include <doctest.h>

#include "koszul_suite.hpp"
#include "mfkit/error.hpp"
#include "mfkit/json_io.hpp"
#include "mfkit/parse.hpp"

using namespace mfkit;

TEST_SUITE("json") {
  TEST_CASE("factorizations round trip") {
    std::vector<MatrixFactorization> xs{diagonal_delta(parse_polynomial("x^3 + y^2", Ring({"x", "y"}))),
                                        knorrer_certificate(parse_polynomial("x^3", Ring({"x"}))),
                                        unit_factorization()};
    for (const auto& it : suite::make_suite(1, 6)) xs.push_back(suite::build(it));
    for (const auto& X : xs) {
      const Json j = mf_to_json(X);
      const MatrixFactorization Y = mf_from_json(Json::parse(j.dump()));
      CHECK(mf_to_json(Y) == j);
      CHECK(Y.d1 == X.d1);
    }
  }

  TEST_CASE("schema keys") {
    const Json j = mf_to_json(diagonal_delta(parse_polynomial("x^2", Ring({"x"}))));
    for (const char* k : {"source_vars", "target_vars", "U", "V", "d0", "d1", "grading", "cyclotomic_order"})
      CHECK(j.contains(k));
    CHECK(j["grading"]["degree"] == "2");
  }

  TEST_CASE("malformed factorizations") {
    Json j = mf_to_json(diagonal_delta(parse_polynomial("x^2", Ring({"x"}))));
    j["d1"] = Json::array({Json::array({"x", "x"})});
    CHECK_THROWS_AS(mf_from_json(j), DimensionMismatch);
    j = mf_to_json(diagonal_delta(parse_polynomial("x^2", Ring({"x"}))));
    j["U"] = "x +";
    CHECK_THROWS_AS(mf_from_json(j), ParseError);
    CHECK_THROWS_AS(mf_from_json(Json::parse(R"({"source_vars": ["x"]})")), Json::exception);
  }

  TEST_CASE("certificates round trip") {
    const EquivalenceCertificate c =
        certify_equivalence(knorrer_certificate(parse_polynomial("x^3 + y^3", Ring({"x", "y"}))), 1);
    const Json j = certificate_to_json(c);
    CHECK(certificate_to_json(certificate_from_json(j)) == j);
  }

  TEST_CASE("cyclotomic coefficients survive") {
    const auto items = suite::make_suite(20240917, 1);
    const MatrixFactorization X = suite::build(items[0]);
    const Json j = mf_to_json(X);
    CHECK(mf_to_json(mf_from_json(j)) == j);
  }

  TEST_CASE("catalog and witnesses round trip") {
    CatalogOptions o;
    o.enable_external = true;
    const Json j = catalog_to_json(catalog_load(o));
    const Catalog back = catalog_from_json(Json::parse(j.dump()));
    CHECK(catalog_to_json(back) == j);
    for (const auto& p : back.pairs)
      if (p.witness) CHECK(witness_to_json(witness_from_json(witness_to_json(*p.witness))) == witness_to_json(*p.witness));
  }

  TEST_CASE("search requests round trip") {
    SearchRequest r;
    r.U = parse_polynomial("x^3 + x*y^2", Ring({"x", "y"}));
    r.V = parse_polynomial("u^6 + v^2", Ring({"u", "v"}));
    r.group_order_claim = 2;
    SearchBudget b;
    b.max_profiles = 77;
    const Json j = search_request_to_json(r, b);
    SearchOptions o;
    const SearchRequest back = search_request_from_json(j, o);
    CHECK(o.budget.max_profiles == 77);
    CHECK(search_request_to_json(back, o.budget) == j);
  }

  TEST_CASE("search response certificates are readable") {
    SearchRequest r;
    r.U = parse_polynomial("x^3 + x*y^2", Ring({"x", "y"}));
    r.V = parse_polynomial("u^6 + v^2", Ring({"u", "v"}));
    SearchOptions o;
    o.group_order_claim = 2;
    const Json j = search_response_to_json(search(r, o), 2);
    REQUIRE_FALSE(j["certificates"].empty());
    for (const auto& c : j["certificates"]) CHECK(certificate_to_json(certificate_from_json(c)) == c);
  }
}
