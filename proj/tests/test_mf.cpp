#include <doctest.h>

#include "koszul_suite.hpp"
#include "mfkit/error.hpp"
#include "mfkit/mf.hpp"
#include "mfkit/parse.hpp"

using namespace mfkit;

namespace {

Polynomial W(const std::string& text) { return parse_polynomial(text, variables_of(text)); }

bool same(const MatrixFactorization& a, const MatrixFactorization& b) {
  return a.source == b.source && a.target == b.target && a.U == b.U && a.V == b.V && a.d1 == b.d1 && a.d0 == b.d0;
}

}  // namespace

TEST_SUITE("mfcore") {
  TEST_CASE("diagonal factorizations verify") {
    for (const char* f : {"x^2", "x^3", "x^4 + y^2", "x^3 + x*y^2", "x^3 + y^3", "x^2*y + y^3 + z^2"}) {
      const MatrixFactorization d = diagonal_delta(W(f));
      CAPTURE(f);
      CHECK(mf_verify(d).pass);
      CHECK(d.grading.has_value());
      CHECK(d.even_rank() == d.odd_rank());
    }
  }

  TEST_CASE("wrong potential yields a violation witness") {
    MatrixFactorization d = diagonal_delta(W("x^3"));
    d.V = d.V + Polynomial::variable(d.ring, d.target.name(0)).pow(2);
    const VerifyReport r = mf_verify(d);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().row == 0);
  }

  TEST_CASE("non-square blocks are rejected") {
    const Ring x({"x"}), y({"y"});
    const Ring j = x.joined(y);
    CHECK_THROWS_AS(mf_verify(make_factorization(x, y, W("x^2").to_ring(x), W("y^2").to_ring(y), PolyMatrix(1, 1, j),
                                                  PolyMatrix(2, 1, j))),
                    DimensionMismatch);
  }

  TEST_CASE("Koszul suite verifies") {
    for (const auto& it : suite::make_suite(3, 24)) CHECK(mf_verify(suite::build(it)).pass);
  }

  TEST_CASE("shift and dual are involutions up to sign conventions") {
    for (const auto& it : suite::make_suite(5, 12)) {
      const MatrixFactorization X = suite::build(it);
      CHECK(same(shift(shift(X)), X));
      CHECK(mf_verify(dual(X)).pass);
      CHECK(mf_verify(shift(X)).pass);
      // dual(dual(X)) negates both blocks, which is isomorphic to X via diag(1, -1).
      const MatrixFactorization dd = dual(dual(X));
      CHECK(dd.d1 == -X.d1);
      CHECK(dd.d0 == -X.d0);
    }
  }

  TEST_CASE("dual swaps source and target") {
    const MatrixFactorization d = diagonal_delta(W("x^3"));
    const MatrixFactorization t = dual(d);
    CHECK(t.source == d.target);
    CHECK(t.target == d.source);
    CHECK(t.potential().to_ring(d.ring) == -d.potential());
  }

  TEST_CASE("external tensor products verify and ranks multiply") {
    const auto items = suite::make_suite(9, 6);
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      const MatrixFactorization a = suite::build(items[i]);
      const MatrixFactorization b = suite::build(items[i + 1], items[i].vars);
      const MatrixFactorization t = external_tensor(a, b);
      CHECK(mf_verify(t).pass);
      CHECK(t.even_rank() == a.even_rank() * b.even_rank() + a.odd_rank() * b.odd_rank());
      CHECK(t.potential() == a.potential().to_ring(t.ring) + b.potential().to_ring(t.ring));
    }
  }

  TEST_CASE("unit is neutral for the tensor product") {
    const MatrixFactorization d = diagonal_delta(W("x^3 + y^2"));
    const MatrixFactorization t = external_tensor(unit_factorization(), d);
    CHECK(t.d1 == d.d1);
    CHECK(t.d0 == d.d0);
  }

  TEST_CASE("tensor index map lists even indices first") {
    const auto m = tensor_index_map(1, 1, 1, 1);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(m[1] == std::pair<std::size_t, std::size_t>{1, 1});
  }

  TEST_CASE("Knorrer certificates verify") {
    for (const char* f : {"x^2", "x^3", "x^3 + y^3"}) {
      const MatrixFactorization k = knorrer_certificate(W(f));
      CAPTURE(f);
      CHECK(mf_verify(k).pass);
      CHECK(k.target.size() == k.source.size() + 2);
    }
  }

  TEST_CASE("difference quotient") {
    const Ring r({"x", "y"});
    const Polynomial p = parse_polynomial("y^3 - x^3", r);
    const Polynomial q = divide_by_difference(p, 1, 0);
    CHECK(q * parse_polynomial("y - x", r) == p);
  }

  TEST_CASE("graded Koszul factorization of a rank-1 pair") {
    const Ring x({"x"}), y({"y"});
    const Ring j = x.joined(y);
    const MatrixFactorization k = koszul({{parse_polynomial("y - x", j), parse_polynomial("y + x", j)}}, x, y,
                                         parse_polynomial("x^2", x), parse_polynomial("y^2", y));
    CHECK(mf_verify(k).pass);
    CHECK_THROWS_AS(koszul({{parse_polynomial("y", j), parse_polynomial("y", j)}}, x, y, parse_polynomial("x^2", x),
                           parse_polynomial("y^2", y)),
                    Error);
  }

  TEST_CASE("equivariant structure on a Koszul factorization") {
    // Z/2 acting by (x, y) -> (-x, -y) on (y - x)(y + x).
    const Ring x({"x"}), y({"y"});
    const Ring j = x.joined(y);
    const std::vector<KoszulPair> pairs{{parse_polynomial("y - x", j), parse_polynomial("y + x", j)}};
    GroupAction a;
    a.vars = j;
    a.generators = {{{"x", parse_polynomial("-x", j)}, {"y", parse_polynomial("-y", j)}}};
    a.orders = {2};
    a.group_order = 2;
    const MatrixFactorization k = koszul(pairs, x, y, parse_polynomial("x^2", x), parse_polynomial("y^2", y));
    CHECK(equivariant_verify(k, koszul_equivariant_reps(pairs, a)).pass);
  }
}
