#include <doctest.h>

#include "koszul_suite.hpp"
#include "mfkit/error.hpp"
#include "mfkit/parse.hpp"
#include "mfkit/qdim.hpp"

using namespace mfkit;

namespace {

Polynomial W(const std::string& text) { return parse_polynomial(text, variables_of(text)); }

QDimOptions serial() {
  QDimOptions o;
  o.kernel = Kernel::Serial;
  return o;
}

}  // namespace

TEST_SUITE("qdim") {
  TEST_CASE("calibration settles on a unique convention") {
    const CalibrationReport& c = session_calibration();
    CHECK(c.objects_checked > 0);
    CHECK(c.convention.left_over_target);
    // Re-running on the same suite is deterministic.
    CHECK(calibrate(default_calibration_suite()).convention == c.convention);
  }

  TEST_CASE("unit law on diagonals") {
    for (const char* f : {"x^2", "x^3", "x^4 + y^2", "x^3 + x*y^2", "x^3 + y^3"}) {
      const MatrixFactorization d = diagonal_delta(W(f));
      CAPTURE(f);
      CHECK(qdim_left(d) == Cyclo(1));
      CHECK(qdim_right(d) == Cyclo(1));
    }
  }

  TEST_CASE("adjunction symmetry on the Koszul suite") {
    for (const auto& it : suite::make_suite(101, 30)) {
      const MatrixFactorization X = suite::build(it);
      const MatrixFactorization Xd = calibrated_dagger(X);
      CHECK(qdim_left(X) == qdim_right(Xd));
      CHECK(qdim_right(X) == qdim_left(Xd));
    }
  }

  TEST_CASE("multiplicativity under external tensor products") {
    const auto items = suite::make_suite(202, 20);
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (items[i].vars + items[i + 1].vars > 3) continue;
      const MatrixFactorization a = suite::build(items[i]);
      const MatrixFactorization b = suite::build(items[i + 1], items[i].vars);
      const MatrixFactorization t = external_tensor(a, b);
      CHECK(qdim_left(t) == qdim_left(a) * qdim_left(b));
      CHECK(qdim_right(t) == qdim_right(a) * qdim_right(b));
    }
  }

  TEST_CASE("serial and parallel kernels agree") {
    for (const auto& it : suite::make_suite(303, 12)) {
      const MatrixFactorization X = suite::build(it);
      const RawResidues s = raw_residues(X, serial());
      const RawResidues p = raw_residues(X);
      CHECK(s.over_source == p.over_source);
      CHECK(s.over_target == p.over_target);
    }
    const MatrixFactorization k = knorrer_certificate(W("x^3 + y^3"));
    CHECK(raw_residues(k, serial()).over_target == raw_residues(k).over_target);
  }

  TEST_CASE("Knorrer certificates are invertible with product of modulus one") {
    for (const char* f : {"x^2", "x^3", "x^3 + y^3"}) {
      const QDimResult r = qdim_result(knorrer_certificate(W(f)));
      CAPTURE(f);
      CHECK(r.invertible_left);
      CHECK(r.invertible_right);
      CHECK((r.product == Cyclo(1) || r.product == Cyclo(-1)));
    }
  }

  TEST_CASE("Koszul factorization of W - 0 has zero dimensions") {
    // Central charges of W and of the empty potential differ.
    const QDimResult r = qdim_result(koszul_of_potential(W("x^3")));
    CHECK(r.left.is_zero());
    CHECK(r.right.is_zero());
    CHECK_FALSE(certify_equivalence(koszul_of_potential(W("x^3")), std::nullopt).verdict);
  }

  TEST_CASE("supertrace") {
    const Ring r({"x"});
    PolyMatrix m = PolyMatrix::identity(3, r);
    CHECK(supertrace(m, 1) == parse_polynomial("-1", r));
    CHECK(supertrace(m, 3) == parse_polynomial("3", r));
  }

  TEST_CASE("certificate verdicts") {
    const EquivalenceCertificate c = certify_equivalence(diagonal_delta(W("x^3")), 1);
    CHECK(c.verdict);
    REQUIRE(c.product_matches_group_order);
    CHECK(*c.product_matches_group_order);
    const EquivalenceCertificate d = certify_equivalence(diagonal_delta(W("x^3")), 2);
    CHECK_FALSE(*d.product_matches_group_order);
  }

  TEST_CASE("positive rationals") {
    CHECK(is_positive_rational(Cyclo(mpq_class(3, 2))));
    CHECK_FALSE(is_positive_rational(Cyclo(-2)));
    CHECK_FALSE(is_positive_rational(Cyclo::zeta(3)));
  }

  TEST_CASE("quantum dimensions are scalars") {
    CHECK(scalarity_holds(diagonal_delta(W("x^4 + y^2"))));
    CHECK(scalarity_holds(knorrer_certificate(W("x^3"))));
  }

  TEST_CASE("ungraded input") {
    const Ring x({"x"}), y({"y"});
    const Ring j = x.joined(y);
    // x^2 + x^3 has no quasi-homogeneous weights.
    const MatrixFactorization k =
        koszul({{parse_polynomial("y - x", j), parse_polynomial("y + x + y^2 + x*y + x^2", j)}}, x, y,
               parse_polynomial("x^2 + x^3", x), parse_polynomial("y^2 + y^3", y));
    CHECK_THROWS_AS(raw_residues(k), Ungraded);
  }
}
