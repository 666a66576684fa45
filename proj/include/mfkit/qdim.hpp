#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfkit/jacobi.hpp"
#include "mfkit/mf.hpp"

namespace mfkit {

enum class Kernel { Serial, Parallel };

struct QDimOptions {
  Kernel kernel = Kernel::Parallel;
  GroebnerOptions groebner;
};

/// Trace of the leading even_rank x even_rank block minus trace of the rest.
Polynomial supertrace(const PolyMatrix& M, std::size_t even_rank);

/// Residues of str(prod_i d_{x_i} d * prod_j d_{y_j} d) before any sign.
/// over_target: residue over V in y with x set to 0; over_source: residue over U
/// in x with y set to 0. m, n are the source and target variable counts.
struct RawResidues {
  Cyclo over_source;
  Cyclo over_target;
  std::size_t m = 0;
  std::size_t n = 0;
};

/// Throws Ungraded when a side potential is not quasi-homogeneous.
RawResidues raw_residues(const MatrixFactorization& X, const QDimOptions& options = {});

/// Cached Jacobi data of a potential; weights are inferred.
const JacobiData& cached_jacobi(const Polynomial& f, const GroebnerOptions& options = {});

/// Which quantity a sign exponent is computed from.
enum class SignExponent { BinomSource, BinomTarget, BinomSourcePlusOne, BinomTargetPlusOne };

struct SignConvention {
  bool left_over_target = true;
  SignExponent left_exponent = SignExponent::BinomSource;
  SignExponent right_exponent = SignExponent::BinomTarget;
  DaggerParity dagger_parity = DaggerParity::Total;

  int sign(SignExponent e, std::size_t m, std::size_t n) const;
  std::string describe() const;
  friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

/// The 16 sign pairs considered for a fixed dagger parity; the left dimension is
/// always the residue over the target, which leaves a function of the source.
std::vector<SignConvention> candidate_conventions(DaggerParity parity = DaggerParity::Total);

struct Dims {
  Cyclo left;
  Cyclo right;
};

Dims apply_convention(const RawResidues& raw, const SignConvention& c);
Dims qdims(const MatrixFactorization& X, const SignConvention& c, const QDimOptions& options = {});

struct CalibrationReport {
  SignConvention convention;
  /// Number of surviving candidates (all with identical products).
  std::size_t passing = 0;
  std::size_t objects_checked = 0;
};

/// Picks the convention satisfying the unit law on every diagonal and adjunction
/// symmetry on each diagonal, its Knorrer certificate and that certificate's dual.
/// Dagger parities are tried in the order total, source, target. Survivors that
/// agree on left*right for every arity are interchangeable; the first is kept.
/// Throws CalibrationError ("ambiguous" / "no consistent convention").
CalibrationReport calibrate(const std::vector<Polynomial>& suite, const QDimOptions& options = {});

std::vector<Polynomial> default_calibration_suite();

/// Write-once session convention from the default suite.
const CalibrationReport& session_calibration();
const SignConvention& session_convention();

/// dagger with the dagger parity fixed by the session calibration.
MatrixFactorization calibrated_dagger(const MatrixFactorization& X);

Cyclo qdim_left(const MatrixFactorization& X, const QDimOptions& options = {});
Cyclo qdim_right(const MatrixFactorization& X, const QDimOptions& options = {});

/// The Koszul factorization of W(y) - 0 with pairs (y_i, cofactor), where each
/// monomial is assigned to its first variable.
MatrixFactorization koszul_of_potential(const Polynomial& W);

struct QDimResult {
  Cyclo left;
  Cyclo right;
  Cyclo product;
  bool invertible_left = false;
  bool invertible_right = false;
  bool rational_positive_product = false;
};

QDimResult qdim_result(const MatrixFactorization& X, const QDimOptions& options = {});
bool is_positive_rational(const Cyclo& c);

struct EquivalenceCertificate {
  MatrixFactorization mf;
  QDimResult dims;
  std::optional<long> group_order_claim;
  bool verdict = false;
  std::optional<bool> product_matches_group_order;
};

EquivalenceCertificate certify_equivalence(const MatrixFactorization& X, std::optional<long> claimed_group_order,
                                           const QDimOptions& options = {});

/// Compares the scalar value against the Jacobi-ring class computed with the
/// spectator variables kept symbolic; true when that class is constant and equal.
bool scalarity_holds(const MatrixFactorization& X, const QDimOptions& options = {});

}  // namespace mfkit
