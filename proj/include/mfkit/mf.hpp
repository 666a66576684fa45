#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfkit/group_action.hpp"
#include "mfkit/polymatrix.hpp"
#include "mfkit/weights.hpp"

namespace mfkit {

/// Grading data: weights on both variable sets, the common degree D, and the
/// internal degrees of the module generators. An entry of d1 from odd
/// generator j to even generator i has degree odd[j] - even[i] + D/2; an entry
/// of d0 from even i to odd j has degree even[i] - odd[j] + D/2.
struct Grading {
  WeightSystem source_weights;
  WeightSystem target_weights;
  mpq_class degree;
  std::vector<mpq_class> even_degrees;
  std::vector<mpq_class> odd_degrees;
};

/// A matrix factorization of V(y) - U(x) in block form d = [[0, d1], [d0, 0]].
/// d1 maps X^1 to X^0 (even_rank x odd_rank), d0 maps X^0 to X^1.
/// U, V and the blocks all live on `ring` = source variables then target variables.
struct MatrixFactorization {
  Ring source;
  Ring target;
  Ring ring;
  Polynomial U;
  Polynomial V;
  PolyMatrix d1;
  PolyMatrix d0;
  std::optional<Grading> grading;

  std::size_t even_rank() const { return d1.rows(); }
  std::size_t odd_rank() const { return d1.cols(); }
  Polynomial potential() const { return V - U; }
  /// The full odd operator [[0, d1], [d0, 0]].
  PolyMatrix full() const;
  /// U restricted to the source ring, V to the target ring.
  Polynomial source_potential() const { return U.to_ring(source); }
  Polynomial target_potential() const { return V.to_ring(target); }
};

/// Assembles a factorization, moving every input onto the joint ring.
MatrixFactorization make_factorization(const Ring& source, const Ring& target, const Polynomial& U, const Polynomial& V,
                                       const PolyMatrix& d1, const PolyMatrix& d0,
                                       std::optional<Grading> grading = std::nullopt);

struct Violation {
  std::string check;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string detail;
};

struct VerifyReport {
  bool pass = true;
  std::vector<Violation> violations;
};

/// Checks d1*d0 = (V-U) Id and d0*d1 = (V-U) Id, plus homogeneity when graded.
/// Throws DimensionMismatch when the block shapes are incompatible.
VerifyReport mf_verify(const MatrixFactorization& X);

struct KoszulPair {
  Polynomial a;
  Polynomial b;
};

/// Graded tensor product of the rank-one factorizations [[0, a_i], [b_i, 0]].
/// Requires sum a_i b_i = V - U exactly.
MatrixFactorization koszul(const std::vector<KoszulPair>& pairs, const Ring& source, const Ring& target,
                           const Polynomial& U, const Polynomial& V);

/// Exact quotient of p by (y - x) for ring variables y, x.
Polynomial divide_by_difference(const Polynomial& p, std::size_t y, std::size_t x);

/// Clone names for the target copy of W's variables ("x" becomes "x_t").
std::vector<std::string> target_names(const Ring& source);

/// Difference-quotient pairs (y_i - x_i, d^[i] W) on the ring (x..., y...).
std::vector<KoszulPair> delta_pairs(const Polynomial& W, const Ring& joint);

/// The diagonal factorization of W(y) - W(x).
MatrixFactorization diagonal_delta(const Polynomial& W);

MatrixFactorization shift(const MatrixFactorization& X);

/// Factorization of U - V with source and target swapped: d1' = -d0^T, d0' = d1^T.
MatrixFactorization dual(const MatrixFactorization& X);

/// Which variable count fixes the parity shift in dagger.
enum class DaggerParity { Total, Source, Target };

/// dual(X) shifted by the parity of the variable count.
MatrixFactorization dagger(const MatrixFactorization& X, DaggerParity parity = DaggerParity::Total);

/// External tensor product over disjoint variable sets:
/// d = d_X (x) Id + sigma_X (x) d_Y, reindexed row-major over (X index, Y index)
/// with even basis vectors first.
MatrixFactorization external_tensor(const MatrixFactorization& X, const MatrixFactorization& Y);

/// The tensor unit: rank (1, 0), no variables, potential 0.
MatrixFactorization unit_factorization();

/// diagonal_delta(W) tensored with the Koszul factorization of u*v for fresh u, v.
MatrixFactorization knorrer_certificate(const Polynomial& W);

/// Graded tensor of two even/odd split operators; returns the reindexing used.
/// index_map[k] gives the (X, Y) full indices of basis vector k of the product.
std::vector<std::pair<std::size_t, std::size_t>> tensor_index_map(std::size_t x_even, std::size_t x_odd,
                                                                   std::size_t y_even, std::size_t y_odd);

/// Equivariant structure: for each generator, even blocks (A0 on X^0, A1 on X^1).
struct EquivariantStructure {
  GroupAction action;
  std::vector<std::pair<PolyMatrix, PolyMatrix>> reps;
};

/// Checks invariance of V - U, the intertwining A_g d^g = d A_g, and the
/// cocycle relations for generator orders and commutators.
VerifyReport equivariant_verify(const MatrixFactorization& X, const EquivariantStructure& E);

/// Builds representations on a Koszul factorization when each generator scales
/// a_i by a constant alpha and b_i by alpha^-1. Throws if the action does not.
EquivariantStructure koszul_equivariant_reps(const std::vector<KoszulPair>& pairs, const GroupAction& action);

}  // namespace mfkit
