#pragma once

#include <vector>

#include "mfkit/groebner.hpp"
#include "mfkit/weights.hpp"

namespace mfkit {

/// Jacobi ring of a quasi-homogeneous potential with an isolated critical point.
struct JacobiData {
  Polynomial potential;
  WeightSystem weights;
  std::vector<Polynomial> partials;
  GroebnerBasis gb;
  /// Standard monomials, ascending graded-lex.
  std::vector<Exponents> basis;
  std::size_t milnor = 0;
  Polynomial hessian;
  Polynomial hessian_nf;
  /// The single standard monomial of top weighted degree.
  Exponents socle_monomial;
  /// residue(h) = socle_scale * (coefficient of the socle monomial in NF(h)).
  Cyclo socle_scale;
};

/// Determinant of the Hessian matrix by cofactor expansion.
Polynomial hessian_determinant(const Polynomial& f);

/// Throws Inhomogeneous when f is not quasi-homogeneous for w, NotIsolated
/// when the Jacobi ring is infinite-dimensional.
JacobiData jacobi_build(const Polynomial& f, const WeightSystem& w, const MonomialOrder& order = MonomialOrder::grevlex(),
                        const GroebnerOptions& options = {});
/// Weights are inferred from the potential.
JacobiData jacobi_build(const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex(),
                        const GroebnerOptions& options = {});

/// Residue pairing on Jac(f), normalized so that residue(det Hess) = mu.
Cyclo residue(const Polynomial& h, const JacobiData& jd);

/// Residue in the potential's variables of a polynomial on a larger ring; the
/// remaining variables are parameters and survive in the result.
Polynomial residue_parametric(const Polynomial& h, const JacobiData& jd);

}  // namespace mfkit
