#pragma once

#include <string>
#include <vector>

#include "mfkit/groebner.hpp"

namespace mfkit {

struct SolveOptions {
  GroebnerOptions groebner;
  /// Largest prime allowed in the squarefree part of a discriminant.
  unsigned sqrt_prime_limit = 64;
};

struct SolveOutcome {
  /// Each solution lists values in ring-variable order.
  std::vector<std::vector<Cyclo>> solutions;
  bool zero_dimensional = true;
  /// False when some univariate factor had roots outside Q(zeta, sqrt q).
  bool complete = true;
  std::size_t steps = 0;
  std::vector<std::string> notes;
};

/// Roots of sum_i coeffs[i] t^i that lie in a cyclotomic field reachable by
/// rational roots and square roots of rational discriminants. `complete` is
/// cleared when a factor is left unsolved.
std::vector<Cyclo> univariate_roots(std::vector<Cyclo> coeffs, bool& complete, unsigned sqrt_prime_limit = 64);

/// Solves a zero-dimensional system by a lex Groebner basis and
/// back-substitution through the univariate eliminants.
SolveOutcome solve_zero_dimensional(const std::vector<Polynomial>& equations, const Ring& ring,
                                    const SolveOptions& options = {});

}  // namespace mfkit
