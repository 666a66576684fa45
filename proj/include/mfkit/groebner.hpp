#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mfkit/polynomial.hpp"

namespace mfkit {

/// Monomial orders over the ring's variable order (first variable is largest).
struct MonomialOrder {
  enum class Kind { GradedReverseLex, Lex, Elimination };

  Kind kind = Kind::GradedReverseLex;
  /// Elimination only: the first `block` variables form the eliminated block;
  /// both blocks are compared by grevlex.
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {Kind::GradedReverseLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t block) { return {Kind::Elimination, block}; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Exponents& a, const Exponents& b) const;
  std::string name() const;
};

struct GroebnerOptions {
  /// Reduction steps allowed before ResourceLimit is thrown.
  std::size_t max_steps = 1'000'000;
};

struct LeadingTerm {
  Exponents monomial;
  Cyclo coefficient;
};

/// Requires p nonzero.
LeadingTerm leading_term(const Polynomial& p, const MonomialOrder& order);

bool divides(const Exponents& a, const Exponents& b);

/// A reduced, monic Groebner basis. Generators are sorted by descending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> reduced_generators, std::size_t steps);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Exponents>& leading_monomials() const { return leading_; }
  std::size_t steps() const { return steps_; }

  /// True when the ideal is the whole ring.
  bool is_unit() const;

  /// Fully reduced remainder; no term is divisible by a leading monomial.
  Polynomial normal_form(const Polynomial& p) const;

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Exponents> leading_;
  std::vector<std::vector<std::pair<Exponents, Cyclo>>> sorted_;
  std::size_t steps_ = 0;
};

/// Buchberger's algorithm with sugar selection and both Buchberger criteria.
/// Pair selection is deterministic; throws ResourceLimit when the step budget runs out.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});
/// Ring for an empty generator list.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct QuotientBasis {
  bool finite = false;
  /// Standard monomials in ascending graded-lex order (only when finite).
  std::vector<Exponents> monomials;

  std::size_t dimension() const { return monomials.size(); }
};

QuotientBasis quotient_basis(const GroebnerBasis& gb);

/// Generators of the ideal intersected with the subring on the retained
/// variables, expressed on that subring (ring order preserved).
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& generators, const std::vector<std::string>& drop,
                                  const GroebnerOptions& options = {});

}  // namespace mfkit
