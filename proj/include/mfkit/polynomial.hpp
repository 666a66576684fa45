#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfkit/cyclo.hpp"

namespace mfkit {

/// Dense exponent vector, one entry per ring variable.
using Exponents = std::vector<int>;

int exponent_sum(const Exponents& e);

/// Graded-lexicographic comparison, largest first (canonical print order).
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// An ordered list of variable names. Cheap to copy.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Variables of this ring followed by the new ones from `other`.
  Ring joined(const Ring& other) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view name);

/// Sparse multivariate polynomial over cyclotomic coefficients.
/// Terms are kept in descending graded-lex order; zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Cyclo, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(Ring ring);
  Polynomial(Ring ring, const Cyclo& constant);

  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial monomial(const Ring& ring, Exponents exponents, const Cyclo& coefficient = Cyclo(1));

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclo constant_term() const;
  Cyclo coefficient(const Exponents& e) const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// lcm of the coefficient orders (1 for rational polynomials).
  unsigned field_order() const;

  void add_term(const Exponents& e, const Cyclo& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Cyclo& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Cyclo& c) { return a *= c; }
  friend Polynomial operator*(const Cyclo& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(std::string_view var) const;

  /// Re-express in another ring by variable name. Throws if a used variable is missing.
  Polynomial to_ring(const Ring& target) const;
  /// Sets the named variables to zero; the ring is unchanged.
  Polynomial specialized_to_zero(const std::vector<std::string>& vars) const;
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> used_variables() const;

  /// Canonical text: terms in descending graded-lex order.
  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
};

std::string monomial_to_string(const Ring& ring, const Exponents& e);

/// Images of variables, all living in a common target ring.
using Substitution = std::map<std::string, Polynomial>;

/// Ring homomorphism x_i -> images[x_i]. Every variable used by `p` needs an image.
/// `target` fixes the result ring (needed when `images` is empty).
Polynomial substitute(const Polynomial& p, const Substitution& images, const Ring& target);
Polynomial substitute(const Polynomial& p, const Substitution& images);

/// The substitution sending every variable of `ring` to itself.
Substitution identity_substitution(const Ring& ring);

/// Result applies `first` and then `second`: substitute(p, compose(first, second))
/// equals substitute(substitute(p, first), second).
Substitution compose(const Substitution& first, const Substitution& second, const Ring& target);

bool substitutions_equal(const Substitution& a, const Substitution& b);

}  // namespace mfkit
