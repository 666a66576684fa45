#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mfkit {

/// Element of the cyclotomic field Q(zeta_k), stored by its coordinates in
/// the power basis 1, zeta, ..., zeta^(phi(k)-1).
///
/// Binary operations on numbers of different orders embed both operands into
/// the lcm order. Results that happen to be rational collapse to order 1, so
/// rational arithmetic never pays for the extension.
class Cyclo {
 public:
  Cyclo();
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  Cyclo(unsigned order, std::vector<mpq_class> coords);

  /// zeta_k^power; negative powers are allowed.
  static Cyclo zeta(unsigned order, long power = 1);

  unsigned order() const { return order_; }
  const std::vector<mpq_class>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  const mpq_class& rational() const;

  /// Embeds into Q(zeta_target); target must be a multiple of order().
  Cyclo lifted(unsigned target) const;

  Cyclo inverse() const;
  Cyclo pow(long exponent) const;

  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(const Cyclo& other);
  Cyclo& operator/=(const Cyclo& other);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  /// Literal accepted by the polynomial parser, e.g. "-1/2", "1 + 2*zeta3".
  std::string to_string() const;
  /// True when to_string() needs parentheses to act as a factor.
  bool is_compound() const;

 private:
  void normalize();

  unsigned order_;
  std::vector<mpq_class> coords_;
};

/// Integer coefficients of the k-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned order);
unsigned euler_phi(unsigned n);
unsigned lcm_order(unsigned a, unsigned b);

/// A square root of a rational number inside some cyclotomic field, built from
/// Gauss sums. Returns false when the squarefree part has a prime factor above
/// `prime_limit` (the field would be impractically large).
bool cyclo_sqrt(const mpq_class& value, Cyclo& out, unsigned prime_limit = 64);

mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& value);

}  // namespace mfkit
