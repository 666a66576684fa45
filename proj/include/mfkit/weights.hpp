#pragma once

#include <map>
#include <optional>
#include <string>

#include "mfkit/polynomial.hpp"

namespace mfkit {

/// Positive integer weights per variable, optionally with the degree D of the
/// potential they grade. Rational charges q_i = w_i / D are derived on demand.
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(std::map<std::string, long> weights, std::optional<long> degree = std::nullopt);

  /// Normalized charges (potential of degree 1) to the canonical integer pair with gcd 1.
  static WeightSystem from_charges(const std::map<std::string, mpq_class>& charges);

  const std::map<std::string, long>& weights() const { return weights_; }
  bool has(const std::string& var) const { return weights_.count(var) != 0; }
  long weight(const std::string& var) const;
  std::optional<long> degree() const { return degree_; }

  /// q_i = w_i / D; requires a degree.
  std::map<std::string, mpq_class> charges() const;

  /// Union of two systems on disjoint variables sharing a degree.
  WeightSystem merged(const WeightSystem& other) const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) {
    return a.weights_ == b.weights_ && a.degree_ == b.degree_;
  }

 private:
  std::map<std::string, long> weights_;
  std::optional<long> degree_;
};

struct DegreeInfo {
  enum class Kind { Homogeneous, Inhomogeneous, Zero };
  Kind kind = Kind::Zero;
  mpq_class degree;  // meaningful for Homogeneous only

  bool homogeneous() const { return kind != Kind::Inhomogeneous; }
};

/// Weighted degree of a monomial; throws if a used variable has no weight.
mpq_class monomial_weight(const Ring& ring, const Exponents& e, const WeightSystem& w);

/// Homogeneous with degree D iff every term has weighted degree exactly D.
/// The zero polynomial reports Kind::Zero ("every degree").
DegreeInfo weighted_degree(const Polynomial& p, const WeightSystem& w);

/// Positive weights making `f` quasi-homogeneous, if any exist. When the
/// weights are not unique (as for u*v), free charges are set to 1/2.
std::optional<WeightSystem> infer_weights(const Polynomial& f);

/// Sum over the ring variables of (1 - 2 q_i).
mpq_class central_charge(const Polynomial& f, const WeightSystem& w);

}  // namespace mfkit
