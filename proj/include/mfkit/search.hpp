#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mfkit/qdim.hpp"

namespace mfkit {

/// Weighted degrees (a, b; c, e) of the entries of d1 = [[a, b], [c, e]].
using DegreeProfile = std::array<long, 4>;

/// Every profile with positive entries, a + e = b + c = D, and at least one
/// monomial of each required degree on the joint ring.
std::vector<DegreeProfile> entry_degree_profiles(const Ring& joint, const WeightSystem& weights, long degree);

/// Monomials of the joint ring with the given weighted degree, in descending grlex order.
std::vector<Exponents> monomials_of_degree(const Ring& joint, const WeightSystem& weights, long degree);

struct Ansatz {
  Ring source;
  Ring target;
  Ring joint;
  Polynomial U;
  Polynomial V;
  WeightSystem weights;  // on the joint ring
  long degree = 0;
  DegreeProfile profile{};
  /// Admissible monomials per entry a, b, c, e.
  std::array<std::vector<Exponents>, 4> monomials;
};

struct SearchBudget {
  std::size_t max_profiles = 10000;
  std::size_t groebner_steps = 1000000;
  /// Line assignments tried per profile.
  std::size_t max_candidates = 200000;
  std::size_t max_certificates = 8;
  double soft_time_limit_seconds = 240.0;
};

struct SearchOptions {
  SearchBudget budget;
  /// Values tried for the fixed line of coefficients.
  std::vector<Cyclo> coefficient_values{Cyclo(0), Cyclo(1), Cyclo(-1)};
  /// Profiles with at most this many unknowns are first tried as a whole
  /// polynomial system.
  std::size_t nonlinear_unknown_limit = 6;
  bool require_invertible = true;
  std::optional<long> group_order_claim;
  /// Stop once a certificate's product equals the claim.
  bool stop_on_claim = true;
  Kernel kernel = Kernel::Parallel;
  std::size_t chunk_size = 512;
};

struct SearchStats {
  std::size_t profiles_total = 0;
  std::size_t profiles_tried = 0;
  std::size_t candidates_tried = 0;
  std::size_t linear_solutions = 0;
  std::size_t groebner_steps = 0;
  double elapsed_seconds = 0.0;
  bool budget_exhausted = false;
  bool prefilter_rejected = false;
  std::vector<std::string> notes;
};

struct SearchResult {
  std::vector<MatrixFactorization> solutions;
  std::vector<QDimResult> certificates;
  SearchStats stats;
};

Ansatz make_ansatz(const Polynomial& U, const Polynomial& V, const WeightSystem& weights, long degree,
                   const DegreeProfile& profile);

/// Solves one profile. Results are appended in deterministic order.
SearchResult solve_ansatz(const Ansatz& a, const SearchOptions& options = {});

struct SearchRequest {
  Polynomial U;
  Polynomial V;
  std::optional<WeightSystem> weights_source;
  std::optional<WeightSystem> weights_target;
  std::optional<long> degree;
  std::optional<long> group_order_claim;
};

/// Common-degree weights for both sides, inferred when not given.
/// Throws Ungraded when no common grading exists.
std::pair<WeightSystem, long> common_weights(const SearchRequest& r);

SearchResult search(const SearchRequest& request, SearchOptions options = {});

}  // namespace mfkit
