#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfkit/equivariance.hpp"
#include "mfkit/qdim.hpp"

namespace mfkit {

enum class Provenance { Paper, StandardNormalForm };

struct SingularityEntry {
  std::string name;
  Polynomial potential;
  WeightSystem weights;
  std::size_t expected_milnor = 0;
  Provenance provenance = Provenance::StandardNormalForm;
};

/// An explicit equivariant factorization attached to a pair.
struct EmbeddedCertificate {
  MatrixFactorization mf;
  std::optional<EquivariantStructure> equivariance;
};

/// f (with the action) on the source side descends to f_hat of type target.
struct EquivalencePair {
  std::string source;
  std::string target;
  GroupAction action;
  std::size_t group_order = 1;
  /// The source potential in the action's variables.
  Polynomial f;
  std::optional<DescentWitness> witness;
  std::optional<EmbeddedCertificate> certificate;
  std::string origin_citation;
  bool enabled = true;
  /// Why a pair is disabled, e.g. its potential is not stated in the paper.
  std::string disabled_reason;
};

/// A recorded equivalence whose dimension product is known not to be a positive rational.
struct Nonexample {
  std::string source;
  std::string target;
  std::string origin_citation;
};

enum class StepKind { McKay, Knorrer, Nonexample };

struct ChainStep {
  std::string from;
  std::string to;
  StepKind kind = StepKind::McKay;
};

struct EquivalenceChain {
  std::string name;
  std::vector<ChainStep> steps;
};

struct Catalog {
  std::vector<SingularityEntry> entries;
  std::vector<EquivalencePair> pairs;
  std::vector<Nonexample> nonexamples;
  std::vector<EquivalenceChain> chains;

  const SingularityEntry* entry(const std::string& name) const;
  /// Pair joining the two names in either direction.
  const EquivalencePair* pair(const std::string& a, const std::string& b) const;
  bool is_nonexample(const std::string& a, const std::string& b) const;
};

struct CatalogOptions {
  /// Enables pairs whose potentials come from standard normal forms only.
  bool enable_external = false;
};

Catalog catalog_load(const CatalogOptions& options = {});

/// Normal forms used by the catalog.
Polynomial normal_form_A(unsigned n);
Polynomial normal_form_D(unsigned n);

struct CatalogRow {
  std::string kind;
  std::string name;
  bool pass = true;
  std::optional<std::size_t> milnor;
  std::string weights;
  std::string status;
};

struct CatalogReport {
  bool pass = true;
  std::vector<CatalogRow> rows;
};

CatalogReport catalog_verify(const Catalog& catalog, bool parallel = true);

struct ChainReport {
  Cyclo product{1};
  bool product_known = true;
  bool positive_rational = true;
  bool necessary_condition_fails = false;
  /// Group orders of the steps when every step is McKay-type.
  std::optional<std::vector<std::size_t>> group_orders;
  std::vector<std::string> notes;
};

/// Throws Error when adjacent steps do not share an endpoint.
ChainReport chain_check(const Catalog& catalog, const EquivalenceChain& chain);

/// Fixed columns: name, mu, weights, status.
std::string catalog_table(const CatalogReport& report);

std::string format_weights(const WeightSystem& w);

}  // namespace mfkit
