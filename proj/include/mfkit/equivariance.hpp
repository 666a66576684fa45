#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfkit/group_action.hpp"
#include "mfkit/groebner.hpp"

namespace mfkit {

struct ActionReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Builds an action on `vars` from generator images given as text; unlisted
/// variables are fixed.
GroupAction make_action(const Ring& vars, const std::vector<std::map<std::string, std::string>>& generators,
                        const std::vector<unsigned>& orders, unsigned cyclotomic_order = 1);

/// Checks generator orders (exact and minimal), commutation, and that the
/// enumerated group has group_order elements. Throws Error when the linear
/// part of a generator is singular.
ActionReport action_verify(const GroupAction& a);

/// Every element of the group, identity first.
std::vector<Substitution> group_elements(const GroupAction& a);

/// Applies g to p; variables of p outside the action are fixed.
Polynomial act(const Polynomial& p, const Substitution& g);

bool invariance_check(const Polynomial& f, const GroupAction& a);

/// Average of f over the group.
Polynomial reynolds(const Polynomial& f, const GroupAction& a);

/// Coordinate change new_x = expression in the old variables; the action in
/// the new coordinates must scale each coordinate by a constant.
using Linearization = Substitution;

struct InvariantData {
  std::vector<Polynomial> gens;
  Ring z_ring;
  std::vector<Polynomial> relations;
  std::optional<Linearization> linearization;
  /// Diagonal character of each generator on each coordinate.
  std::vector<std::vector<Cyclo>> characters;
};

/// Minimal invariant monomials up to degree_bound (0 means |G|) in the
/// diagonalizing coordinates, and the relations among them named z1..zk.
/// Throws Error when the action is not diagonal in those coordinates.
InvariantData invariant_generators(const GroupAction& a, unsigned degree_bound = 0,
                                   const std::optional<Linearization>& linearization = std::nullopt,
                                   const GroebnerOptions& options = {});

/// Descent of an invariant potential f to a chart of the resolution.
/// F is f written in the invariant coordinates z; chart_map sends each z to a
/// polynomial in the chart variables; f_hat lives on the chart ring.
struct DescentWitness {
  GroupAction action;
  Polynomial f;
  std::vector<Polynomial> invariant_gens;
  Ring z_ring;
  std::vector<Polynomial> relations;
  Polynomial F;
  Substitution chart_map;
  Polynomial f_hat;
  std::optional<Linearization> linearization;
};

struct DescentRow {
  std::string check;
  bool pass = true;
  std::string detail;
};

struct DescentReport {
  bool pass = true;
  std::vector<DescentRow> rows;
  std::optional<std::size_t> milnor_f;
  std::optional<std::size_t> milnor_f_hat;
};

DescentReport descent_verify(const DescentWitness& w, const GroebnerOptions& options = {});

}  // namespace mfkit
