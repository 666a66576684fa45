#pragma once

#include <cstddef>
#include <vector>

#include "mfkit/polynomial.hpp"

namespace mfkit {

/// Finite abelian group given by commuting generators, each a substitution on
/// `vars` (images live on the same ring).
struct GroupAction {
  Ring vars;
  std::vector<Substitution> generators;
  std::vector<unsigned> orders;
  std::size_t group_order = 1;
};

}  // namespace mfkit
