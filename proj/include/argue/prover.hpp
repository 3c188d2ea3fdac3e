#pragma once

#include <vector>

#include "argue/database.hpp"
#include "argue/formula.hpp"
#include "argue/proof.hpp"

namespace argue {

struct SearchLimits {
  // Maximum chaining depth.  Consuming an axiom or hypothesis through
  // its chain of eliminations counts one level, as does each
  // introduction.  Raising it past the point where search saturates
  // changes nothing.
  int max_depth = 8;

  // Cap on the number of returned arguments (after filtering).
  int max_arguments = 1000;

  // Keep only arguments whose grounds are subset-minimal among the
  // results.  Turning this off returns every derivable triple.
  bool minimal_only = true;
};

// Finds every argument for `goal` derivable from the database within the
// limits.  The goal must be ground and free of disjunction (the search
// fragment is atoms, #, ~, & and ->).  Results are sorted by
// (formula, grounds, sign) and deduplicated; each carries one witness
// proof.  Throws SearchError for bad goals or limits.
std::vector<Argument> find_arguments(const Database& db, const Formula& goal,
                                     const SearchLimits& limits = {});

}  // namespace argue
