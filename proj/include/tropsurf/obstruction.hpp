#pragma once

// Cross-check of the decomposition certificate against bounded searches.

#include <optional>
#include <string>
#include <vector>

#include "tropsurf/recognizer.hpp"
#include "tropsurf/search.hpp"

namespace tropsurf {

struct ObstructionReport {
  std::optional<Decomposition> decomposition;
  std::optional<DecompositionReport> verification;
  /// A verified decomposition with chi(sigma) < 0 was found, so neither
  /// tropical nor at-most-one structures can exist.
  bool hyperbolic_certified = false;
  int bound = 0;
  SearchOutcome tropical;
  SearchOutcome at_most_one;
  /// At-most-one witnesses whose robustified structure classified Tropical.
  int robustified = 0;
  /// False when a witness coexists with a hyperbolic certificate, or when
  /// robustify fails to produce a tropical structure.
  bool consistent = true;
  std::vector<std::string> notes;
};

ObstructionReport obstruction_report(const DeltaComplex2& complex, int bound, int threads = 1);

}  // namespace tropsurf
