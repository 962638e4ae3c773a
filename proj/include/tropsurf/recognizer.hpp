#pragma once

// Verification and heuristic discovery of manifold-with-fins-and-ornaments
// decompositions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropsurf/decomposition.hpp"

namespace tropsurf {

enum class FinStatus { Certified, Unverified };
std::string_view to_string(FinStatus status);

struct DecompositionViolation {
  int condition = 0;  // 1..5
  /// "NotCovered", "SigmaNotSurface", "FinPathBroken", "FinPathDegenerate",
  /// "FinOverlap", "OrnamentContact".
  std::string kind;
  std::string message;
};

struct DecompositionReport {
  bool valid = false;
  std::vector<DecompositionViolation> violations;
  /// Per fin: greedy free-face collapse reached a point and chi = 1.
  std::vector<FinStatus> fin_status;
  /// Per fin: vertices of the path F_i meet Sigma, in path order; empty when
  /// the intersection is not a simple path.
  std::vector<std::vector<VertexId>> fin_paths;
  int sigma_euler = 0;
  bool hyperbolic = false;
};

/// True when the subcomplex generated by `facets` collapses to a single
/// vertex by greedy elementary collapses.
bool greedy_collapsible(const DeltaComplex2& complex, const std::vector<FacetId>& facets);

DecompositionReport verify_decomposition(const DeltaComplex2& complex, const Decomposition& d);

/// Heuristic; the result always verifies. nullopt when nothing is found.
std::optional<Decomposition> find_decomposition(const DeltaComplex2& complex);

}  // namespace tropsurf
