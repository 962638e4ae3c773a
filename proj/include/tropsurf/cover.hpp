#pragma once

// Orientation double cover of a manifold with fins whose surface part is
// non-orientable. Copy `s` of base simplex `x` has id 2x + s.

#include <optional>
#include <string>
#include <vector>

#include "tropsurf/decomposition.hpp"
#include "tropsurf/tropical.hpp"

namespace tropsurf {

struct CoveringMap {
  // Indexed by cover id; each entry is the base id. Sheets are id % 2.
  std::vector<VertexId> vertex;
  std::vector<EdgeId> edge;
  std::vector<FacetId> facet;
};

struct DoubleCover {
  DeltaComplex2 complex;
  CoveringMap map;
  std::optional<StructureConstants> alpha;
  /// Fin i of the base lifts to fins 2i and 2i + 1 (zero-based).
  Decomposition decomposition;
};

/// Throws NotVerifiedDecomposition (invalid, or ornaments present) or
/// AlreadyOrientable.
DoubleCover orientation_double_cover(const DeltaComplex2& complex, const Decomposition& d,
                                     const StructureConstants* alpha = nullptr);

/// True when `map` sends every cover simplex to a base simplex with matching
/// incidences and is exactly 2-to-1 on vertices, edges and facets.
bool is_covering_map(const DeltaComplex2& cover, const DeltaComplex2& base,
                     const CoveringMap& map);

/// `cover <new-id> <base-id> <sheet>` lines in three commented blocks:
/// vertices, edges, facets.
std::string serialize_cover(const CoveringMap& map);

}  // namespace tropsurf
