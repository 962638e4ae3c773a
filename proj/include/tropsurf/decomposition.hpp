#pragma once

// Manifold-with-fins-and-ornaments decompositions and their text format:
//   sigma <facet ids>
//   fin <k> <facet ids>          (one line per fin, ordered by k)
//   ornament <f<id> | e<id> | v<id> ...>
// Facet and edge ids are the ids written in the fixture.

#include <string>
#include <string_view>
#include <vector>

#include "tropsurf/complex.hpp"

namespace tropsurf {

struct Ornament {
  std::vector<FacetId> facets;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  bool empty() const { return facets.empty() && edges.empty() && vertices.empty(); }
  bool operator==(const Ornament&) const = default;
};

/// Facet lists are sorted; each part stands for the subcomplex it generates.
struct Decomposition {
  std::vector<FacetId> sigma;
  std::vector<std::vector<FacetId>> fins;
  Ornament ornament;
  bool operator==(const Decomposition&) const = default;
};

/// Throws SyntaxError, UnknownId, or NotSubcomplex when a facet is assigned
/// twice.
Decomposition parse_decomposition(std::string_view text, const DeltaComplex2& complex);
Decomposition read_decomposition_file(const std::string& path, const DeltaComplex2& complex);
std::string serialize(const Decomposition& d, const DeltaComplex2& complex);

/// Closure of a set of facets, edges and vertices, as membership flags.
struct Subcomplex {
  std::vector<char> vertex;
  std::vector<char> edge;
  std::vector<char> facet;
};

Subcomplex closure(const DeltaComplex2& complex, const std::vector<FacetId>& facets,
                   const std::vector<EdgeId>& edges = {},
                   const std::vector<VertexId>& vertices = {});

}  // namespace tropsurf
