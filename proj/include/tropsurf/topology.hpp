#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tropsurf/complex.hpp"

namespace tropsurf {

int euler_characteristic(const DeltaComplex2& complex);

/// Betti numbers over Q and the ranks of the simplicial boundary maps.
struct CohomologySummary {
  int b0 = 0;
  int b1 = 0;
  int b2 = 0;
  int rank_d1 = 0;
  int rank_d2 = 0;
};

CohomologySummary betti_numbers(const DeltaComplex2& complex);

/// Link of a vertex: one node per incident edge, one arc per facet corner at
/// the vertex, joining the two edges of that corner.
struct LinkGraph {
  struct Arc {
    int a = 0;
    int b = 0;
    FacetId facet = 0;
  };

  VertexId vertex = 0;
  std::vector<EdgeId> nodes;  // ascending edge id
  std::vector<Arc> arcs;      // ascending facet id

  int degree(int node) const;
  int component_count() const;
  bool connected() const { return component_count() <= 1; }
  /// Connected, every node of degree exactly 2.
  bool is_single_cycle() const;
};

LinkGraph vertex_link(const DeltaComplex2& complex, VertexId v);

/// Link of `v` in the subcomplex generated by `facets` (a sorted facet list);
/// only edges of those facets appear as nodes.
LinkGraph vertex_link(const DeltaComplex2& complex, VertexId v,
                      std::span<const FacetId> facets);

bool is_locally_connected_codim1(const DeltaComplex2& complex);

/// Facet-adjacency graph (facets sharing an edge) is connected and every edge
/// lies in some facet.
bool is_connected_codim1(const DeltaComplex2& complex);

/// Within the subcomplex generated by `facets`: every edge has degree 2,
/// every vertex link is a single cycle, and the facets are connected.
bool is_closed_surface(const DeltaComplex2& complex, std::span<const FacetId> facets);

struct Orientation {
  bool orientable = false;
  /// Indexed by facet id: +1 keeps the stored corner order, -1 reverses it,
  /// 0 for facets outside the surface. Filled only when orientable.
  std::vector<int> facet_sign;
  /// Facets on a closed walk along which propagation contradicted itself.
  std::vector<FacetId> witness_cycle;
};

/// Throws NotASurface unless is_closed_surface(complex, facets).
Orientation orientability(const DeltaComplex2& complex, std::span<const FacetId> facets);

std::vector<FacetId> all_facets(const DeltaComplex2& complex);

/// Euler characteristic of the subcomplex generated by `facets`.
int euler_characteristic(const DeltaComplex2& complex, std::span<const FacetId> facets);

/// Relative orientation of two facets sharing edge `e`, as induced on `e`:
/// +1 when the stored corner orders induce opposite directions on e
/// (coherent), -1 when they induce the same direction.
int edge_coherence(const DeltaComplex2& complex, EdgeId e, FacetId f, FacetId g);

}  // namespace tropsurf
