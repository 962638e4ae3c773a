#pragma once

// Finite regular Delta-complexes of dimension at most two, and the
// line-oriented `tropsurf 1` fixture format that describes them.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropsurf {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FacetId = std::int32_t;

/// Endpoints are stored with v < w.
struct Edge {
  VertexId v = 0;
  VertexId w = 0;
  bool operator==(const Edge&) const = default;
};

/// Vertices are stored in ascending order; edges[0] joins vertices 0 and 1,
/// edges[1] joins 0 and 2, edges[2] joins 1 and 2.
struct Facet {
  std::array<VertexId, 3> vertices{};
  std::array<EdgeId, 3> edges{};
  bool operator==(const Facet&) const = default;
};

/// Immutable after construction. The constructor validates regularity,
/// incidence coherence and connectivity and throws `Error` otherwise. Edge
/// endpoints and facet corners may be given in any order; they are stored
/// canonically. `original_*_ids`, when given, are used in diagnostics and to
/// resolve ids in companion files.
class DeltaComplex2 {
 public:
  DeltaComplex2(int vertex_count, std::vector<Edge> edges,
                std::vector<Facet> facets,
                std::vector<std::int64_t> original_edge_ids = {},
                std::vector<std::int64_t> original_facet_ids = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  const Edge& edge(EdgeId e) const;
  const Facet& facet(FacetId f) const;
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Facet> facets() const { return facets_; }

  /// Facets whose edge triple contains `e`, ascending.
  std::span<const FacetId> facets_of_edge(EdgeId e) const;
  /// Edges with `v` as an endpoint, ascending.
  std::span<const EdgeId> edges_at(VertexId v) const;
  /// Facets with `v` as a corner, ascending.
  std::span<const FacetId> facets_at(VertexId v) const;

  VertexId other_endpoint(EdgeId e, VertexId v) const;
  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count_; }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }
  bool has_facet(FacetId f) const { return f >= 0 && f < facet_count(); }

  /// Ids as written in the source fixture (identity for complexes built in
  /// code).
  std::int64_t original_edge_id(EdgeId e) const { return original_edge_ids_.at(e); }
  std::int64_t original_facet_id(FacetId f) const { return original_facet_ids_.at(f); }
  std::optional<EdgeId> edge_from_original(std::int64_t id) const;
  std::optional<FacetId> facet_from_original(std::int64_t id) const;

  bool operator==(const DeltaComplex2& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_ &&
           facets_ == other.facets_;
  }

 private:
  void validate_and_index();

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Facet> facets_;
  std::vector<std::int64_t> original_edge_ids_;
  std::vector<std::int64_t> original_facet_ids_;
  std::vector<std::vector<FacetId>> edge_facets_;
  std::vector<std::vector<EdgeId>> vertex_edges_;
  std::vector<std::vector<FacetId>> vertex_facets_;
};

/// `alpha <eid> <vid> <int>` line, with the edge id as written in the file.
struct AlphaLine {
  std::int64_t edge = 0;
  VertexId vertex = 0;
  std::int64_t value = 0;
  int line = 0;
};

/// `cover <new-id> <base-id> <sheet>` line.
struct CoverLine {
  std::int64_t new_id = 0;
  std::int64_t base_id = 0;
  int sheet = 0;
  int line = 0;
};

struct Fixture {
  DeltaComplex2 complex;
  std::vector<AlphaLine> alpha;
  std::vector<CoverLine> cover;
};

inline constexpr std::string_view kFormatVersion = "tropsurf 1";

Fixture parse_fixture(std::string_view text);
Fixture read_fixture_file(const std::string& path);

/// Validated complex from fixture text; `alpha` and `cover` lines are
/// accepted but ignored.
DeltaComplex2 build_complex(std::string_view text);

/// Canonical text: header, vertex count, edges, facets, each block sorted by
/// id, single spaces, trailing newline.
std::string serialize(const DeltaComplex2& complex);

int edge_degree(const DeltaComplex2& complex, EdgeId e);

struct EdgeStar {
  EdgeId edge = 0;
  VertexId v = 0;
  VertexId w = 0;
  std::vector<FacetId> incident_facets;
  std::vector<VertexId> opposite_vertices;
  /// (1, ..., 1, -alpha(v,e), -alpha(w,e)); set once structure constants are
  /// attached.
  std::optional<std::vector<std::int64_t>> quotient_vector;

  int degree() const { return static_cast<int>(incident_facets.size()); }
};

EdgeStar edge_star(const DeltaComplex2& complex, EdgeId e);

/// Vertex of `f` that is not an endpoint of `e`.
VertexId opposite_vertex(const DeltaComplex2& complex, FacetId f, EdgeId e);

}  // namespace tropsurf
