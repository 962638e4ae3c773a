#include "tropsurf/cover.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tropsurf/error.hpp"
#include "tropsurf/recognizer.hpp"
#include "tropsurf/topology.hpp"

namespace tropsurf {

namespace {

// Orientation of each facet of the star of v (within sigma) relative to the
// lowest such facet; 0 outside the star.
std::vector<int> star_signs(const DeltaComplex2& c, const std::vector<char>& in_sigma,
                            VertexId v) {
  std::vector<int> sign(c.facet_count(), 0);
  std::vector<FacetId> star;
  for (FacetId f : c.facets_at(v))
    if (in_sigma[f]) star.push_back(f);
  if (star.empty()) return sign;
  sign[star.front()] = 1;
  std::deque<FacetId> queue{star.front()};
  while (!queue.empty()) {
    const FacetId f = queue.front();
    queue.pop_front();
    for (EdgeId e : c.facet(f).edges) {
      if (c.edge(e).v != v && c.edge(e).w != v) continue;
      for (FacetId g : c.facets_of_edge(e)) {
        if (g == f || !in_sigma[g] || sign[g]) continue;
        sign[g] = sign[f] * edge_coherence(c, e, f, g);
        queue.push_back(g);
      }
    }
  }
  return sign;
}

}  // namespace

DoubleCover orientation_double_cover(const DeltaComplex2& c, const Decomposition& d,
                                     const StructureConstants* alpha) {
  const DecompositionReport report = verify_decomposition(c, d);
  if (!report.valid) {
    throw Error(ErrorCode::NotVerifiedDecomposition, report.violations.front().message);
  }
  if (!d.ornament.empty()) {
    throw Error(ErrorCode::NotVerifiedDecomposition, "ornaments are not supported");
  }
  if (orientability(c, d.sigma).orientable) {
    throw Error(ErrorCode::AlreadyOrientable, "sigma is orientable");
  }

  std::vector<char> in_sigma(c.facet_count(), 0);
  for (FacetId f : d.sigma) in_sigma[f] = 1;
  const Subcomplex sig = closure(c, d.sigma);

  // Sheet of each corner / edge copy adjacent to facet copy (f, 0).
  std::vector<std::array<int, 3>> corner_sheet(c.facet_count(), {0, 0, 0});
  std::vector<std::array<int, 3>> edge_sheet(c.facet_count(), {0, 0, 0});
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (!sig.vertex[v]) continue;
    const auto sign = star_signs(c, in_sigma, v);
    for (FacetId f : c.facets_at(v)) {
      if (!in_sigma[f]) continue;
      const auto& vs = c.facet(f).vertices;
      const int k = static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
      corner_sheet[f][k] = sign[f] == 1 ? 0 : 1;
    }
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    if (!sig.edge[e]) continue;
    FacetId ref = -1;
    for (FacetId f : c.facets_of_edge(e)) {
      if (!in_sigma[f]) continue;
      if (ref < 0) ref = f;
      const int rel = f == ref ? 1 : edge_coherence(c, e, ref, f);
      const auto& es = c.facet(f).edges;
      const int k = static_cast<int>(std::find(es.begin(), es.end(), e) - es.begin());
      edge_sheet[f][k] = rel == 1 ? 0 : 1;
    }
  }

  // Endpoint sheets of each sigma edge copy (e, 0), read off a facet copy.
  std::vector<std::array<int, 2>> edge_end_sheet(c.edge_count(), {0, 0});
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    if (!sig.edge[e]) continue;
    for (FacetId f : c.facets_of_edge(e)) {
      if (!in_sigma[f]) continue;
      const Facet& fc = c.facet(f);
      const int k = static_cast<int>(std::find(fc.edges.begin(), fc.edges.end(), e) -
                                     fc.edges.begin());
      // Facet copy (f, s) carries edge copy s ^ edge_sheet and corner copies
      // s ^ corner_sheet; take s = edge_sheet so the edge copy is 0.
      const int s = edge_sheet[f][k];
      for (int side = 0; side < 2; ++side) {
        const VertexId x = side == 0 ? c.edge(e).v : c.edge(e).w;
        const int corner = static_cast<int>(
            std::find(fc.vertices.begin(), fc.vertices.end(), x) - fc.vertices.begin());
        edge_end_sheet[e][side] = s ^ corner_sheet[f][corner];
      }
      break;
    }
  }

  const int nv = c.vertex_count();
  const int ne = c.edge_count();
  const int nf = c.facet_count();
  std::vector<Edge> edges(2 * ne);
  std::vector<Facet> facets(2 * nf);
  std::vector<char> edge_done(2 * ne, 0);

  for (EdgeId e = 0; e < ne; ++e) {
    if (!sig.edge[e]) continue;
    for (int t = 0; t < 2; ++t) {
      edges[2 * e + t] = {2 * c.edge(e).v + (t ^ edge_end_sheet[e][0]),
                          2 * c.edge(e).w + (t ^ edge_end_sheet[e][1])};
      edge_done[2 * e + t] = 1;
    }
  }
  for (FacetId f : d.sigma) {
    const Facet& fc = c.facet(f);
    for (int s = 0; s < 2; ++s) {
      Facet& out = facets[2 * f + s];
      for (int k = 0; k < 3; ++k) {
        out.vertices[k] = 2 * fc.vertices[k] + (s ^ corner_sheet[f][k]);
        out.edges[k] = 2 * fc.edges[k] + (s ^ edge_sheet[f][k]);
      }
    }
  }

  // Fins lift along the two lifts of their attaching path.
  Decomposition lifted;
  for (FacetId f : d.sigma) {
    lifted.sigma.push_back(2 * f);
    lifted.sigma.push_back(2 * f + 1);
  }
  std::sort(lifted.sigma.begin(), lifted.sigma.end());
  for (std::size_t i = 0; i < d.fins.size(); ++i) {
    const auto& path = report.fin_paths[i];
    const Subcomplex fin = closure(c, d.fins[i]);
    for (int sheet = 0; sheet < 2; ++sheet) {
      std::vector<int> vsheet(nv, sheet);
      vsheet[path.front()] = sheet;
      std::vector<int> esheet(ne, sheet);
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        EdgeId along = -1;
        for (EdgeId e : c.edges_at(path[k]))
          if (sig.edge[e] && fin.edge[e] && c.other_endpoint(e, path[k]) == path[k + 1])
            along = e;
        const int from_side = c.edge(along).v == path[k] ? 0 : 1;
        const int t = vsheet[path[k]] ^ edge_end_sheet[along][from_side];
        esheet[along] = t;
        vsheet[path[k + 1]] = t ^ edge_end_sheet[along][1 - from_side];
      }
      std::vector<FacetId> lifted_fin;
      for (EdgeId e = 0; e < ne; ++e) {
        if (!fin.edge[e] || sig.edge[e]) continue;
        edges[2 * e + sheet] = {2 * c.edge(e).v + vsheet[c.edge(e).v],
                                2 * c.edge(e).w + vsheet[c.edge(e).w]};
        edge_done[2 * e + sheet] = 1;
      }
      for (FacetId f : d.fins[i]) {
        const Facet& fc = c.facet(f);
        Facet& out = facets[2 * f + sheet];
        for (int k = 0; k < 3; ++k) {
          out.vertices[k] = 2 * fc.vertices[k] + vsheet[fc.vertices[k]];
          out.edges[k] = 2 * fc.edges[k] + esheet[fc.edges[k]];
        }
        lifted_fin.push_back(2 * f + sheet);
      }
      std::sort(lifted_fin.begin(), lifted_fin.end());
      lifted.fins.push_back(std::move(lifted_fin));
    }
  }
  if (std::count(edge_done.begin(), edge_done.end(), 0) != 0) {
    throw Error(ErrorCode::NotVerifiedDecomposition, "edges outside sigma and fins");
  }

  CoveringMap map;
  for (int x = 0; x < 2 * nv; ++x) map.vertex.push_back(x / 2);
  for (int x = 0; x < 2 * ne; ++x) map.edge.push_back(x / 2);
  for (int x = 0; x < 2 * nf; ++x) map.facet.push_back(x / 2);

  DoubleCover out{DeltaComplex2(2 * nv, std::move(edges), std::move(facets)), std::move(map),
                  std::nullopt, std::move(lifted)};
  if (alpha) {
    StructureConstants lifted_alpha(2 * ne);
    for (EdgeId e = 0; e < 2 * ne; ++e) {
      const EdgeId base = e / 2;
      for (int side = 0; side < 2; ++side) {
        const VertexId x = side == 0 ? out.complex.edge(e).v : out.complex.edge(e).w;
        lifted_alpha.set_side(e, side, alpha->at(c, base, x / 2));
      }
    }
    out.alpha = std::move(lifted_alpha);
  }
  return out;
}

bool is_covering_map(const DeltaComplex2& cover, const DeltaComplex2& base,
                     const CoveringMap& map) {
  if (map.vertex.size() != static_cast<std::size_t>(cover.vertex_count()) ||
      map.edge.size() != static_cast<std::size_t>(cover.edge_count()) ||
      map.facet.size() != static_cast<std::size_t>(cover.facet_count()))
    return false;
  if (cover.vertex_count() != 2 * base.vertex_count() ||
      cover.edge_count() != 2 * base.edge_count() ||
      cover.facet_count() != 2 * base.facet_count())
    return false;
  std::vector<int> vhits(base.vertex_count(), 0), ehits(base.edge_count(), 0),
      fhits(base.facet_count(), 0);
  for (VertexId v : map.vertex) ++vhits.at(v);
  for (EdgeId e : map.edge) ++ehits.at(e);
  for (FacetId f : map.facet) ++fhits.at(f);
  auto all_two = [](const std::vector<int>& h) {
    return std::all_of(h.begin(), h.end(), [](int k) { return k == 2; });
  };
  if (!all_two(vhits) || !all_two(ehits) || !all_two(fhits)) return false;
  for (EdgeId e = 0; e < cover.edge_count(); ++e) {
    const Edge& ce = cover.edge(e);
    const Edge& be = base.edge(map.edge[e]);
    std::array<VertexId, 2> img{map.vertex[ce.v], map.vertex[ce.w]};
    std::sort(img.begin(), img.end());
    if (img[0] != be.v || img[1] != be.w) return false;
  }
  for (FacetId f = 0; f < cover.facet_count(); ++f) {
    const Facet& cf = cover.facet(f);
    const Facet& bf = base.facet(map.facet[f]);
    std::array<VertexId, 3> vs{};
    std::array<EdgeId, 3> es{}, bes = bf.edges;
    for (int k = 0; k < 3; ++k) {
      vs[k] = map.vertex[cf.vertices[k]];
      es[k] = map.edge[cf.edges[k]];
    }
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    std::sort(bes.begin(), bes.end());
    if (vs != bf.vertices || es != bes) return false;
  }
  // Local injectivity: distinct cover edges at a vertex map to distinct base
  // edges, and likewise for facets at an edge.
  for (VertexId v = 0; v < cover.vertex_count(); ++v) {
    std::vector<EdgeId> img;
    for (EdgeId e : cover.edges_at(v)) img.push_back(map.edge[e]);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    if (img.size() != base.edges_at(map.vertex[v]).size()) return false;
  }
  for (EdgeId e = 0; e < cover.edge_count(); ++e) {
    if (cover.facets_of_edge(e).size() != base.facets_of_edge(map.edge[e]).size()) return false;
  }
  return true;
}

std::string serialize_cover(const CoveringMap& map) {
  std::ostringstream out;
  out << "# cover vertices\n";
  for (std::size_t x = 0; x < map.vertex.size(); ++x)
    out << "cover " << x << ' ' << map.vertex[x] << ' ' << x % 2 << '\n';
  out << "# cover edges\n";
  for (std::size_t x = 0; x < map.edge.size(); ++x)
    out << "cover " << x << ' ' << map.edge[x] << ' ' << x % 2 << '\n';
  out << "# cover facets\n";
  for (std::size_t x = 0; x < map.facet.size(); ++x)
    out << "cover " << x << ' ' << map.facet[x] << ' ' << x % 2 << '\n';
  return out.str();
}

}  // namespace tropsurf
