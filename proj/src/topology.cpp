#include "tropsurf/topology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "tropsurf/error.hpp"
#include "tropsurf/linalg.hpp"

namespace tropsurf {

namespace {

// Direction induced on edge slot k by the stored corner order a < b < c:
// a->b and b->c agree with the stored edge direction, c->a opposes it.
int slot_direction(int slot) { return slot == 1 ? -1 : 1; }

int slot_of(const Facet& f, EdgeId e) {
  for (int k = 0; k < 3; ++k)
    if (f.edges[k] == e) return k;
  return -1;
}

std::vector<bool> membership(const DeltaComplex2& complex, std::span<const FacetId> facets) {
  std::vector<bool> in(complex.facet_count(), false);
  for (auto f : facets) {
    if (!complex.has_facet(f)) throw Error(ErrorCode::UnknownId, "facet " + std::to_string(f));
    in[f] = true;
  }
  return in;
}

}  // namespace

std::vector<FacetId> all_facets(const DeltaComplex2& complex) {
  std::vector<FacetId> out(complex.facet_count());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

int euler_characteristic(const DeltaComplex2& complex) {
  return complex.vertex_count() - complex.edge_count() + complex.facet_count();
}

int euler_characteristic(const DeltaComplex2& complex, std::span<const FacetId> facets) {
  const auto in = membership(complex, facets);
  std::vector<bool> vs(complex.vertex_count(), false), es(complex.edge_count(), false);
  int f_count = 0;
  for (FacetId f = 0; f < complex.facet_count(); ++f) {
    if (!in[f]) continue;
    ++f_count;
    for (auto v : complex.facet(f).vertices) vs[v] = true;
    for (auto e : complex.facet(f).edges) es[e] = true;
  }
  return static_cast<int>(std::count(vs.begin(), vs.end(), true)) -
         static_cast<int>(std::count(es.begin(), es.end(), true)) + f_count;
}

CohomologySummary betti_numbers(const DeltaComplex2& complex) {
  const int V = complex.vertex_count(), E = complex.edge_count(), F = complex.facet_count();
  RationalMatrix d1(V, E);
  for (EdgeId e = 0; e < E; ++e) {
    d1(complex.edge(e).v, e) = -1;
    d1(complex.edge(e).w, e) = 1;
  }
  RationalMatrix d2(E, F);
  for (FacetId f = 0; f < F; ++f)
    for (int k = 0; k < 3; ++k) d2(complex.facet(f).edges[k], f) = slot_direction(k);
  CohomologySummary s;
  s.rank_d1 = static_cast<int>(linalg::rank(std::move(d1)));
  s.rank_d2 = F == 0 ? 0 : static_cast<int>(linalg::rank(std::move(d2)));
  s.b0 = V - s.rank_d1;
  s.b1 = E - s.rank_d1 - s.rank_d2;
  s.b2 = F - s.rank_d2;
  return s;
}

int LinkGraph::degree(int node) const {
  int d = 0;
  for (const auto& arc : arcs) d += (arc.a == node) + (arc.b == node);
  return d;
}

int LinkGraph::component_count() const {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& arc : arcs) {
    int a = find(arc.a), b = find(arc.b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool LinkGraph::is_single_cycle() const {
  if (nodes.empty() || component_count() != 1) return false;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (degree(i) != 2) return false;
  return true;
}

LinkGraph vertex_link(const DeltaComplex2& complex, VertexId v) {
  if (!complex.has_vertex(v)) throw Error(ErrorCode::UnknownId, "vertex " + std::to_string(v));
  const auto facets = complex.facets_at(v);
  LinkGraph link;
  link.vertex = v;
  link.nodes.assign(complex.edges_at(v).begin(), complex.edges_at(v).end());
  auto node_of = [&](EdgeId e) {
    return static_cast<int>(std::lower_bound(link.nodes.begin(), link.nodes.end(), e) -
                            link.nodes.begin());
  };
  for (auto f : facets) {
    const Facet& fc = complex.facet(f);
    std::vector<int> ends;
    for (auto e : fc.edges) {
      const Edge& ed = complex.edge(e);
      if (ed.v == v || ed.w == v) ends.push_back(node_of(e));
    }
    link.arcs.push_back({ends[0], ends[1], f});
  }
  return link;
}

LinkGraph vertex_link(const DeltaComplex2& complex, VertexId v, std::span<const FacetId> facets) {
  const auto in = membership(complex, facets);
  LinkGraph full = vertex_link(complex, v);
  std::vector<bool> used(full.nodes.size(), false);
  for (const auto& arc : full.arcs)
    if (in[arc.facet]) used[arc.a] = used[arc.b] = true;
  LinkGraph out;
  out.vertex = v;
  std::vector<int> remap(full.nodes.size(), -1);
  for (std::size_t i = 0; i < full.nodes.size(); ++i)
    if (used[i]) {
      remap[i] = static_cast<int>(out.nodes.size());
      out.nodes.push_back(full.nodes[i]);
    }
  for (const auto& arc : full.arcs)
    if (in[arc.facet]) out.arcs.push_back({remap[arc.a], remap[arc.b], arc.facet});
  return out;
}

bool is_locally_connected_codim1(const DeltaComplex2& complex) {
  for (VertexId v = 0; v < complex.vertex_count(); ++v)
    if (!vertex_link(complex, v).connected()) return false;
  return true;
}

bool is_connected_codim1(const DeltaComplex2& complex) {
  if (complex.facet_count() == 0) return false;
  for (EdgeId e = 0; e < complex.edge_count(); ++e)
    if (complex.facets_of_edge(e).empty()) return false;
  std::vector<bool> seen(complex.facet_count(), false);
  std::vector<FacetId> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const FacetId f = stack.back();
    stack.pop_back();
    for (auto e : complex.facet(f).edges)
      for (auto g : complex.facets_of_edge(e))
        if (!seen[g]) {
          seen[g] = true;
          ++reached;
          stack.push_back(g);
        }
  }
  return reached == complex.facet_count();
}

bool is_closed_surface(const DeltaComplex2& complex, std::span<const FacetId> facets) {
  if (facets.empty()) return false;
  const auto in = membership(complex, facets);
  std::vector<int> degree(complex.edge_count(), 0);
  std::vector<bool> vertex_used(complex.vertex_count(), false);
  for (FacetId f = 0; f < complex.facet_count(); ++f) {
    if (!in[f]) continue;
    for (auto e : complex.facet(f).edges) ++degree[e];
    for (auto v : complex.facet(f).vertices) vertex_used[v] = true;
  }
  for (EdgeId e = 0; e < complex.edge_count(); ++e)
    if (degree[e] != 0 && degree[e] != 2) return false;
  for (VertexId v = 0; v < complex.vertex_count(); ++v)
    if (vertex_used[v] && !vertex_link(complex, v, facets).is_single_cycle()) return false;
  // Connectivity through shared edges.
  FacetId start = -1;
  int total = 0;
  for (FacetId f = 0; f < complex.facet_count(); ++f)
    if (in[f]) {
      if (start < 0) start = f;
      ++total;
    }
  std::vector<bool> seen(complex.facet_count(), false);
  std::vector<FacetId> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const FacetId f = stack.back();
    stack.pop_back();
    for (auto e : complex.facet(f).edges)
      for (auto g : complex.facets_of_edge(e))
        if (in[g] && !seen[g]) {
          seen[g] = true;
          ++reached;
          stack.push_back(g);
        }
  }
  return reached == total;
}

int edge_coherence(const DeltaComplex2& complex, EdgeId e, FacetId f, FacetId g) {
  const int sf = slot_of(complex.facet(f), e);
  const int sg = slot_of(complex.facet(g), e);
  if (sf < 0 || sg < 0) throw Error(ErrorCode::NotIncident, "facet does not contain edge");
  return -slot_direction(sf) * slot_direction(sg);
}

Orientation orientability(const DeltaComplex2& complex, std::span<const FacetId> facets) {
  if (!is_closed_surface(complex, facets)) {
    throw Error(ErrorCode::NotASurface, "facet set is not a closed surface");
  }
  const auto in = membership(complex, facets);
  Orientation result;
  std::vector<int> sign(complex.facet_count(), 0);
  std::vector<FacetId> parent(complex.facet_count(), -1);
  const FacetId root = *std::min_element(facets.begin(), facets.end());
  sign[root] = 1;
  std::queue<FacetId> queue;
  queue.push(root);
  auto path_to_root = [&](FacetId f) {
    std::vector<FacetId> path;
    for (; f >= 0; f = parent[f]) path.push_back(f);
    return path;
  };
  while (!queue.empty()) {
    const FacetId f = queue.front();
    queue.pop();
    for (auto e : complex.facet(f).edges) {
      for (auto g : complex.facets_of_edge(e)) {
        if (g == f || !in[g]) continue;
        const int want = sign[f] * edge_coherence(complex, e, f, g);
        if (sign[g] == 0) {
          sign[g] = want;
          parent[g] = f;
          queue.push(g);
        } else if (sign[g] != want) {
          // The two tree paths plus the edge f|g close up into an orientation
          // reversing loop.
          auto a = path_to_root(f);
          auto b = path_to_root(g);
          while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
            a.pop_back();
            b.pop_back();
          }
          b.pop_back();
          result.witness_cycle = a;
          result.witness_cycle.insert(result.witness_cycle.begin(), b.rbegin(), b.rend());
          result.orientable = false;
          return result;
        }
      }
    }
  }
  result.orientable = true;
  result.facet_sign = std::move(sign);
  return result;
}

}  // namespace tropsurf
