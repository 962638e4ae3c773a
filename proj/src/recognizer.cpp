#include "tropsurf/recognizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tropsurf/topology.hpp"

namespace tropsurf {

namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i]);
  }
  return s;
}

// Vertices of a simple path formed by `edges`, in order from the lower
// endpoint; empty when the edges do not form one.
std::vector<VertexId> simple_path(const DeltaComplex2& c, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return {};
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    at[c.edge(e).v].push_back(e);
    at[c.edge(e).w].push_back(e);
  }
  std::vector<VertexId> ends;
  for (const auto& [v, list] : at) {
    if (list.size() > 2) return {};
    if (list.size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return {};
  std::vector<VertexId> path{ends[0]};
  EdgeId prev = -1;
  VertexId cur = ends[0];
  while (true) {
    EdgeId next = -1;
    for (EdgeId e : at[cur])
      if (e != prev) next = e;
    if (next == -1) break;
    cur = c.other_endpoint(next, cur);
    prev = next;
    path.push_back(cur);
    if (path.size() > edges.size() + 1) return {};
  }
  if (path.size() != edges.size() + 1) return {};
  return path;
}

struct Intersection {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<FacetId> facets;
};

Intersection intersect(const Subcomplex& a, const Subcomplex& b) {
  Intersection out;
  for (std::size_t i = 0; i < a.vertex.size(); ++i)
    if (a.vertex[i] && b.vertex[i]) out.vertices.push_back(static_cast<VertexId>(i));
  for (std::size_t i = 0; i < a.edge.size(); ++i)
    if (a.edge[i] && b.edge[i]) out.edges.push_back(static_cast<EdgeId>(i));
  for (std::size_t i = 0; i < a.facet.size(); ++i)
    if (a.facet[i] && b.facet[i]) out.facets.push_back(static_cast<FacetId>(i));
  return out;
}

void merge_into(Subcomplex& into, const Subcomplex& from) {
  for (std::size_t i = 0; i < into.vertex.size(); ++i) into.vertex[i] |= from.vertex[i];
  for (std::size_t i = 0; i < into.edge.size(); ++i) into.edge[i] |= from.edge[i];
  for (std::size_t i = 0; i < into.facet.size(); ++i) into.facet[i] |= from.facet[i];
}

}  // namespace

std::string_view to_string(FinStatus status) {
  return status == FinStatus::Certified ? "certified" : "unverified";
}

bool greedy_collapsible(const DeltaComplex2& c, const std::vector<FacetId>& facets) {
  Subcomplex s = closure(c, facets);
  std::vector<int> edge_cofaces(c.edge_count(), 0);
  std::vector<int> vertex_cofaces(c.vertex_count(), 0);
  for (FacetId f = 0; f < c.facet_count(); ++f)
    if (s.facet[f])
      for (EdgeId e : c.facet(f).edges) ++edge_cofaces[e];
  for (EdgeId e = 0; e < c.edge_count(); ++e)
    if (s.edge[e]) {
      ++vertex_cofaces[c.edge(e).v];
      ++vertex_cofaces[c.edge(e).w];
    }
  bool progress = true;
  while (progress) {
    progress = false;
    for (FacetId f = 0; f < c.facet_count(); ++f) {
      if (!s.facet[f]) continue;
      for (EdgeId e : c.facet(f).edges) {
        if (edge_cofaces[e] != 1) continue;
        s.facet[f] = 0;
        s.edge[e] = 0;
        for (EdgeId x : c.facet(f).edges) --edge_cofaces[x];
        --vertex_cofaces[c.edge(e).v];
        --vertex_cofaces[c.edge(e).w];
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      if (!s.edge[e] || edge_cofaces[e] != 0) continue;
      for (VertexId v : {c.edge(e).v, c.edge(e).w}) {
        if (vertex_cofaces[v] != 1) continue;
        s.edge[e] = 0;
        s.vertex[v] = 0;
        --vertex_cofaces[c.edge(e).v];
        --vertex_cofaces[c.edge(e).w];
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  const auto count = [](const std::vector<char>& flags) {
    return std::count(flags.begin(), flags.end(), 1);
  };
  return count(s.facet) == 0 && count(s.edge) == 0 && count(s.vertex) == 1;
}

DecompositionReport verify_decomposition(const DeltaComplex2& c, const Decomposition& d) {
  DecompositionReport r;
  auto violate = [&](int condition, std::string kind, std::string message) {
    r.violations.push_back({condition, std::move(kind), std::move(message)});
  };

  const Subcomplex sigma = closure(c, d.sigma);
  std::vector<Subcomplex> fins;
  for (const auto& fin : d.fins) fins.push_back(closure(c, fin));
  const Subcomplex orn =
      closure(c, d.ornament.facets, d.ornament.edges, d.ornament.vertices);

  // (1) union is everything
  Subcomplex all = sigma;
  for (const auto& f : fins) merge_into(all, f);
  merge_into(all, orn);
  std::vector<int> missing_f, missing_e, missing_v;
  for (FacetId f = 0; f < c.facet_count(); ++f)
    if (!all.facet[f]) missing_f.push_back(static_cast<int>(c.original_facet_id(f)));
  for (EdgeId e = 0; e < c.edge_count(); ++e)
    if (!all.edge[e]) missing_e.push_back(static_cast<int>(c.original_edge_id(e)));
  for (VertexId v = 0; v < c.vertex_count(); ++v)
    if (!all.vertex[v]) missing_v.push_back(v);
  if (!missing_f.empty()) violate(1, "NotCovered", "facets not covered: " + join_ids(missing_f));
  if (!missing_e.empty()) violate(1, "NotCovered", "edges not covered: " + join_ids(missing_e));
  if (!missing_v.empty())
    violate(1, "NotCovered", "vertices not covered: " + join_ids(missing_v));

  // (2) Sigma is a closed surface
  if (d.sigma.empty() || !is_closed_surface(c, d.sigma)) {
    violate(2, "SigmaNotSurface", "sigma is not a connected closed surface");
  } else {
    r.sigma_euler = euler_characteristic(c, d.sigma);
    r.hyperbolic = r.sigma_euler < 0;
  }

  // (3) each fin meets Sigma in a simple path; contractibility certificate
  for (std::size_t i = 0; i < fins.size(); ++i) {
    const std::string name = "fin " + std::to_string(i + 1);
    const Intersection x = intersect(fins[i], sigma);
    std::vector<VertexId> path;
    if (!x.facets.empty()) {
      violate(3, "FinPathBroken", name + " shares a facet with sigma");
    } else if (x.edges.empty() && x.vertices.size() == 1) {
      violate(3, "FinPathDegenerate",
              name + " meets sigma in the single vertex " + std::to_string(x.vertices[0]));
    } else {
      path = simple_path(c, x.edges);
      std::vector<VertexId> sorted = path;
      std::sort(sorted.begin(), sorted.end());
      if (path.empty() || sorted != x.vertices) {
        path.clear();
        violate(3, "FinPathBroken", name + " does not meet sigma in a simple path");
      }
    }
    r.fin_paths.push_back(path);
    const bool certified = euler_characteristic(c, d.fins[i]) == 1 &&
                           greedy_collapsible(c, d.fins[i]);
    r.fin_status.push_back(certified ? FinStatus::Certified : FinStatus::Unverified);
  }

  // (4) a later fin meets earlier ones only at the endpoints of its path
  for (std::size_t i = 0; i < fins.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Intersection x = intersect(fins[j], fins[i]);
      bool ok = x.edges.empty() && x.facets.empty();
      const auto& path = r.fin_paths[i];
      for (VertexId v : x.vertices) {
        if (path.empty() || (v != path.front() && v != path.back())) ok = false;
      }
      if (!ok) {
        violate(4, "FinOverlap",
                "fin " + std::to_string(j + 1) + " meets fin " + std::to_string(i + 1) +
                    " outside the endpoints of its path");
      }
    }
  }

  // (5) ornaments touch the rest only in vertices
  Subcomplex rest = sigma;
  for (const auto& f : fins) merge_into(rest, f);
  const Intersection x = intersect(orn, rest);
  if (!x.edges.empty() || !x.facets.empty()) {
    violate(5, "OrnamentContact", "ornament meets sigma or a fin in an edge or facet");
  }

  r.valid = r.violations.empty();
  return r;
}

std::optional<Decomposition> find_decomposition(const DeltaComplex2& c) {
  const int nf = c.facet_count();
  if (nf == 0) return std::nullopt;

  // Union-find over facets.
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto components = [&](auto joins) {
    std::iota(parent.begin(), parent.end(), 0);
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      const auto fs = c.facets_of_edge(e);
      if (fs.size() < 2 || !joins(e)) continue;
      for (std::size_t k = 1; k < fs.size(); ++k) parent[find(fs[k])] = find(fs[0]);
    }
    std::map<int, std::vector<FacetId>> by_root;
    for (FacetId f = 0; f < nf; ++f) by_root[find(f)].push_back(f);
    std::vector<std::vector<FacetId>> out;
    for (auto& [root, list] : by_root) out.push_back(std::move(list));
    return out;
  };

  // Sigma: largest closed-surface component of the degree-2 adjacency.
  std::vector<FacetId> sigma;
  for (auto& comp : components([&](EdgeId e) { return c.facets_of_edge(e).size() == 2; })) {
    if (comp.size() > sigma.size() && is_closed_surface(c, comp)) sigma = comp;
  }
  if (sigma.empty()) return std::nullopt;

  std::vector<char> in_sigma(nf, 0);
  for (FacetId f : sigma) in_sigma[f] = 1;
  Decomposition d;
  d.sigma = sigma;
  const Subcomplex sig = closure(c, sigma);

  std::vector<std::vector<FacetId>> fin_candidates;
  for (auto& comp : components([&](EdgeId e) {
         const auto fs = c.facets_of_edge(e);
         return std::none_of(fs.begin(), fs.end(), [&](FacetId f) { return in_sigma[f]; });
       })) {
    if (in_sigma[comp.front()]) continue;
    const Intersection x = intersect(closure(c, comp), sig);
    if (x.edges.empty()) {
      d.ornament.facets.insert(d.ornament.facets.end(), comp.begin(), comp.end());
    } else {
      fin_candidates.push_back(comp);
    }
  }
  std::sort(d.ornament.facets.begin(), d.ornament.facets.end());
  for (EdgeId e = 0; e < c.edge_count(); ++e)
    if (c.facets_of_edge(e).empty()) d.ornament.edges.push_back(e);

  // Order fins from the back: repeatedly pick a fin that may come last.
  std::vector<std::vector<VertexId>> paths;
  for (const auto& fin : fin_candidates) {
    const Intersection x = intersect(closure(c, fin), sig);
    paths.push_back(simple_path(c, x.edges));
    if (paths.back().empty()) return std::nullopt;
  }
  std::vector<int> remaining(fin_candidates.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> reversed_order;
  while (!remaining.empty()) {
    int chosen = -1;
    for (int i : remaining) {
      const Subcomplex fi = closure(c, fin_candidates[i]);
      bool ok = true;
      for (int j : remaining) {
        if (j == i) continue;
        const Intersection x = intersect(closure(c, fin_candidates[j]), fi);
        if (!x.edges.empty() || !x.facets.empty()) ok = false;
        for (VertexId v : x.vertices)
          if (v != paths[i].front() && v != paths[i].back()) ok = false;
      }
      if (ok) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) return std::nullopt;
    reversed_order.push_back(chosen);
    remaining.erase(std::find(remaining.begin(), remaining.end(), chosen));
  }
  for (auto it = reversed_order.rbegin(); it != reversed_order.rend(); ++it)
    d.fins.push_back(fin_candidates[*it]);

  if (!verify_decomposition(c, d).valid) return std::nullopt;
  return d;
}

}  // namespace tropsurf
