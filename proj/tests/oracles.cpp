#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include <Eigen/Dense>

#include "tropsurf/linalg.hpp"

namespace tropsurf::oracle {

std::string fixture_path(std::string_view name) {
  return std::string(TROPSURF_FIXTURES) + "/" + std::string(name);
}

Fixture load_fixture(std::string_view name) { return read_fixture_file(fixture_path(name)); }

std::vector<std::string> closed_surface_fixtures() {
  return {"octahedron.trs", "icosahedron.trs", "torus7.trs",      "genus2.trs", "rp2.trs",
          "klein.trs",      "nonorientable3.trs", "bipyramid7.trs", "pillow.trs"};
}

std::vector<std::string> all_fixtures() {
  auto names = closed_surface_fixtures();
  for (const char* n : {"triangle.trs", "triangle_semidef.trs", "wedge_triangles.trs",
                        "torus_fin.trs", "torus_wedgefin.trs", "pillow_fin.trs", "torus_two_fins.trs",
                        "two_tori.trs", "rp2_fin.trs", "nonorientable3_fin.trs"})
    names.emplace_back(n);
  return names;
}

Inertia float_inertia(std::span<const std::int64_t> row_major, std::size_t n, double tol) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<double>(row_major[i * n + j]);
  Inertia out;
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double x = solver.eigenvalues()[i];
    if (x > tol) ++out.n_plus;
    else if (x < -tol) ++out.n_minus;
    else ++out.n_zero;
  }
  return out;
}

StructureConstants constants_from_t(const DeltaComplex2& c, const TVector& t) {
  StructureConstants alpha(c.edge_count());
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const auto deg = static_cast<std::int64_t>(c.facets_of_edge(e).size());
    alpha.set(c, e, c.edge(e).v, t[e]);
    alpha.set(c, e, c.edge(e).w, deg - t[e]);
  }
  return alpha;
}

std::vector<TVector> brute_force_witnesses(const DeltaComplex2& c, int bound, bool at_most_one) {
  const int ne = c.edge_count();
  std::vector<std::int64_t> hi(ne);
  for (EdgeId e = 0; e < ne; ++e)
    hi[e] = static_cast<std::int64_t>(c.facets_of_edge(e).size()) + bound;
  TVector t(ne, -bound);
  std::vector<TVector> out;
  while (true) {
    const Verdict v = classify(c, constants_from_t(c, t)).verdict;
    if (v == Verdict::Tropical || (at_most_one && v == Verdict::DegenerationCompatible))
      out.push_back(t);
    int i = ne - 1;
    while (i >= 0 && t[i] == hi[i]) t[i--] = -bound;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

int local_sections_rank(const WeakTropicalSurface& w) {
  const DeltaComplex2& c = w.complex();
  // Unknowns per vertex star: h_v at v itself, and h_v at the far end of each
  // edge at v (edge occurrences kept distinct).
  std::vector<int> center(c.vertex_count());
  std::vector<std::map<EdgeId, int>> end(c.vertex_count());
  int n = 0;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    center[v] = n++;
    for (EdgeId e : c.edges_at(v)) end[v][e] = n++;
  }
  auto other_edge_at = [&](FacetId f, EdgeId e, VertexId v) {
    for (EdgeId x : c.facet(f).edges)
      if (x != e && (c.edge(x).v == v || c.edge(x).w == v)) return x;
    return EdgeId{-1};
  };
  RationalMatrix rows(0, n);
  std::vector<Rational> row(n);
  auto clear = [&] { std::fill(row.begin(), row.end(), Rational(0)); };

  // Balancing inside each star, at every edge through its center.
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    for (EdgeId e : c.edges_at(v)) {
      const VertexId x = c.other_endpoint(e, v);
      clear();
      for (FacetId f : c.facets_of_edge(e)) row[end[v][other_edge_at(f, e, v)]] += 1;
      row[center[v]] -= w.alpha(e, v);
      row[end[v][e]] -= w.alpha(e, x);
      rows.append_row(row);
    }
  }
  // On each component of an overlap of two stars (an open edge together
  // with the open facets through it) the two local functions differ by a
  // constant.
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const VertexId v = c.edge(e).v, x = c.edge(e).w;
    // difference at v: h_v(v) - h_x(v)
    auto base = [&] {
      clear();
      row[center[v]] -= 1;
      row[end[x][e]] += 1;
    };
    base();
    row[end[v][e]] += 1;
    row[center[x]] -= 1;
    rows.append_row(row);
    for (FacetId f : c.facets_of_edge(e)) {
      base();
      row[end[v][other_edge_at(f, e, v)]] += 1;
      row[end[x][other_edge_at(f, e, x)]] -= 1;
      rows.append_row(row);
    }
  }
  const int r = rows.rows() == 0 ? 0 : static_cast<int>(linalg::rank(rows));
  return n - r - c.vertex_count();
}

namespace {

struct Shape {
  int n = 0;
  std::vector<std::pair<int, int>> edges;             // sorted, u < v
  std::vector<std::pair<std::array<int, 3>, int>> tri;  // sorted triples with multiplicity

  bool operator<(const Shape& o) const {
    return std::tie(n, edges, tri) < std::tie(o.n, o.edges, o.tri);
  }
};

Shape relabel(const Shape& s, const std::vector<int>& p) {
  Shape out;
  out.n = s.n;
  for (auto [a, b] : s.edges) out.edges.emplace_back(std::min(p[a], p[b]), std::max(p[a], p[b]));
  std::sort(out.edges.begin(), out.edges.end());
  for (auto [t, m] : s.tri) {
    std::array<int, 3> q{p[t[0]], p[t[1]], p[t[2]]};
    std::sort(q.begin(), q.end());
    out.tri.emplace_back(q, m);
  }
  std::sort(out.tri.begin(), out.tri.end());
  return out;
}

Shape canonical(const Shape& s) {
  std::vector<int> p(s.n);
  std::iota(p.begin(), p.end(), 0);
  Shape best = relabel(s, p);
  while (std::next_permutation(p.begin(), p.end())) {
    Shape cand = relabel(s, p);
    if (cand.edges < best.edges || (cand.edges == best.edges && cand.tri < best.tri))
      best = std::move(cand);
  }
  return best;
}

DeltaComplex2 build(const Shape& s) {
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, EdgeId> id;
  for (auto [a, b] : s.edges) {
    id[{a, b}] = static_cast<EdgeId>(edges.size());
    edges.push_back({a, b});
  }
  std::vector<Facet> facets;
  for (auto [t, m] : s.tri)
    for (int k = 0; k < m; ++k)
      facets.push_back({{t[0], t[1], t[2]}, {id[{t[0], t[1]}], id[{t[0], t[2]}], id[{t[1], t[2]}]}});
  return DeltaComplex2(s.n, std::move(edges), std::move(facets));
}

}  // namespace

std::vector<DeltaComplex2> small_complexes(int max_edges) {
  // Connected simple graphs, grown one edge at a time up to isomorphism.
  std::set<Shape> graphs;
  std::vector<Shape> frontier{canonical(Shape{2, {{0, 1}}, {}})};
  graphs.insert(frontier.front());
  for (int k = 1; k < max_edges; ++k) {
    std::vector<Shape> next;
    for (const Shape& g : frontier) {
      std::set<std::pair<int, int>> present(g.edges.begin(), g.edges.end());
      std::vector<Shape> grown;
      for (int a = 0; a < g.n; ++a) {
        for (int b = a + 1; b < g.n; ++b) {
          if (present.count({a, b})) continue;
          Shape h = g;
          h.edges.emplace_back(a, b);
          grown.push_back(h);
        }
        Shape h = g;
        h.n += 1;
        h.edges.emplace_back(a, g.n);
        grown.push_back(h);
      }
      for (auto& h : grown) {
        std::sort(h.edges.begin(), h.edges.end());
        Shape cf = canonical(h);
        if (graphs.insert(cf).second) next.push_back(cf);
      }
    }
    frontier = std::move(next);
  }

  std::set<Shape> shapes;
  for (const Shape& g : graphs) {
    std::set<std::pair<int, int>> present(g.edges.begin(), g.edges.end());
    std::vector<std::array<int, 3>> triangles;
    for (int a = 0; a < g.n; ++a)
      for (int b = a + 1; b < g.n; ++b)
        for (int d = b + 1; d < g.n; ++d)
          if (present.count({a, b}) && present.count({a, d}) && present.count({b, d}))
            triangles.push_back({a, b, d});
    std::vector<int> mult(triangles.size(), 0);
    while (true) {
      Shape s = g;
      for (std::size_t i = 0; i < triangles.size(); ++i)
        if (mult[i]) s.tri.emplace_back(triangles[i], mult[i]);
      shapes.insert(canonical(s));
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == 2) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
  std::vector<DeltaComplex2> out;
  for (const Shape& s : shapes) out.push_back(build(s));
  return out;
}

std::vector<DeltaComplex2> two_facet_complexes() {
  std::vector<DeltaComplex2> out;
  // Two facets on vertex sets {0,1,2} and a second triple sharing s vertices,
  // with k of the possible shared edges identified.
  auto make = [](int shared_vertices, int shared_edges) {
    std::array<int, 3> a{0, 1, 2};
    std::array<int, 3> b{};
    int next = 3;
    for (int i = 0; i < 3; ++i) b[i] = i < shared_vertices ? i : next++;
    std::vector<Edge> edges;
    auto add = [&](int u, int v) {
      edges.push_back({std::min(u, v), std::max(u, v)});
      return static_cast<EdgeId>(edges.size() - 1);
    };
    const std::array<std::pair<int, int>, 3> slots{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<EdgeId, 3> ea{}, eb{};
    for (int s = 0; s < 3; ++s) ea[s] = add(a[slots[s].first], a[slots[s].second]);
    int identified = 0;
    for (int s = 0; s < 3; ++s) {
      const bool both_shared = slots[s].second < shared_vertices;
      if (both_shared && identified < shared_edges) {
        eb[s] = ea[s];
        ++identified;
      } else {
        eb[s] = add(b[slots[s].first], b[slots[s].second]);
      }
    }
    std::vector<Facet> facets{{a, ea}, {b, eb}};
    return DeltaComplex2(next, std::move(edges), std::move(facets));
  };
  out.push_back(DeltaComplex2(3, {{0, 1}, {0, 2}, {1, 2}}, {{{0, 1, 2}, {0, 1, 2}}}));
  out.push_back(DeltaComplex2(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}, {{{0, 1, 2}, {0, 1, 2}}}));
  for (auto [s, k] : std::vector<std::pair<int, int>>{
           {1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {3, 3}})
    out.push_back(make(s, k));
  return out;
}

}  // namespace tropsurf::oracle
