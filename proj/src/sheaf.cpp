#include "tropsurf/sheaf.hpp"

#include <algorithm>
#include <numeric>

#include "tropsurf/error.hpp"
#include "tropsurf/topology.hpp"

namespace tropsurf {

namespace {

// Edge of facet f other than e that contains v.
EdgeId side_edge(const DeltaComplex2& complex, FacetId f, EdgeId e, VertexId v) {
  for (EdgeId x : complex.facet(f).edges) {
    if (x == e) continue;
    const Edge& ed = complex.edge(x);
    if (ed.v == v || ed.w == v) return x;
  }
  return -1;
}

// Sign with which g_x contributes to g(v -> other endpoint of x).
int direction(const DeltaComplex2& complex, EdgeId x, VertexId v) {
  return complex.edge(x).v == v ? 1 : -1;
}

RationalMatrix coboundary_rows(const DeltaComplex2& complex) {
  // Row v is the coboundary of the indicator potential of v.
  RationalMatrix m(complex.vertex_count(), complex.edge_count());
  for (EdgeId e = 0; e < complex.edge_count(); ++e) {
    m(complex.edge(e).v, e) -= 1;
    m(complex.edge(e).w, e) += 1;
  }
  return m;
}

RationalMatrix cocycle_constraints(const DeltaComplex2& complex) {
  RationalMatrix m(complex.facet_count(), complex.edge_count());
  for (FacetId f = 0; f < complex.facet_count(); ++f) {
    const auto& ed = complex.facet(f).edges;
    m(f, ed[0]) += 1;
    m(f, ed[2]) += 1;
    m(f, ed[1]) -= 1;
  }
  return m;
}

}  // namespace

RationalMatrix global_linear_functions(const WeakTropicalSurface& surface) {
  const DeltaComplex2& c = surface.complex();
  RationalMatrix m(c.edge_count() + 1, c.vertex_count());
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const Edge& ed = c.edge(e);
    for (FacetId f : c.facets_of_edge(e)) m(e, opposite_vertex(c, f, e)) += 1;
    m(e, ed.v) -= surface.alpha(e, ed.v);
    m(e, ed.w) -= surface.alpha(e, ed.w);
  }
  m(c.edge_count(), 0) = 1;
  RationalMatrix basis = linalg::kernel(m);
  linalg::rref(basis);
  RationalMatrix out(0, c.vertex_count());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (std::any_of(basis.row(i).begin(), basis.row(i).end(),
                    [](const Rational& x) { return x != 0; }))
      out.append_row(basis.row(i));
  }
  return out;
}

bool is_balanced(const WeakTropicalSurface& surface, std::span<const Rational> h,
                 std::span<const EdgeId> edges) {
  const DeltaComplex2& c = surface.complex();
  for (EdgeId e : edges) {
    const Edge& ed = c.edge(e);
    Rational lhs = 0;
    for (FacetId f : c.facets_of_edge(e)) lhs += h[opposite_vertex(c, f, e)];
    const Rational rhs = surface.alpha(e, ed.v) * h[ed.v] + surface.alpha(e, ed.w) * h[ed.w];
    if (lhs != rhs) return false;
  }
  return true;
}

H1Basis::H1Basis(const DeltaComplex2& complex) : complex_(&complex) {
  coboundaries_ = coboundary_rows(complex);
  coboundary_pivots_ = linalg::rref(coboundaries_);
  RationalMatrix cocycles = linalg::kernel(cocycle_constraints(complex));
  RationalMatrix reduced(0, complex.edge_count());
  for (std::size_t i = 0; i < cocycles.rows(); ++i) {
    std::vector<Rational> g(cocycles.row(i).begin(), cocycles.row(i).end());
    reduce_mod_coboundaries(g);
    reduced.append_row(g);
  }
  pivots_ = linalg::rref(reduced);
}

void H1Basis::reduce_mod_coboundaries(std::vector<Rational>& g) const {
  for (std::size_t r = 0; r < coboundary_pivots_.size(); ++r) {
    const Rational factor = g[coboundary_pivots_[r]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) g[j] -= factor * coboundaries_(r, j);
  }
}

bool H1Basis::is_cocycle(std::span<const Rational> g) const {
  for (const Facet& f : complex_->facets()) {
    if (g[f.edges[0]] + g[f.edges[2]] != g[f.edges[1]]) return false;
  }
  return true;
}

std::vector<Rational> H1Basis::coordinates(std::span<const Rational> g) const {
  if (g.size() != static_cast<std::size_t>(complex_->edge_count())) {
    throw Error(ErrorCode::DimensionMismatch, "cochain has " + std::to_string(g.size()) +
                                                  " entries for " +
                                                  std::to_string(complex_->edge_count()) + " edges");
  }
  if (!is_cocycle(g)) throw Error(ErrorCode::NotACocycle, "cochain fails the facet cocycle law");
  std::vector<Rational> reduced(g.begin(), g.end());
  reduce_mod_coboundaries(reduced);
  std::vector<Rational> out;
  out.reserve(pivots_.size());
  for (auto p : pivots_) out.push_back(reduced[p]);
  return out;
}

std::vector<Rational> class_in_H1(const DeltaComplex2& complex, std::span<const BigInt> g) {
  std::vector<Rational> q(g.begin(), g.end());
  return H1Basis(complex).coordinates(q);
}

IntegerMatrix section_constraints(const WeakTropicalSurface& surface) {
  const DeltaComplex2& c = surface.complex();
  IntegerMatrix m(c.facet_count() + c.edge_count(), c.edge_count());
  for (FacetId f = 0; f < c.facet_count(); ++f) {
    const auto& ed = c.facet(f).edges;
    m(f, ed[0]) += 1;
    m(f, ed[2]) += 1;
    m(f, ed[1]) -= 1;
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const std::size_t row = c.facet_count() + e;
    const VertexId v = c.edge(e).v;
    const VertexId w = c.edge(e).w;
    for (FacetId f : c.facets_of_edge(e)) {
      const EdgeId x = side_edge(c, f, e, v);
      m(row, x) += direction(c, x, v);
    }
    m(row, e) -= surface.alpha(e, w);
  }
  return m;
}

SheafSummary sections_of_D(const WeakTropicalSurface& surface) {
  const DeltaComplex2& c = surface.complex();
  SheafSummary s;
  s.linear_basis = global_linear_functions(surface);
  s.linear_rank = static_cast<int>(s.linear_basis.rows());
  s.section_basis = linalg::integer_kernel(section_constraints(surface));
  s.h0_rank = static_cast<int>(s.section_basis.rows());
  const H1Basis h1(c);
  s.section_classes = RationalMatrix(0, h1.dimension());
  for (std::size_t k = 0; k < s.section_basis.rows(); ++k) {
    std::vector<Rational> g(s.section_basis.row(k).begin(), s.section_basis.row(k).end());
    s.section_classes.append_row(h1.coordinates(g));
  }
  s.image_rank = s.section_classes.cols() == 0
                     ? 0
                     : static_cast<int>(linalg::rank(s.section_classes));
  return s;
}

bool satisfies_section_laws(const WeakTropicalSurface& surface, std::span<const BigInt> g,
                            int side) {
  const DeltaComplex2& c = surface.complex();
  for (const Facet& f : c.facets()) {
    if (g[f.edges[0]] + g[f.edges[2]] != g[f.edges[1]]) return false;
  }
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const VertexId from = side == 0 ? c.edge(e).v : c.edge(e).w;
    const VertexId to = c.other_endpoint(e, from);
    BigInt lhs = 0;
    for (FacetId f : c.facets_of_edge(e)) {
      const EdgeId x = side_edge(c, f, e, from);
      lhs += direction(c, x, from) * g[x];
    }
    const BigInt along = direction(c, e, from) * g[e];
    if (lhs != surface.alpha(e, to) * along) return false;
  }
  return true;
}

std::pair<BigInt, BigInt> restrict_to_facet(const DeltaComplex2& complex, FacetId s,
                                            std::span<const BigInt> g) {
  if (!complex.has_facet(s)) throw Error(ErrorCode::UnknownId, "facet " + std::to_string(s));
  const Facet& f = complex.facet(s);
  return {g[f.edges[0]], g[f.edges[1]]};
}

AllButOneReport check_all_but_one(const WeakTropicalSurface& surface, EdgeId e) {
  const DeltaComplex2& c = surface.complex();
  if (!c.has_edge(e)) throw Error(ErrorCode::UnknownId, "edge " + std::to_string(e));
  AllButOneReport r;
  r.edge = e;
  r.degree = edge_degree(c, e);
  const int d = r.degree;
  const VertexId v = c.edge(e).v;
  const VertexId w = c.edge(e).w;
  const std::int64_t av = surface.alpha(e, v);
  const std::int64_t aw = surface.alpha(e, w);

  // Unknowns: h(o_1..o_d), h(v), h(w); each facet of the star gets its own
  // opposite corner.
  const std::size_t n = static_cast<std::size_t>(d) + 2;
  for (int free = 0; free < d; ++free) {
    RationalMatrix m(0, n);
    std::vector<Rational> row(n);
    for (int i = 0; i < d; ++i) row[i] = 1;
    row[d] = -av;
    row[d + 1] = -aw;
    m.append_row(row);
    for (int i = 0; i < d; ++i) {
      if (i == free) continue;
      std::fill(row.begin(), row.end(), Rational(0));
      row[i] = 1;
      row[d] = -1;
      m.append_row(row);
      std::fill(row.begin(), row.end(), Rational(0));
      row[d] = 1;
      row[d + 1] = -1;
      m.append_row(row);
    }
    r.kernel_dimension.push_back(static_cast<int>(n - linalg::rank(m)));
  }
  r.forced = d > 0 && std::all_of(r.kernel_dimension.begin(), r.kernel_dimension.end(),
                                  [](int k) { return k == 1; });
  for (int i = 1; i < d; ++i) r.relation.push_back(-1);
  r.relation.push_back(av);
  r.relation.push_back(aw);
  r.relation_sums_to_one =
      std::accumulate(r.relation.begin(), r.relation.end(), std::int64_t{0}) == 1;
  return r;
}

std::string_view to_string(ProbeStatus status) {
  switch (status) {
    case ProbeStatus::Passed: return "Passed";
    case ProbeStatus::Violation: return "Violation";
    case ProbeStatus::HypothesisNotMet: return "HypothesisNotMet";
  }
  return "?";
}

ProbeReport max_principle_probe(const WeakTropicalSurface& surface,
                                std::span<const VertexId> interior,
                                std::span<const Rational> h) {
  const DeltaComplex2& c = surface.complex();
  ProbeReport r;
  if (h.size() != static_cast<std::size_t>(c.vertex_count())) {
    throw Error(ErrorCode::DimensionMismatch, "potential has " + std::to_string(h.size()) +
                                                  " entries for " +
                                                  std::to_string(c.vertex_count()) + " vertices");
  }
  for (VertexId v : interior) {
    if (!c.has_vertex(v)) throw Error(ErrorCode::UnknownId, "vertex " + std::to_string(v));
  }
  if (interior.empty()) {
    r.detail = "empty open set";
    return r;
  }
  if (classify(surface).verdict != Verdict::Tropical) {
    r.detail = "structure is not tropical";
    return r;
  }
  if (!is_connected_codim1(c)) {
    r.detail = "complex is not connected through codimension 1";
    return r;
  }

  std::vector<char> in_s(c.vertex_count(), 0);
  for (VertexId v : interior) in_s[v] = 1;
  std::vector<char> seen(c.vertex_count(), 0);
  std::vector<VertexId> stack{interior.front()};
  seen[interior.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++reached;
    for (EdgeId e : c.edges_at(v)) {
      const VertexId u = c.other_endpoint(e, v);
      if (in_s[u] && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  const auto distinct = std::count(in_s.begin(), in_s.end(), 1);
  if (static_cast<std::ptrdiff_t>(reached) != distinct) {
    r.detail = "open set is not connected";
    return r;
  }

  std::vector<EdgeId> inner_edges;
  std::vector<char> in_closure(c.vertex_count(), 0);
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const Edge& ed = c.edge(e);
    if (!in_s[ed.v] && !in_s[ed.w]) continue;
    inner_edges.push_back(e);
    in_closure[ed.v] = in_closure[ed.w] = 1;
    for (FacetId f : c.facets_of_edge(e)) in_closure[opposite_vertex(c, f, e)] = 1;
  }
  if (!is_balanced(surface, h, inner_edges)) {
    r.detail = "potential is not balanced on the open set";
    return r;
  }

  bool first = true;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (!in_closure[v]) continue;
    if (first || h[v] > r.maximum) r.maximum = h[v];
    first = false;
  }
  r.constant = true;
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    if (!in_closure[v]) continue;
    if (h[v] != r.maximum) r.constant = false;
    if (in_s[v] && h[v] == r.maximum) r.maximum_interior = true;
  }
  if (r.maximum_interior && !r.constant) {
    r.status = ProbeStatus::Violation;
    r.detail = "nonconstant potential attains its maximum at an interior vertex";
  } else {
    r.status = ProbeStatus::Passed;
  }
  return r;
}

}  // namespace tropsurf
