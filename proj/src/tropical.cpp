#include "tropsurf/tropical.hpp"

#include <sstream>

#include "tropsurf/error.hpp"

namespace tropsurf {

namespace {

int side_of(const DeltaComplex2& complex, EdgeId e, VertexId v) {
  const Edge& ed = complex.edge(e);
  if (ed.v == v) return 0;
  if (ed.w == v) return 1;
  throw Error(ErrorCode::NotIncident, "vertex " + std::to_string(v) +
                                          " is not an endpoint of edge " + std::to_string(e));
}

}  // namespace

std::int64_t StructureConstants::at(const DeltaComplex2& complex, EdgeId e, VertexId v) const {
  return values_.at(e)[side_of(complex, e, v)];
}

void StructureConstants::set(const DeltaComplex2& complex, EdgeId e, VertexId v,
                             std::int64_t value) {
  values_.at(e)[side_of(complex, e, v)] = value;
}

std::vector<EdgeViolation> constraint_violations(const DeltaComplex2& complex,
                                                 const StructureConstants& alpha) {
  if (alpha.edge_count() != static_cast<std::size_t>(complex.edge_count())) {
    throw Error(ErrorCode::DimensionMismatch, "structure constants cover " +
                                                  std::to_string(alpha.edge_count()) +
                                                  " edges, complex has " +
                                                  std::to_string(complex.edge_count()));
  }
  std::vector<EdgeViolation> out;
  for (EdgeId e = 0; e < complex.edge_count(); ++e) {
    const int d = edge_degree(complex, e);
    if (alpha.at_side(e, 0) + alpha.at_side(e, 1) != d)
      out.push_back({e, alpha.at_side(e, 0), alpha.at_side(e, 1), d});
  }
  return out;
}

WeakTropicalSurface::WeakTropicalSurface(DeltaComplex2 complex, StructureConstants alpha)
    : complex_(std::move(complex)), alpha_(std::move(alpha)) {
  const auto bad = constraint_violations(complex_, alpha_);
  if (!bad.empty()) {
    std::ostringstream msg;
    for (std::size_t i = 0; i < bad.size(); ++i) {
      const auto& b = bad[i];
      const Edge& ed = complex_.edge(b.edge);
      if (i) msg << "; ";
      msg << "edge " << complex_.original_edge_id(b.edge) << ": alpha(" << ed.v
          << ")=" << b.alpha_v << " + alpha(" << ed.w << ")=" << b.alpha_w
          << " != deg " << b.degree;
    }
    throw Error(ErrorCode::ConstraintViolated, msg.str());
  }
}

WeakTropicalSurface attach_constants(const DeltaComplex2& complex,
                                     std::span<const AlphaLine> lines) {
  StructureConstants alpha(complex.edge_count());
  std::vector<std::array<bool, 2>> seen(complex.edge_count(), {false, false});
  for (const auto& line : lines) {
    const auto e = complex.edge_from_original(line.edge);
    if (!e) {
      throw Error(ErrorCode::UnknownId, "line " + std::to_string(line.line) + ": edge " +
                                            std::to_string(line.edge));
    }
    const Edge& ed = complex.edge(*e);
    int side;
    if (line.vertex == ed.v) {
      side = 0;
    } else if (line.vertex == ed.w) {
      side = 1;
    } else {
      throw Error(ErrorCode::UnknownId, "line " + std::to_string(line.line) + ": vertex " +
                                            std::to_string(line.vertex) +
                                            " is not an endpoint of edge " +
                                            std::to_string(line.edge));
    }
    if (seen[*e][side]) {
      throw Error(ErrorCode::DuplicateAlpha, "line " + std::to_string(line.line) + ": edge " +
                                                 std::to_string(line.edge) + " vertex " +
                                                 std::to_string(line.vertex));
    }
    seen[*e][side] = true;
    alpha.set_side(*e, side, line.value);
  }
  for (EdgeId e = 0; e < complex.edge_count(); ++e) {
    for (int side = 0; side < 2; ++side) {
      if (!seen[e][side]) {
        const Edge& ed = complex.edge(e);
        throw Error(ErrorCode::MissingAlpha, "edge " + std::to_string(complex.original_edge_id(e)) +
                                                 " vertex " + std::to_string(side ? ed.w : ed.v));
      }
    }
  }
  return WeakTropicalSurface(complex, std::move(alpha));
}

WeakTropicalSurface all_ones(const DeltaComplex2& complex) {
  StructureConstants alpha(complex.edge_count());
  for (EdgeId e = 0; e < complex.edge_count(); ++e) {
    const int d = edge_degree(complex, e);
    if (d != 2) {
      throw Error(ErrorCode::NotDegreeTwo, "edge " + std::to_string(complex.original_edge_id(e)) +
                                               " has degree " + std::to_string(d));
    }
    alpha.set_side(e, 0, 1);
    alpha.set_side(e, 1, 1);
  }
  return WeakTropicalSurface(complex, std::move(alpha));
}

std::string serialize_alpha(const DeltaComplex2& complex, const StructureConstants& alpha) {
  std::ostringstream out;
  for (EdgeId e = 0; e < complex.edge_count(); ++e) {
    const Edge& ed = complex.edge(e);
    out << "alpha " << e << ' ' << ed.v << ' ' << alpha.at_side(e, 0) << '\n';
    out << "alpha " << e << ' ' << ed.w << ' ' << alpha.at_side(e, 1) << '\n';
  }
  return out.str();
}

EdgeStar edge_star(const WeakTropicalSurface& surface, EdgeId e) {
  EdgeStar star = edge_star(surface.complex(), e);
  std::vector<std::int64_t> q(star.incident_facets.size(), 1);
  q.push_back(-surface.alpha(e, star.v));
  q.push_back(-surface.alpha(e, star.w));
  star.quotient_vector = std::move(q);
  return star;
}

int shared_facet_count(const DeltaComplex2& complex, EdgeId a, EdgeId b) {
  int count = 0;
  for (auto f : complex.facets_of_edge(a)) {
    const auto& es = complex.facet(f).edges;
    if (es[0] == b || es[1] == b || es[2] == b) ++count;
  }
  return count;
}

std::vector<std::int64_t> local_matrix_entries(const DeltaComplex2& complex,
                                               const StructureConstants& alpha, VertexId v) {
  const auto edges = complex.edges_at(v);
  const std::size_t n = edges.size();
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId far = complex.other_endpoint(edges[i], v);
    m[i * n + i] = -alpha.at(complex, edges[i], far);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = shared_facet_count(complex, edges[i], edges[j]);
      m[i * n + j] = m[j * n + i] = c;
    }
  }
  return m;
}

SymmetricRationalMatrix local_matrix(const WeakTropicalSurface& surface, VertexId v) {
  const auto entries = local_matrix_entries(surface.complex(), surface.alpha(), v);
  const std::size_t n = surface.complex().edges_at(v).size();
  SymmetricRationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, Rational(entries[i * n + j]));
  return m;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::NotWeak: return "NotWeak";
    case Verdict::WeakOnly: return "WeakOnly";
    case Verdict::DegenerationCompatible: return "DegenerationCompatible";
    case Verdict::Tropical: return "Tropical";
  }
  return "Unknown";
}

Classification classify(const DeltaComplex2& complex, const StructureConstants& alpha) {
  Classification c;
  c.violations = constraint_violations(complex, alpha);
  if (!c.violations.empty()) {
    c.verdict = Verdict::NotWeak;
    return c;
  }
  int max_plus = 0;
  int min_plus = INT32_MAX;
  for (VertexId v = 0; v < complex.vertex_count(); ++v) {
    const auto entries = local_matrix_entries(complex, alpha, v);
    const Inertia in = inertia(entries, complex.edges_at(v).size());
    c.per_vertex.push_back(in);
    max_plus = std::max(max_plus, in.n_plus);
    min_plus = std::min(min_plus, in.n_plus);
  }
  if (max_plus >= 2) {
    c.verdict = Verdict::WeakOnly;
  } else if (min_plus == 1) {
    c.verdict = Verdict::Tropical;
  } else {
    c.verdict = Verdict::DegenerationCompatible;
  }
  return c;
}

Classification classify(const WeakTropicalSurface& surface) {
  return classify(surface.complex(), surface.alpha());
}

}  // namespace tropsurf
