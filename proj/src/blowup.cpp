#include "tropsurf/blowup.hpp"

#include <sstream>
#include <stdexcept>

#include "tropsurf/error.hpp"

namespace tropsurf {

namespace {

Inertia vertex_inertia(const DeltaComplex2& complex, const StructureConstants& alpha,
                       VertexId v) {
  return inertia(local_matrix_entries(complex, alpha, v), complex.edges_at(v).size());
}

}  // namespace

std::pair<WeakTropicalSurface, BlowupRecord> blow_up_at(const WeakTropicalSurface& surface,
                                                       VertexId v, EdgeId e) {
  const DeltaComplex2& base = surface.complex();
  if (!base.has_vertex(v)) throw Error(ErrorCode::UnknownId, "vertex " + std::to_string(v));
  if (!base.has_edge(e)) throw Error(ErrorCode::UnknownId, "edge " + std::to_string(e));
  const Edge& ed = base.edge(e);
  if (ed.v != v && ed.w != v) {
    throw Error(ErrorCode::NotIncident, "edge " + std::to_string(e) + " does not contain vertex " +
                                            std::to_string(v));
  }
  BlowupRecord rec;
  rec.v = v;
  rec.e = e;
  rec.w = base.other_endpoint(e, v);
  rec.before_v = vertex_inertia(base, surface.alpha(), v);
  rec.before_w = vertex_inertia(base, surface.alpha(), rec.w);
  if (rec.before_v.n_plus != 0) {
    throw Error(ErrorCode::NotSemidefiniteAtVertex,
                "M_" + std::to_string(v) + " has " + std::to_string(rec.before_v.n_plus) +
                    " positive eigenvalue(s)");
  }

  rec.u = base.vertex_count();
  rec.e_w = base.edge_count();
  rec.e_v = base.edge_count() + 1;
  rec.facet = base.facet_count();

  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  edges.push_back({rec.w, rec.u});
  edges.push_back({v, rec.u});
  std::vector<Facet> facets(base.facets().begin(), base.facets().end());
  facets.push_back({{v, rec.w, rec.u}, {e, rec.e_v, rec.e_w}});
  DeltaComplex2 grown(base.vertex_count() + 1, std::move(edges), std::move(facets));

  StructureConstants alpha(grown.edge_count());
  for (EdgeId x = 0; x < base.edge_count(); ++x) {
    alpha.set_side(x, 0, surface.alpha().at_side(x, 0));
    alpha.set_side(x, 1, surface.alpha().at_side(x, 1));
  }
  rec.alpha_w_e = surface.alpha(e, rec.w);
  rec.alpha_v_e = surface.alpha(e, v) + 1;
  rec.alpha_w_ew = 0;
  rec.alpha_u_ew = 1;
  rec.alpha_v_ev = 2;
  rec.alpha_u_ev = -1;
  alpha.set(grown, e, rec.w, rec.alpha_w_e);
  alpha.set(grown, e, v, rec.alpha_v_e);
  alpha.set(grown, rec.e_w, rec.w, rec.alpha_w_ew);
  alpha.set(grown, rec.e_w, rec.u, rec.alpha_u_ew);
  alpha.set(grown, rec.e_v, v, rec.alpha_v_ev);
  alpha.set(grown, rec.e_v, rec.u, rec.alpha_u_ev);

  WeakTropicalSurface out(std::move(grown), std::move(alpha));
  rec.after_u = vertex_inertia(out.complex(), out.alpha(), rec.u);
  rec.after_v = vertex_inertia(out.complex(), out.alpha(), v);
  rec.after_w = vertex_inertia(out.complex(), out.alpha(), rec.w);
  if (rec.after_u.n_plus != 1 || rec.after_v.n_plus != 1 ||
      rec.after_w.n_plus != rec.before_w.n_plus) {
    std::ostringstream msg;
    msg << "blow-up postcondition failed at v=" << v << " e=" << e << ": M_u'" << rec.after_u
        << " M_v'" << rec.after_v << " M_w'" << rec.after_w << " (M_w" << rec.before_w << ")";
    throw std::logic_error(msg.str());
  }
  return {std::move(out), rec};
}

RobustifyResult robustify(const WeakTropicalSurface& surface) {
  const Classification c = classify(surface);
  if (c.verdict != Verdict::Tropical && c.verdict != Verdict::DegenerationCompatible) {
    for (VertexId v = 0; v < static_cast<VertexId>(c.per_vertex.size()); ++v) {
      if (c.per_vertex[v].n_plus >= 2) {
        throw Error(ErrorCode::PreconditionViolated,
                    "M_" + std::to_string(v) + " has " +
                        std::to_string(c.per_vertex[v].n_plus) + " positive eigenvalues");
      }
    }
    throw Error(ErrorCode::PreconditionViolated, std::string("verdict ") +
                                                     std::string(to_string(c.verdict)));
  }
  std::vector<VertexId> pending;
  for (VertexId v = 0; v < static_cast<VertexId>(c.per_vertex.size()); ++v)
    if (c.per_vertex[v].n_plus == 0) pending.push_back(v);

  RobustifyResult result{surface, {}};
  for (auto v : pending) {
    const EdgeId e = result.surface.complex().edges_at(v).front();
    // blow_up_at rechecks that v is still semidefinite; earlier blow-ups only
    // touch v through the far endpoint slot, which keeps its count.
    auto [next, record] = blow_up_at(result.surface, v, e);
    result.surface = std::move(next);
    result.records.push_back(record);
  }
  const Classification after = classify(result.surface);
  if (after.verdict != Verdict::Tropical) {
    throw std::logic_error("robustify produced verdict " + std::string(to_string(after.verdict)));
  }
  return result;
}

std::string format_record(const BlowupRecord& r) {
  std::ostringstream out;
  out << "# blowup v=" << r.v << " e=" << r.e << " w=" << r.w << " u'=" << r.u
      << " e_w'=" << r.e_w << " e_v'=" << r.e_v << " facet=" << r.facet
      << " alpha(w',e')=" << r.alpha_w_e << " alpha(v',e')=" << r.alpha_v_e
      << " alpha(w',e_w')=" << r.alpha_w_ew << " alpha(u',e_w')=" << r.alpha_u_ew
      << " alpha(v',e_v')=" << r.alpha_v_ev << " alpha(u',e_v')=" << r.alpha_u_ev
      << " n+(M_u')=" << r.after_u.n_plus << " n+(M_v')=" << r.after_v.n_plus
      << " n+(M_w')=" << r.after_w.n_plus << " n+(M_w)=" << r.before_w.n_plus;
  return out.str();
}

}  // namespace tropsurf
