#pragma once

// Combinatorial blow-up: attaching a triangle along an edge at a vertex whose
// local intersection matrix is negative semidefinite, with a fixed table of
// structure constants, so that every touched vertex ends with exactly one
// positive eigenvalue (or keeps its count).

#include <string>
#include <utility>
#include <vector>

#include "tropsurf/tropical.hpp"

namespace tropsurf {

struct BlowupRecord {
  VertexId v = 0;   // base vertex, semidefinite before
  EdgeId e = 0;     // edge the triangle is glued to
  VertexId w = 0;   // far endpoint of e
  VertexId u = 0;   // new vertex u'
  EdgeId e_w = 0;   // new edge e_w' = (w, u')
  EdgeId e_v = 0;   // new edge e_v' = (v, u')
  FacetId facet = 0;

  std::int64_t alpha_w_e = 0;   // alpha(w', e') = alpha(w, e)
  std::int64_t alpha_v_e = 0;   // alpha(v', e') = alpha(v, e) + 1
  std::int64_t alpha_w_ew = 0;  // alpha(w', e_w') = 0
  std::int64_t alpha_u_ew = 0;  // alpha(u', e_w') = 1
  std::int64_t alpha_v_ev = 0;  // alpha(v', e_v') = 2
  std::int64_t alpha_u_ev = 0;  // alpha(u', e_v') = -1

  Inertia before_v;
  Inertia before_w;
  Inertia after_u;
  Inertia after_v;
  Inertia after_w;
};

/// Throws NotIncident or NotSemidefiniteAtVertex (n_plus(M_v) != 0).
std::pair<WeakTropicalSurface, BlowupRecord> blow_up_at(const WeakTropicalSurface& surface,
                                                       VertexId v, EdgeId e);

struct RobustifyResult {
  WeakTropicalSurface surface;
  std::vector<BlowupRecord> records;
};

/// Blows up every originally semidefinite vertex once, in ascending vertex
/// order, each along its lowest-id edge. Throws PreconditionViolated when
/// some M_v has two or more positive eigenvalues (or constants are not weak).
RobustifyResult robustify(const WeakTropicalSurface& surface);

/// `# blowup v=<v> e=<e> u'=<u> ...` comment line.
std::string format_record(const BlowupRecord& record);

}  // namespace tropsurf
