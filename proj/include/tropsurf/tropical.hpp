#pragma once

// Structure constants, the edge constraint alpha(v,e) + alpha(w,e) = deg(e),
// local intersection matrices and the weak / tropical classification.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tropsurf/complex.hpp"
#include "tropsurf/inertia.hpp"

namespace tropsurf {

/// alpha(v, e) for both endpoints of every edge. Values are stored per edge
/// as [alpha(edge.v, e), alpha(edge.w, e)].
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t edge_count) : values_(edge_count, {0, 0}) {}

  std::size_t edge_count() const { return values_.size(); }

  std::int64_t at(const DeltaComplex2& complex, EdgeId e, VertexId v) const;
  void set(const DeltaComplex2& complex, EdgeId e, VertexId v, std::int64_t value);

  /// side 0 is the lower endpoint edge.v, side 1 is edge.w.
  std::int64_t at_side(EdgeId e, int side) const { return values_.at(e)[side]; }
  void set_side(EdgeId e, int side, std::int64_t value) { values_.at(e)[side] = value; }

  auto operator<=>(const StructureConstants&) const = default;

 private:
  std::vector<std::array<std::int64_t, 2>> values_;
};

struct EdgeViolation {
  EdgeId edge = 0;
  std::int64_t alpha_v = 0;
  std::int64_t alpha_w = 0;
  int degree = 0;
};

/// Edges where alpha(v,e) + alpha(w,e) != deg(e), ascending.
std::vector<EdgeViolation> constraint_violations(const DeltaComplex2& complex,
                                                 const StructureConstants& alpha);

class WeakTropicalSurface {
 public:
  /// Throws ConstraintViolated listing every failing edge.
  WeakTropicalSurface(DeltaComplex2 complex, StructureConstants alpha);

  const DeltaComplex2& complex() const { return complex_; }
  const StructureConstants& alpha() const { return alpha_; }
  std::int64_t alpha(EdgeId e, VertexId v) const { return alpha_.at(complex_, e, v); }

 private:
  DeltaComplex2 complex_;
  StructureConstants alpha_;
};

/// Resolves `alpha` lines against the complex. Throws UnknownId,
/// DuplicateAlpha, MissingAlpha or ConstraintViolated.
WeakTropicalSurface attach_constants(const DeltaComplex2& complex,
                                     std::span<const AlphaLine> lines);

/// alpha = 1 at every incidence; throws NotDegreeTwo unless every edge lies
/// in exactly two facets.
WeakTropicalSurface all_ones(const DeltaComplex2& complex);

/// Text lines `alpha <eid> <vid> <int>` for every incidence, ascending edge
/// id then endpoint id.
std::string serialize_alpha(const DeltaComplex2& complex, const StructureConstants& alpha);

EdgeStar edge_star(const WeakTropicalSurface& surface, EdgeId e);

/// Off-diagonal (e, e') counts facets containing both edges; diagonal (e, e)
/// is -alpha(w, e) for the far endpoint w. Rows follow `edges_at(v)`.
SymmetricRationalMatrix local_matrix(const WeakTropicalSurface& surface, VertexId v);
std::vector<std::int64_t> local_matrix_entries(const DeltaComplex2& complex,
                                               const StructureConstants& alpha, VertexId v);

/// Number of facets containing both edges (both assumed to be at a common
/// vertex).
int shared_facet_count(const DeltaComplex2& complex, EdgeId a, EdgeId b);

enum class Verdict { NotWeak, WeakOnly, DegenerationCompatible, Tropical };

std::string_view to_string(Verdict verdict);

struct Classification {
  Verdict verdict = Verdict::NotWeak;
  std::vector<Inertia> per_vertex;  // empty for NotWeak
  std::vector<EdgeViolation> violations;
};

Classification classify(const WeakTropicalSurface& surface);
/// Same, for constants that have not been validated; reports NotWeak with
/// every violated edge.
Classification classify(const DeltaComplex2& complex, const StructureConstants& alpha);

}  // namespace tropsurf
