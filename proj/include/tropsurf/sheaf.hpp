#pragma once

// Global linear functions and sections of the quotient sheaf D = A / R.
//
// A vertex potential h is linear when, at every edge e = (v, w) with opposite
// vertices o_1..o_d,  sum_i h(o_i) = alpha(v,e) h(v) + alpha(w,e) h(w).
// A section of D is an integer edge cochain g, with g(v->w) = -g(w->v), that
// is a cocycle on every facet and satisfies, at every edge e = (v, w) with
// v = edge.v,  sum_i g(v->o_i) = alpha(w,e) g(v->w).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropsurf/linalg.hpp"
#include "tropsurf/tropical.hpp"

namespace tropsurf {

/// Rational value per vertex.
using VertexPotential = std::vector<Rational>;

/// g(edge.v -> edge.w) per edge.
using SectionOfD = std::vector<BigInt>;

/// Rows are potentials with h(0) = 0 spanning the linear functions modulo
/// constants, in reduced echelon form.
RationalMatrix global_linear_functions(const WeakTropicalSurface& surface);

/// True when h satisfies the balancing law at every edge in `edges`.
bool is_balanced(const WeakTropicalSurface& surface, std::span<const Rational> h,
                 std::span<const EdgeId> edges);

/// Deterministic basis of H^1(complex, Q) = cocycles / coboundaries.
class H1Basis {
 public:
  explicit H1Basis(const DeltaComplex2& complex);

  std::size_t dimension() const { return pivots_.size(); }
  bool is_cocycle(std::span<const Rational> g) const;
  /// Throws NotACocycle or DimensionMismatch.
  std::vector<Rational> coordinates(std::span<const Rational> g) const;

 private:
  void reduce_mod_coboundaries(std::vector<Rational>& g) const;

  const DeltaComplex2* complex_;
  RationalMatrix coboundaries_;  // reduced echelon rows
  std::vector<std::size_t> coboundary_pivots_;
  std::vector<std::size_t> pivots_;  // pivot columns of the reduced cocycle basis
};

std::vector<Rational> class_in_H1(const DeltaComplex2& complex, std::span<const BigInt> g);

struct SheafSummary {
  int linear_rank = 0;  // global linear functions modulo constants
  int h0_rank = 0;      // sections of D
  int image_rank = 0;   // image of H^0(D) in H^1(complex, Q)
  RationalMatrix linear_basis;
  IntegerMatrix section_basis;    // rows are sections, Hermite normal form
  RationalMatrix section_classes; // row k is the H^1 class of section k
};

/// Coefficient matrix of the linear system defining sections of D: one row
/// per facet (cocycle), then one row per edge (balancing), over the edge
/// unknowns.
IntegerMatrix section_constraints(const WeakTropicalSurface& surface);

SheafSummary sections_of_D(const WeakTropicalSurface& surface);

/// True when g satisfies the cocycle law on every facet and the balancing law
/// stated from the given side (0: edge.v, 1: edge.w) at every edge.
bool satisfies_section_laws(const WeakTropicalSurface& surface, std::span<const BigInt> g,
                            int side);

/// (g(v0->v1), g(v0->v2)) for the facet corners v0 < v1 < v2. Throws UnknownId.
std::pair<BigInt, BigInt> restrict_to_facet(const DeltaComplex2& complex, FacetId s,
                                            std::span<const BigInt> g);

struct AllButOneReport {
  EdgeId edge = 0;
  int degree = 0;
  /// Kernel dimension of the star system when facet j is left free.
  std::vector<int> kernel_dimension;
  /// Every choice leaves only the constants.
  bool forced = false;
  /// Coefficients (-1, ..., -1, alpha(v,e), alpha(w,e)) expressing e_1 in
  /// terms of e_2..e_d, e_{d+1}, e_{d+2} in the quotient lattice.
  std::vector<std::int64_t> relation;
  bool relation_sums_to_one = false;
};

AllButOneReport check_all_but_one(const WeakTropicalSurface& surface, EdgeId e);

enum class ProbeStatus { Passed, Violation, HypothesisNotMet };
std::string_view to_string(ProbeStatus status);

struct ProbeReport {
  ProbeStatus status = ProbeStatus::HypothesisNotMet;
  std::string detail;
  Rational maximum;
  bool maximum_interior = false;
  bool constant = false;
};

/// U is the union of open stars of the vertices in `interior`. `h` has one
/// value per vertex of the complex; only values on the closure of U are read.
ProbeReport max_principle_probe(const WeakTropicalSurface& surface,
                                std::span<const VertexId> interior,
                                std::span<const Rational> h);

}  // namespace tropsurf
