#pragma once

// Branch-and-prune enumeration of structure constants in a bounded window.
//
// Each edge e = (v, w) with v < w carries one free parameter t_e = alpha(v, e)
// in [-B, deg(e) + B]; alpha(w, e) = deg(e) - t_e, so the edge constraint
// holds by construction.

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "tropsurf/tropical.hpp"

namespace tropsurf {

enum class SearchMode { Tropical, AtMostOne };
std::string_view to_string(SearchMode mode);

struct SearchSpec {
  DeltaComplex2 complex;
  int bound = 1;
  SearchMode mode = SearchMode::Tropical;
  bool enumerate_all = false;
  /// Witnesses are sorted by the t-vector in edge-id order; with
  /// enumerate_all the sequence is complete and therefore schedule
  /// independent. Without enumerate_all the first witness of the lowest
  /// top-level branch is reported.
  bool deterministic = true;
  int threads = 1;
  /// With enumerate_all, stop after this many witnesses (0: no limit). A
  /// limited run is not exhausted; with one thread it returns the first
  /// witnesses in search order, sorted.
  std::size_t max_witnesses = 0;
  /// Called on every pruned node with the edges assigned so far (in search
  /// order) and their t values. Only invoked when threads == 1.
  std::function<void(std::span<const EdgeId>, std::span<const std::int64_t>)> on_prune;
};

struct SearchOutcome {
  std::vector<StructureConstants> witnesses;
  /// Every assignment in the window was covered; witnesses are complete.
  bool exhausted = false;
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes = 0;
  std::chrono::duration<double> elapsed{0};
};

/// Edge visiting order: vertices by descending degree (ties by id), each
/// contributing its not yet listed edges in ascending id.
std::vector<EdgeId> search_edge_order(const DeltaComplex2& complex);

/// t-vector (alpha at the lower endpoint) of constants, in edge-id order.
std::vector<std::int64_t> t_vector(const StructureConstants& alpha);
StructureConstants from_t_vector(const DeltaComplex2& complex, std::span<const std::int64_t> t);

SearchOutcome search(const SearchSpec& spec);

}  // namespace tropsurf
