#include "tropsurf/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tropsurf/inertia.hpp"

namespace tropsurf {

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::Tropical ? "tropical" : "at-most-one";
}

std::vector<EdgeId> search_edge_order(const DeltaComplex2& c) {
  std::vector<VertexId> vertices(c.vertex_count());
  std::iota(vertices.begin(), vertices.end(), 0);
  std::stable_sort(vertices.begin(), vertices.end(), [&](VertexId a, VertexId b) {
    return c.edges_at(a).size() > c.edges_at(b).size();
  });
  std::vector<char> listed(c.edge_count(), 0);
  std::vector<EdgeId> order;
  for (VertexId v : vertices) {
    for (EdgeId e : c.edges_at(v)) {
      if (listed[e]) continue;
      listed[e] = 1;
      order.push_back(e);
    }
  }
  return order;
}

std::vector<std::int64_t> t_vector(const StructureConstants& alpha) {
  std::vector<std::int64_t> t(alpha.edge_count());
  for (std::size_t e = 0; e < t.size(); ++e) t[e] = alpha.at_side(static_cast<EdgeId>(e), 0);
  return t;
}

StructureConstants from_t_vector(const DeltaComplex2& c, std::span<const std::int64_t> t) {
  StructureConstants alpha(c.edge_count());
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    alpha.set_side(e, 0, t[e]);
    alpha.set_side(e, 1, edge_degree(c, e) - t[e]);
  }
  return alpha;
}

namespace {

constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();

struct VertexData {
  std::vector<EdgeId> edges;         // edges_at(v)
  std::vector<std::int64_t> base;    // off-diagonal entries, zero diagonal
  std::vector<int> lower_side;       // 1 when v is edge.v
  std::vector<std::int64_t> degree;  // deg of each edge
  // Memo of check results keyed by the values on the assigned edges, which
  // are always the first few edges of `by_position`. 0 unknown, 1 ok, 2 prune.
  std::vector<EdgeId> by_position;
  std::vector<std::uint64_t> stride;   // place value of each edge in by_position
  std::vector<std::uint64_t> offset;   // first slot for k assigned edges
  std::unique_ptr<std::atomic<std::uint8_t>[]> memo;
};

// Vertices whose memo would exceed this many slots are evaluated directly.
constexpr std::uint64_t kMemoLimit = std::uint64_t{1} << 26;

class Engine {
 public:
  bool limit_hit() const { return limit_hit_.load(); }

  explicit Engine(const SearchSpec& spec) : spec_(spec), c_(spec.complex) {
    order_ = search_edge_order(c_);
    position_.assign(c_.edge_count(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = static_cast<int>(i);
    vertices_.resize(c_.vertex_count());
    for (VertexId v = 0; v < c_.vertex_count(); ++v) {
      VertexData& d = vertices_[v];
      d.edges.assign(c_.edges_at(v).begin(), c_.edges_at(v).end());
      const std::size_t k = d.edges.size();
      d.base.assign(k * k, 0);
      for (std::size_t a = 0; a < k; ++a) {
        d.lower_side.push_back(c_.edge(d.edges[a]).v == v ? 1 : 0);
        d.degree.push_back(edge_degree(c_, d.edges[a]));
        for (std::size_t b = 0; b < k; ++b)
          if (a != b) d.base[a * k + b] = shared_facet_count(c_, d.edges[a], d.edges[b]);
      }
    }
    // Last search position touching each vertex: the vertex is complete once
    // that position is assigned.
    completes_at_.assign(c_.vertex_count(), -1);
    for (VertexId v = 0; v < c_.vertex_count(); ++v)
      for (EdgeId e : vertices_[v].edges)
        completes_at_[v] = std::max(completes_at_[v], position_[e]);
    for (VertexId v = 0; v < c_.vertex_count(); ++v) {
      VertexData& d = vertices_[v];
      d.by_position = d.edges;
      std::sort(d.by_position.begin(), d.by_position.end(),
                [&](EdgeId a, EdgeId b) { return position_[a] < position_[b]; });
      std::uint64_t states = 1, total = 0;
      bool fits = true;
      for (EdgeId e : d.by_position) {
        d.offset.push_back(total);
        d.stride.push_back(states);
        total += states;
        states *= static_cast<std::uint64_t>(high(e) - low() + 1);
        if (total + states > kMemoLimit) fits = false;
        if (!fits) break;
      }
      if (!fits) continue;
      d.offset.push_back(total);
      total += states;
      d.memo.reset(new std::atomic<std::uint8_t>[total]);
      for (std::uint64_t i = 0; i < total; ++i) d.memo[i].store(0, std::memory_order_relaxed);
    }
  }

  const std::vector<EdgeId>& order() const { return order_; }

  std::int64_t low() const { return -spec_.bound; }
  std::int64_t high(EdgeId e) const { return edge_degree(c_, e) + spec_.bound; }

  enum class Check { Ok, Prune };

  // Completion test at v given the current partial assignment t, in which
  // exactly the positions below `depth` are set.
  Check check_vertex(VertexId v, const std::vector<std::int64_t>& t, int depth,
                     std::vector<std::int64_t>& m) const {
    const VertexData& d = vertices_[v];
    if (!d.memo) return evaluate_vertex(v, t, depth, m);
    std::size_t k = 0;
    std::uint64_t slot = 0;
    while (k < d.by_position.size() && position_[d.by_position[k]] < depth) {
      slot += static_cast<std::uint64_t>(t[d.by_position[k]] - low()) * d.stride[k];
      ++k;
    }
    slot += d.offset[k];
    const std::uint8_t known = d.memo[slot].load(std::memory_order_relaxed);
    if (known) return known == 1 ? Check::Ok : Check::Prune;
    const Check result = evaluate_vertex(v, t, depth, m);
    d.memo[slot].store(result == Check::Ok ? 1 : 2, std::memory_order_relaxed);
    return result;
  }

  Check evaluate_vertex(VertexId v, const std::vector<std::int64_t>& t, int depth,
                        std::vector<std::int64_t>& m) const {
    const VertexData& d = vertices_[v];
    const std::size_t k = d.edges.size();
    const bool complete = completes_at_[v] < depth;
    m.assign(d.base.begin(), d.base.end());
    auto fill = [&](std::int64_t unset_value) {
      for (std::size_t a = 0; a < k; ++a) {
        const std::int64_t te = t[d.edges[a]];
        m[a * k + a] = te == kUnset ? unset_value
                                    : (d.lower_side[a] ? te - d.degree[a] : -te);
      }
    };
    if (complete) {
      fill(0);
      const int np = inertia(m, k).n_plus;
      if (spec_.mode == SearchMode::Tropical ? np != 1 : np > 1) return Check::Prune;
      return Check::Ok;
    }
    // Lower completion: every completion dominates it in the Loewner order,
    // so n_plus >= 2 here rules out the whole subtree.
    // An unset diagonal entry is at least -deg - B.
    for (std::size_t a = 0; a < k; ++a) {
      const std::int64_t te = t[d.edges[a]];
      m[a * k + a] = te == kUnset ? -d.degree[a] - spec_.bound
                                  : (d.lower_side[a] ? te - d.degree[a] : -te);
    }
    if (inertia(m, k).n_plus >= 2) return Check::Prune;
    if (spec_.mode == SearchMode::Tropical) {
      // Upper completion: every completion is dominated by it, so n_plus = 0
      // here rules out exactly one positive eigenvalue.
      fill(spec_.bound);
      if (inertia(m, k).n_plus == 0) return Check::Prune;
    }
    return Check::Ok;
  }

  struct Task {
    std::vector<std::int64_t> prefix;  // forced values for the first positions
    std::vector<std::vector<std::int64_t>> witnesses;
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    bool aborted = false;
    std::vector<std::int64_t> scratch;
  };

  // Runs the subtree fixed by task.prefix. `stop` is the lowest task index
  // known to hold a witness in first-witness mode.
  void run(Task& task, std::size_t index, const std::atomic<std::size_t>* stop) {
    std::vector<std::int64_t> t(c_.edge_count(), kUnset);
    dfs(task, index, stop, t, 0);
  }

  bool root_ok(std::uint64_t& prunes) const {
    std::vector<std::int64_t> t(c_.edge_count(), kUnset);
    std::vector<std::int64_t> scratch;
    for (VertexId v = 0; v < c_.vertex_count(); ++v) {
      if (check_vertex(v, t, 0, scratch) == Check::Prune) {
        ++prunes;
        if (spec_.on_prune && spec_.threads <= 1) spec_.on_prune({}, {});
        return false;
      }
    }
    return true;
  }

 private:
  bool dfs(Task& task, std::size_t index, const std::atomic<std::size_t>* stop,
           std::vector<std::int64_t>& t, int depth) {
    if (limit_hit_.load(std::memory_order_relaxed) ||
        (stop && stop->load(std::memory_order_relaxed) < index)) {
      task.aborted = true;
      return true;
    }
    if (depth == static_cast<int>(order_.size())) {
      task.witnesses.push_back(t);
      if (spec_.enumerate_all && spec_.max_witnesses > 0 &&
          found_.fetch_add(1, std::memory_order_relaxed) + 1 >= spec_.max_witnesses) {
        limit_hit_.store(true, std::memory_order_relaxed);
      }
      return !spec_.enumerate_all || limit_hit_.load(std::memory_order_relaxed);
    }
    const EdgeId e = order_[depth];
    std::int64_t lo = low(), hi = high(e);
    if (depth < static_cast<int>(task.prefix.size())) lo = hi = task.prefix[depth];
    const VertexId ends[2] = {c_.edge(e).v, c_.edge(e).w};
    for (std::int64_t value = lo; value <= hi; ++value) {
      t[e] = value;
      ++task.nodes;
      bool pruned = false;
      for (VertexId x : ends) {
        if (check_vertex(x, t, depth + 1, task.scratch) == Check::Prune) {
          pruned = true;
          break;
        }
      }
      if (pruned) {
        ++task.prunes;
        if (spec_.on_prune && spec_.threads <= 1) report_prune(t, depth + 1);
        continue;
      }
      if (dfs(task, index, stop, t, depth + 1)) {
        t[e] = kUnset;
        return true;
      }
    }
    t[e] = kUnset;
    return false;
  }

  void report_prune(const std::vector<std::int64_t>& t, int depth) const {
    std::vector<EdgeId> edges(order_.begin(), order_.begin() + depth);
    std::vector<std::int64_t> values;
    for (EdgeId e : edges) values.push_back(t[e]);
    spec_.on_prune(edges, values);
  }

  const SearchSpec& spec_;
  const DeltaComplex2& c_;
  std::atomic<std::size_t> found_{0};
  std::atomic<bool> limit_hit_{false};
  std::vector<EdgeId> order_;
  std::vector<int> position_;
  std::vector<VertexData> vertices_;
  std::vector<int> completes_at_;
};

}  // namespace

SearchOutcome search(const SearchSpec& spec) {
  if (spec.bound < 0) throw std::invalid_argument("negative search bound");
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  Engine engine(spec);
  const DeltaComplex2& c = spec.complex;

  if (!engine.root_ok(out.prunes)) {
    out.exhausted = true;
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
  }

  // Top-level split over the first positions of the edge order.
  const int threads = std::max(1, spec.threads);
  std::vector<Engine::Task> tasks;
  std::size_t prefix_len = 0;
  if (threads > 1) {
    std::uint64_t count = 1;
    while (prefix_len < engine.order().size() && count < 16u * threads) {
      const EdgeId e = engine.order()[prefix_len];
      count *= static_cast<std::uint64_t>(engine.high(e) - engine.low() + 1);
      ++prefix_len;
    }
  }
  std::vector<std::int64_t> prefix(prefix_len, engine.low());
  while (true) {
    tasks.push_back({prefix, {}, 0, 0, false, {}});
    bool advanced = false;
    for (std::size_t i = prefix_len; i-- > 0;) {
      if (prefix[i] < engine.high(engine.order()[i])) {
        ++prefix[i];
        std::fill(prefix.begin() + static_cast<std::ptrdiff_t>(i) + 1, prefix.end(),
                  engine.low());
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  std::atomic<std::size_t> stop{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (!spec.enumerate_all && stop.load() < i) {
        tasks[i].aborted = true;
        continue;
      }
      engine.run(tasks[i], i, spec.enumerate_all ? nullptr : &stop);
      if (!spec.enumerate_all && !tasks[i].witnesses.empty()) {
        std::size_t cur = stop.load();
        while (i < cur && !stop.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<std::vector<std::int64_t>> found;
  for (auto& task : tasks) {
    out.nodes_explored += task.nodes;
    out.prunes += task.prunes;
    if (spec.enumerate_all) {
      found.insert(found.end(), task.witnesses.begin(), task.witnesses.end());
    } else if (found.empty() && !task.witnesses.empty()) {
      found.push_back(task.witnesses.front());
    }
  }
  if (spec.enumerate_all || spec.deterministic) std::sort(found.begin(), found.end());
  if (engine.limit_hit() && found.size() > spec.max_witnesses) found.resize(spec.max_witnesses);
  out.exhausted = (spec.enumerate_all && !engine.limit_hit()) || found.empty();

  for (const auto& t : found) {
    StructureConstants alpha = from_t_vector(c, t);
    const Verdict v = classify(c, alpha).verdict;
    const bool ok = spec.mode == SearchMode::Tropical
                        ? v == Verdict::Tropical
                        : (v == Verdict::Tropical || v == Verdict::DegenerationCompatible);
    if (!ok) throw std::logic_error("search emitted an assignment that fails classification");
    out.witnesses.push_back(std::move(alpha));
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace tropsurf
