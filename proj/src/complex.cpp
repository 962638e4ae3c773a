#include "tropsurf/complex.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "tropsurf/error.hpp"

namespace tropsurf {

namespace {

std::string facet_label(std::int64_t original) {
  return "facet " + std::to_string(original);
}

std::string edge_label(std::int64_t original) {
  return "edge " + std::to_string(original);
}

}  // namespace

DeltaComplex2::DeltaComplex2(int vertex_count, std::vector<Edge> edges,
                             std::vector<Facet> facets,
                             std::vector<std::int64_t> original_edge_ids,
                             std::vector<std::int64_t> original_facet_ids)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      facets_(std::move(facets)),
      original_edge_ids_(std::move(original_edge_ids)),
      original_facet_ids_(std::move(original_facet_ids)) {
  if (original_edge_ids_.empty()) {
    original_edge_ids_.resize(edges_.size());
    std::iota(original_edge_ids_.begin(), original_edge_ids_.end(), 0);
  }
  if (original_facet_ids_.empty()) {
    original_facet_ids_.resize(facets_.size());
    std::iota(original_facet_ids_.begin(), original_facet_ids_.end(), 0);
  }
  if (original_edge_ids_.size() != edges_.size() ||
      original_facet_ids_.size() != facets_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "original id map size mismatch");
  }
  validate_and_index();
}

void DeltaComplex2::validate_and_index() {
  if (vertex_count_ <= 0) {
    throw Error(ErrorCode::Disconnected, "complex has no vertices");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (!has_vertex(e.v) || !has_vertex(e.w)) {
      throw Error(ErrorCode::UnknownId,
                  edge_label(original_edge_ids_[i]) + " references a vertex outside 0.." +
                      std::to_string(vertex_count_ - 1));
    }
    if (e.v == e.w) {
      throw Error(ErrorCode::NonRegular,
                  edge_label(original_edge_ids_[i]) + " has equal endpoints");
    }
    if (e.v > e.w) std::swap(e.v, e.w);
  }
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    Facet& f = facets_[i];
    const auto label = facet_label(original_facet_ids_[i]);
    for (auto v : f.vertices) {
      if (!has_vertex(v)) {
        throw Error(ErrorCode::UnknownId, label + " references unknown vertex " +
                                              std::to_string(v));
      }
    }
    for (auto e : f.edges) {
      if (!has_edge(e)) {
        throw Error(ErrorCode::UnknownId,
                    label + " references an unknown edge");
      }
    }
    const auto& vs = f.vertices;
    if (vs[0] == vs[1] || vs[0] == vs[2] || vs[1] == vs[2]) {
      throw Error(ErrorCode::NonRegular, label + " repeats a vertex");
    }
    const auto& es = f.edges;
    if (es[0] == es[1] || es[0] == es[2] || es[1] == es[2]) {
      throw Error(ErrorCode::NonRegular, label + " repeats an edge");
    }
    // Edge slot k joins corners (0,1), (0,2), (1,2).
    constexpr std::array<std::array<int, 2>, 3> kSlots{{{0, 1}, {0, 2}, {1, 2}}};
    for (int k = 0; k < 3; ++k) {
      const Edge& e = edges_[es[k]];
      VertexId a = vs[kSlots[k][0]], b = vs[kSlots[k][1]];
      if (a > b) std::swap(a, b);
      if (e.v != a || e.w != b) {
        throw Error(ErrorCode::IncoherentIncidence,
                    label + ": " + edge_label(original_edge_ids_[es[k]]) +
                        " does not join vertices " + std::to_string(a) + " and " +
                        std::to_string(b));
      }
    }
    // Canonical corner order: ascending vertex ids.
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end(),
              [&](int x, int y) { return vs[x] < vs[y]; });
    auto slot_of = [](int a, int b) {
      if (a > b) std::swap(a, b);
      return a == 0 ? (b == 1 ? 0 : 1) : 2;
    };
    Facet sorted;
    for (int k = 0; k < 3; ++k) sorted.vertices[k] = vs[perm[k]];
    sorted.edges[0] = es[slot_of(perm[0], perm[1])];
    sorted.edges[1] = es[slot_of(perm[0], perm[2])];
    sorted.edges[2] = es[slot_of(perm[1], perm[2])];
    f = sorted;
  }

  edge_facets_.assign(edges_.size(), {});
  vertex_edges_.assign(vertex_count_, {});
  vertex_facets_.assign(vertex_count_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    vertex_edges_[edges_[i].v].push_back(static_cast<EdgeId>(i));
    vertex_edges_[edges_[i].w].push_back(static_cast<EdgeId>(i));
  }
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    for (auto e : facets_[i].edges) edge_facets_[e].push_back(static_cast<FacetId>(i));
    for (auto v : facets_[i].vertices) vertex_facets_[v].push_back(static_cast<FacetId>(i));
  }

  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (vertex_edges_[v].empty()) {
      throw Error(ErrorCode::Disconnected,
                  "vertex " + std::to_string(v) + " lies on no edge");
    }
  }
  std::vector<bool> seen(vertex_count_, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (auto e : vertex_edges_[v]) {
      const VertexId u = other_endpoint(e, v);
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != vertex_count_) {
    throw Error(ErrorCode::Disconnected,
                "1-skeleton has more than one component (" +
                    std::to_string(reached) + " of " +
                    std::to_string(vertex_count_) + " vertices reachable from 0)");
  }
}

const Edge& DeltaComplex2::edge(EdgeId e) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownId, "edge " + std::to_string(e));
  return edges_[e];
}

const Facet& DeltaComplex2::facet(FacetId f) const {
  if (!has_facet(f)) throw Error(ErrorCode::UnknownId, "facet " + std::to_string(f));
  return facets_[f];
}

std::span<const FacetId> DeltaComplex2::facets_of_edge(EdgeId e) const {
  if (!has_edge(e)) throw Error(ErrorCode::UnknownId, "edge " + std::to_string(e));
  return edge_facets_[e];
}

std::span<const EdgeId> DeltaComplex2::edges_at(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorCode::UnknownId, "vertex " + std::to_string(v));
  return vertex_edges_[v];
}

std::span<const FacetId> DeltaComplex2::facets_at(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorCode::UnknownId, "vertex " + std::to_string(v));
  return vertex_facets_[v];
}

VertexId DeltaComplex2::other_endpoint(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.v == v) return ed.w;
  if (ed.w == v) return ed.v;
  throw Error(ErrorCode::NotIncident, "vertex " + std::to_string(v) +
                                          " is not an endpoint of edge " +
                                          std::to_string(e));
}

std::optional<EdgeId> DeltaComplex2::edge_from_original(std::int64_t id) const {
  auto it = std::lower_bound(original_edge_ids_.begin(), original_edge_ids_.end(), id);
  if (it == original_edge_ids_.end() || *it != id) return std::nullopt;
  return static_cast<EdgeId>(it - original_edge_ids_.begin());
}

std::optional<FacetId> DeltaComplex2::facet_from_original(std::int64_t id) const {
  auto it = std::lower_bound(original_facet_ids_.begin(), original_facet_ids_.end(), id);
  if (it == original_facet_ids_.end() || *it != id) return std::nullopt;
  return static_cast<FacetId>(it - original_facet_ids_.begin());
}

// ---------------------------------------------------------------------------
// Fixture text

namespace {

struct RawEdge {
  VertexId v, w;
  int line;
};

struct RawFacet {
  std::array<VertexId, 3> vertices;
  std::array<std::int64_t, 3> edges;
  int line;
};

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view token, int line) {
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    syntax_error(line, "expected an integer, found '" + std::string(token) + "'");
  }
  return value;
}

VertexId parse_vertex(std::string_view token, int line) {
  const auto v = parse_int(token, line);
  if (v < 0 || v > INT32_MAX) syntax_error(line, "vertex id out of range");
  return static_cast<VertexId>(v);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Fixture parse_fixture(std::string_view text) {
  bool have_header = false;
  std::optional<std::int64_t> vertex_count;
  std::map<std::int64_t, RawEdge> edges;
  std::map<std::int64_t, RawFacet> facets;
  std::vector<AlphaLine> alpha;
  std::vector<CoverLine> cover;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    auto expect = [&](std::size_t n) {
      if (tok.size() != n) {
        syntax_error(line_no, "'" + std::string(tok[0]) + "' expects " +
                                  std::to_string(n - 1) + " arguments");
      }
    };
    if (!have_header) {
      if (tok.size() != 2 || tok[0] != "tropsurf" || tok[1] != "1") {
        syntax_error(line_no, "expected header 'tropsurf 1'");
      }
      have_header = true;
    } else if (tok[0] == "vertices") {
      expect(2);
      if (vertex_count) syntax_error(line_no, "duplicate 'vertices' line");
      vertex_count = parse_int(tok[1], line_no);
      if (*vertex_count < 0 || *vertex_count > INT32_MAX) {
        syntax_error(line_no, "vertex count out of range");
      }
    } else if (tok[0] == "edge") {
      expect(4);
      const auto id = parse_int(tok[1], line_no);
      RawEdge e{parse_vertex(tok[2], line_no), parse_vertex(tok[3], line_no), line_no};
      if (!edges.emplace(id, e).second) {
        syntax_error(line_no, "duplicate edge id " + std::to_string(id));
      }
    } else if (tok[0] == "facet") {
      expect(8);
      const auto id = parse_int(tok[1], line_no);
      RawFacet f{};
      for (int k = 0; k < 3; ++k) f.vertices[k] = parse_vertex(tok[2 + k], line_no);
      for (int k = 0; k < 3; ++k) f.edges[k] = parse_int(tok[5 + k], line_no);
      f.line = line_no;
      if (!facets.emplace(id, f).second) {
        syntax_error(line_no, "duplicate facet id " + std::to_string(id));
      }
    } else if (tok[0] == "alpha") {
      expect(4);
      alpha.push_back({parse_int(tok[1], line_no), parse_vertex(tok[2], line_no),
                       parse_int(tok[3], line_no), line_no});
    } else if (tok[0] == "cover") {
      expect(4);
      const auto sheet = parse_int(tok[3], line_no);
      if (sheet != 0 && sheet != 1) syntax_error(line_no, "sheet must be 0 or 1");
      cover.push_back({parse_int(tok[1], line_no), parse_int(tok[2], line_no),
                       static_cast<int>(sheet), line_no});
    } else {
      syntax_error(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
    if (nl == text.size()) break;
  }
  if (!have_header) syntax_error(line_no, "missing header 'tropsurf 1'");
  if (!vertex_count) syntax_error(line_no, "missing 'vertices' line");

  std::map<std::int64_t, EdgeId> edge_index;
  std::vector<Edge> dense_edges;
  std::vector<std::int64_t> edge_ids;
  for (const auto& [id, e] : edges) {
    edge_index[id] = static_cast<EdgeId>(dense_edges.size());
    dense_edges.push_back({e.v, e.w});
    edge_ids.push_back(id);
  }
  std::vector<Facet> dense_facets;
  std::vector<std::int64_t> facet_ids;
  for (const auto& [id, f] : facets) {
    Facet out;
    out.vertices = f.vertices;
    for (int k = 0; k < 3; ++k) {
      auto it = edge_index.find(f.edges[k]);
      if (it == edge_index.end()) {
        throw Error(ErrorCode::UnknownId, "line " + std::to_string(f.line) + ": facet " +
                                              std::to_string(id) + " references unknown edge " +
                                              std::to_string(f.edges[k]));
      }
      out.edges[k] = it->second;
    }
    dense_facets.push_back(out);
    facet_ids.push_back(id);
  }
  return Fixture{DeltaComplex2(static_cast<int>(*vertex_count), std::move(dense_edges),
                               std::move(dense_facets), std::move(edge_ids),
                               std::move(facet_ids)),
                 std::move(alpha), std::move(cover)};
}

Fixture read_fixture_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_fixture(buffer.str());
}

DeltaComplex2 build_complex(std::string_view text) {
  return parse_fixture(text).complex;
}

std::string serialize(const DeltaComplex2& complex) {
  std::ostringstream out;
  out << kFormatVersion << '\n';
  out << "vertices " << complex.vertex_count() << '\n';
  for (EdgeId e = 0; e < complex.edge_count(); ++e) {
    const auto& ed = complex.edge(e);
    out << "edge " << e << ' ' << ed.v << ' ' << ed.w << '\n';
  }
  for (FacetId f = 0; f < complex.facet_count(); ++f) {
    const auto& fc = complex.facet(f);
    out << "facet " << f << ' ' << fc.vertices[0] << ' ' << fc.vertices[1] << ' '
        << fc.vertices[2] << ' ' << fc.edges[0] << ' ' << fc.edges[1] << ' '
        << fc.edges[2] << '\n';
  }
  return out.str();
}

int edge_degree(const DeltaComplex2& complex, EdgeId e) {
  return static_cast<int>(complex.facets_of_edge(e).size());
}

VertexId opposite_vertex(const DeltaComplex2& complex, FacetId f, EdgeId e) {
  const Facet& fc = complex.facet(f);
  const Edge& ed = complex.edge(e);
  for (auto v : fc.vertices) {
    if (v != ed.v && v != ed.w) return v;
  }
  throw Error(ErrorCode::NotIncident, "facet " + std::to_string(f) +
                                          " does not contain edge " + std::to_string(e));
}

EdgeStar edge_star(const DeltaComplex2& complex, EdgeId e) {
  const Edge& ed = complex.edge(e);
  EdgeStar star;
  star.edge = e;
  star.v = ed.v;
  star.w = ed.w;
  for (auto f : complex.facets_of_edge(e)) {
    star.incident_facets.push_back(f);
    star.opposite_vertices.push_back(opposite_vertex(complex, f, e));
  }
  return star;
}

}  // namespace tropsurf
