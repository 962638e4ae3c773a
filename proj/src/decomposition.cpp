#include "tropsurf/decomposition.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "tropsurf/error.hpp"

namespace tropsurf {

namespace {

std::int64_t parse_int(std::string_view token, int line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ": bad integer '" + std::string(token) + "'");
  }
  return value;
}

FacetId resolve_facet(const DeltaComplex2& c, std::int64_t id, int line) {
  const auto f = c.facet_from_original(id);
  if (!f) {
    throw Error(ErrorCode::UnknownId,
                "line " + std::to_string(line) + ": facet " + std::to_string(id));
  }
  return *f;
}

}  // namespace

Decomposition parse_decomposition(std::string_view text, const DeltaComplex2& c) {
  Decomposition d;
  bool have_sigma = false;
  std::map<std::int64_t, std::vector<FacetId>> fins;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line);
    if (tok[0] == "sigma") {
      if (have_sigma) throw Error(ErrorCode::SyntaxError, where + ": second sigma line");
      have_sigma = true;
      for (std::size_t i = 1; i < tok.size(); ++i)
        d.sigma.push_back(resolve_facet(c, parse_int(tok[i], line), line));
    } else if (tok[0] == "fin") {
      if (tok.size() < 2) throw Error(ErrorCode::SyntaxError, where + ": fin needs an index");
      const auto k = parse_int(tok[1], line);
      if (fins.count(k)) {
        throw Error(ErrorCode::SyntaxError, where + ": duplicate fin " + std::to_string(k));
      }
      auto& list = fins[k];
      for (std::size_t i = 2; i < tok.size(); ++i)
        list.push_back(resolve_facet(c, parse_int(tok[i], line), line));
      if (list.empty()) throw Error(ErrorCode::SyntaxError, where + ": empty fin");
    } else if (tok[0] == "ornament") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const std::string& t = tok[i];
        if (t.size() < 2) throw Error(ErrorCode::SyntaxError, where + ": bad token '" + t + "'");
        const auto id = parse_int(std::string_view(t).substr(1), line);
        switch (t[0]) {
          case 'f': d.ornament.facets.push_back(resolve_facet(c, id, line)); break;
          case 'e': {
            const auto e = c.edge_from_original(id);
            if (!e) throw Error(ErrorCode::UnknownId, where + ": edge " + std::to_string(id));
            d.ornament.edges.push_back(*e);
            break;
          }
          case 'v':
            if (id < 0 || id >= c.vertex_count())
              throw Error(ErrorCode::UnknownId, where + ": vertex " + std::to_string(id));
            d.ornament.vertices.push_back(static_cast<VertexId>(id));
            break;
          default:
            throw Error(ErrorCode::SyntaxError, where + ": bad token '" + t + "'");
        }
      }
    } else {
      throw Error(ErrorCode::SyntaxError, where + ": unknown record '" + tok[0] + "'");
    }
  }
  if (!have_sigma) throw Error(ErrorCode::SyntaxError, "missing sigma line");
  for (auto& [k, list] : fins) d.fins.push_back(std::move(list));

  std::vector<int> owner(c.facet_count(), 0);
  auto claim = [&](std::vector<FacetId>& list) {
    std::sort(list.begin(), list.end());
    for (FacetId f : list) {
      if (owner[f]++) {
        throw Error(ErrorCode::NotSubcomplex,
                    "facet " + std::to_string(c.original_facet_id(f)) + " assigned twice");
      }
    }
  };
  claim(d.sigma);
  for (auto& fin : d.fins) claim(fin);
  claim(d.ornament.facets);
  std::sort(d.ornament.edges.begin(), d.ornament.edges.end());
  d.ornament.edges.erase(std::unique(d.ornament.edges.begin(), d.ornament.edges.end()),
                         d.ornament.edges.end());
  std::sort(d.ornament.vertices.begin(), d.ornament.vertices.end());
  d.ornament.vertices.erase(std::unique(d.ornament.vertices.begin(), d.ornament.vertices.end()),
                            d.ornament.vertices.end());
  return d;
}

Decomposition read_decomposition_file(const std::string& path, const DeltaComplex2& complex) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_decomposition(buffer.str(), complex);
}

std::string serialize(const Decomposition& d, const DeltaComplex2& c) {
  std::ostringstream out;
  out << "sigma";
  for (FacetId f : d.sigma) out << ' ' << c.original_facet_id(f);
  out << '\n';
  for (std::size_t k = 0; k < d.fins.size(); ++k) {
    out << "fin " << k + 1;
    for (FacetId f : d.fins[k]) out << ' ' << c.original_facet_id(f);
    out << '\n';
  }
  if (!d.ornament.empty()) {
    out << "ornament";
    for (FacetId f : d.ornament.facets) out << " f" << c.original_facet_id(f);
    for (EdgeId e : d.ornament.edges) out << " e" << c.original_edge_id(e);
    for (VertexId v : d.ornament.vertices) out << " v" << v;
    out << '\n';
  }
  return out.str();
}

Subcomplex closure(const DeltaComplex2& c, const std::vector<FacetId>& facets,
                   const std::vector<EdgeId>& edges, const std::vector<VertexId>& vertices) {
  Subcomplex s{std::vector<char>(c.vertex_count(), 0), std::vector<char>(c.edge_count(), 0),
               std::vector<char>(c.facet_count(), 0)};
  auto add_edge = [&](EdgeId e) {
    s.edge[e] = 1;
    s.vertex[c.edge(e).v] = 1;
    s.vertex[c.edge(e).w] = 1;
  };
  for (FacetId f : facets) {
    s.facet[f] = 1;
    for (EdgeId e : c.facet(f).edges) add_edge(e);
  }
  for (EdgeId e : edges) add_edge(e);
  for (VertexId v : vertices) s.vertex[v] = 1;
  return s;
}

}  // namespace tropsurf
