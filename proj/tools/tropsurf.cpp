// Command-line front end: parses arguments, calls the library, formats output.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropsurf/blowup.hpp"
#include "tropsurf/complex.hpp"
#include "tropsurf/cover.hpp"
#include "tropsurf/error.hpp"
#include "tropsurf/obstruction.hpp"
#include "tropsurf/recognizer.hpp"
#include "tropsurf/search.hpp"
#include "tropsurf/sheaf.hpp"
#include "tropsurf/topology.hpp"
#include "tropsurf/tropical.hpp"

using namespace tropsurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitExhausted = 2;

// Human output prints "key: value", report mode prints "key=value" with
// spaces in the key replaced by underscores.
struct Printer {
  bool report = false;
  template <class T>
  void kv(std::string key, const T& value) const {
    if (report) std::replace(key.begin(), key.end(), ' ', '_');
    std::cout << key << (report ? "=" : ": ") << value << '\n';
  }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string inertia_text(const Inertia& in) {
  std::ostringstream s;
  s << in.n_plus << ' ' << in.n_zero << ' ' << in.n_minus;
  return s.str();
}

WeakTropicalSurface load_surface(const Fixture& fx, bool all_ones_flag) {
  if (all_ones_flag) return all_ones(fx.complex);
  if (fx.alpha.empty()) throw Error(ErrorCode::MissingAlpha, "fixture has no alpha lines");
  return attach_constants(fx.complex, fx.alpha);
}

Decomposition load_decomposition(const DeltaComplex2& c, const std::string& path, bool automatic) {
  if (!path.empty()) return read_decomposition_file(path, c);
  if (!automatic) throw Error(ErrorCode::SyntaxError, "need --decomposition <file> or --auto");
  auto d = find_decomposition(c);
  if (!d) throw Error(ErrorCode::NotVerifiedDecomposition, "no decomposition found");
  return *d;
}

int cmd_validate(const std::string& file, const Printer& p) {
  const Fixture fx = read_fixture_file(file);
  const auto& c = fx.complex;
  if (!fx.alpha.empty()) attach_constants(c, fx.alpha);
  if (p.report) {
    p.kv("valid", "true");
    p.kv("vertices", c.vertex_count());
    p.kv("edges", c.edge_count());
    p.kv("facets", c.facet_count());
  } else {
    std::cout << "valid: " << c.vertex_count() << " vertices, " << c.edge_count() << " edges, "
              << c.facet_count() << " facets\n";
  }
  return kExitOk;
}

int cmd_topology(const std::string& file, const Printer& p) {
  const auto c = read_fixture_file(file).complex;
  const auto b = betti_numbers(c);
  const auto facets = all_facets(c);
  p.kv("euler_characteristic", euler_characteristic(c));
  p.kv("b0", b.b0);
  p.kv("b1", b.b1);
  p.kv("b2", b.b2);
  p.kv("locally_connected_codim1", yes_no(is_locally_connected_codim1(c)));
  p.kv("connected_codim1", yes_no(is_connected_codim1(c)));
  const bool closed = !facets.empty() && is_closed_surface(c, facets);
  p.kv("closed_surface", yes_no(closed));
  if (closed) p.kv("orientable", yes_no(orientability(c, facets).orientable));
  return kExitOk;
}

int cmd_classify(const std::string& file, bool ones, const Printer& p) {
  const Fixture fx = read_fixture_file(file);
  StructureConstants alpha;
  if (ones) {
    alpha = all_ones(fx.complex).alpha();
  } else {
    // Constraint violations are a verdict here, not an input error.
    alpha = StructureConstants(fx.complex.edge_count());
    try {
      alpha = attach_constants(fx.complex, fx.alpha).alpha();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstraintViolated) throw;
      for (const auto& line : fx.alpha) {
        const EdgeId edge = *fx.complex.edge_from_original(line.edge);
        alpha.set(fx.complex, edge, line.vertex, line.value);
      }
    }
  }
  const Classification cl = classify(fx.complex, alpha);
  for (const auto& v : cl.violations) {
    p.kv("violation edge " + std::to_string(fx.complex.original_edge_id(v.edge)),
         std::to_string(v.alpha_v) + " + " + std::to_string(v.alpha_w) +
             " != " + std::to_string(v.degree));
  }
  for (std::size_t v = 0; v < cl.per_vertex.size(); ++v)
    p.kv("inertia vertex " + std::to_string(v), inertia_text(cl.per_vertex[v]));
  p.kv("verdict", to_string(cl.verdict));
  return kExitOk;
}

int cmd_blowup(const std::string& file, bool ones, std::optional<int> vertex,
               std::optional<long> edge) {
  const Fixture fx = read_fixture_file(file);
  const WeakTropicalSurface w = load_surface(fx, ones);
  std::vector<BlowupRecord> records;
  std::optional<WeakTropicalSurface> result;
  if (vertex || edge) {
    if (!vertex || !edge) throw Error(ErrorCode::SyntaxError, "--vertex and --edge go together");
    const auto e = fx.complex.edge_from_original(*edge);
    if (!e) throw Error(ErrorCode::UnknownId, "edge " + std::to_string(*edge));
    auto [out, rec] = blow_up_at(w, *vertex, *e);
    result.emplace(std::move(out));
    records.push_back(rec);
  } else {
    auto out = robustify(w);
    result.emplace(std::move(out.surface));
    records = std::move(out.records);
  }
  for (const auto& r : records) std::cout << format_record(r) << '\n';
  std::cout << serialize(result->complex()) << serialize_alpha(result->complex(), result->alpha());
  return kExitOk;
}

int cmd_sheaf(const std::string& file, bool ones, const Printer& p) {
  const Fixture fx = read_fixture_file(file);
  const WeakTropicalSurface w = load_surface(fx, ones);
  const SheafSummary s = sections_of_D(w);
  const auto b = betti_numbers(w.complex());
  p.kv("linear_rank", s.linear_rank);
  p.kv("h0_rank", s.h0_rank);
  p.kv("image_rank", s.image_rank);
  p.kv("b1", b.b1);
  for (std::size_t k = 0; k < s.linear_basis.rows(); ++k)
    for (std::size_t v = 0; v < s.linear_basis.cols(); ++v)
      if (s.linear_basis(k, v) != 0)
        std::cout << "potential " << k << ' ' << v << ' ' << s.linear_basis(k, v) << '\n';
  for (std::size_t k = 0; k < s.section_basis.rows(); ++k)
    for (std::size_t e = 0; e < s.section_basis.cols(); ++e)
      if (s.section_basis(k, e) != 0)
        std::cout << "section " << k << ' '
                  << w.complex().original_edge_id(static_cast<EdgeId>(e)) << ' '
                  << s.section_basis(k, e) << '\n';
  return kExitOk;
}

int cmd_recognize(const std::string& file, const std::string& dfile, bool automatic,
                  const Printer& p) {
  const auto c = read_fixture_file(file).complex;
  std::optional<Decomposition> d;
  if (!dfile.empty()) {
    d = read_decomposition_file(dfile, c);
  } else if (automatic) {
    d = find_decomposition(c);
    if (!d) {
      p.kv("decomposition", "not found");
      return kExitOk;
    }
    std::istringstream lines(serialize(*d, c));
    for (std::string line; std::getline(lines, line);) std::cout << "# " << line << '\n';
  } else {
    throw Error(ErrorCode::SyntaxError, "need --decomposition <file> or --auto");
  }
  const DecompositionReport r = verify_decomposition(c, *d);
  p.kv("valid", yes_no(r.valid));
  for (const auto& v : r.violations)
    p.kv("violation " + std::to_string(v.condition), v.kind + ": " + v.message);
  for (std::size_t i = 0; i < r.fin_status.size(); ++i)
    p.kv("fin " + std::to_string(i + 1), to_string(r.fin_status[i]));
  p.kv("sigma_euler_characteristic", r.sigma_euler);
  p.kv("hyperbolic", yes_no(r.hyperbolic));
  return kExitOk;
}

int cmd_cover(const std::string& file, const std::string& dfile, bool automatic) {
  const Fixture fx = read_fixture_file(file);
  const Decomposition d = load_decomposition(fx.complex, dfile, automatic);
  std::optional<StructureConstants> alpha;
  if (!fx.alpha.empty()) alpha = attach_constants(fx.complex, fx.alpha).alpha();
  const DoubleCover cov = orientation_double_cover(fx.complex, d, alpha ? &*alpha : nullptr);
  std::cout << serialize(cov.complex);
  if (cov.alpha) std::cout << serialize_alpha(cov.complex, *cov.alpha);
  std::cout << serialize_cover(cov.map);
  std::istringstream lines(serialize(cov.decomposition, cov.complex));
  for (std::string line; std::getline(lines, line);) std::cout << "# " << line << '\n';
  return kExitOk;
}

int cmd_search(const std::string& file, int bound, const std::string& mode, bool all,
               bool deterministic, int threads, std::size_t limit, const Printer& p) {
  const auto c = read_fixture_file(file).complex;
  SearchSpec spec{c, bound, mode == "tropical" ? SearchMode::Tropical : SearchMode::AtMostOne,
                  all, deterministic, threads, limit, {}};
  const SearchOutcome out = search(spec);
  std::cerr << "nodes " << out.nodes_explored << ", prunes " << out.prunes << ", "
            << out.elapsed.count() << " s\n";
  const std::size_t n = out.witnesses.size();
  const std::string noun = n == 1 ? " witness" : " witnesses";
  if (p.report) {
    p.kv("exhausted", yes_no(out.exhausted));
    p.kv("witnesses", n);
  } else {
    std::cout << (out.exhausted ? "exhausted: " : "found: ") << n << noun << '\n';
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::cout << "# witness " << k << '\n' << serialize_alpha(c, out.witnesses[k]);
  }
  return n == 0 ? kExitExhausted : kExitOk;
}

int cmd_report(const std::string& file, int bound, int threads, const Printer& p) {
  const auto c = read_fixture_file(file).complex;
  const ObstructionReport r = obstruction_report(c, bound, threads);
  p.kv("decomposition", r.decomposition ? "found" : "not found");
  if (r.verification) {
    p.kv("sigma_euler_characteristic", r.verification->sigma_euler);
    p.kv("fins", r.decomposition->fins.size());
  }
  p.kv("hyperbolic_certified", yes_no(r.hyperbolic_certified));
  p.kv("bound", r.bound);
  p.kv("tropical_exhausted", yes_no(r.tropical.exhausted));
  p.kv("tropical_witnesses", r.tropical.witnesses.size());
  p.kv("at_most_one_exhausted", yes_no(r.at_most_one.exhausted));
  p.kv("at_most_one_witnesses", r.at_most_one.witnesses.size());
  p.kv("robustified", r.robustified);
  p.kv("consistent", yes_no(r.consistent));
  for (const auto& note : r.notes) std::cout << "# " << note << '\n';
  return r.consistent ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical surface toolkit"};
  app.set_version_flag("--version", std::string(kFormatVersion));
  app.require_subcommand(1);
  bool report = false;
  app.add_flag("--report", report, "machine-readable key=value output");

  std::string file, dfile, mode = "tropical";
  bool ones = false, automatic = false, all = false, deterministic = false;
  int bound = 1, threads = 1;
  std::size_t limit = 0;
  std::optional<int> vertex;
  std::optional<long> edge;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("fixture", file, "fixture file")->required();
  };
  auto* validate = app.add_subcommand("validate", "check a fixture");
  add_file(validate);
  auto* topology = app.add_subcommand("topology", "Euler characteristic, Betti numbers, links");
  add_file(topology);
  auto* classify_cmd = app.add_subcommand("classify", "inertia of every M_v and the verdict");
  add_file(classify_cmd);
  classify_cmd->add_flag("--all-ones", ones, "use alpha = 1 everywhere");
  auto* blowup = app.add_subcommand("blowup", "robustify, or one blow-up with --vertex/--edge");
  add_file(blowup);
  blowup->add_flag("--all-ones", ones, "use alpha = 1 everywhere");
  blowup->add_option("--vertex", vertex, "base vertex");
  blowup->add_option("--edge", edge, "edge id as written in the fixture");
  auto* sheaf = app.add_subcommand("sheaf", "linear functions and sections of D");
  add_file(sheaf);
  sheaf->add_flag("--all-ones", ones, "use alpha = 1 everywhere");
  auto* recognize = app.add_subcommand("recognize", "verify or find a decomposition");
  add_file(recognize);
  recognize->add_option("--decomposition", dfile, "decomposition file");
  recognize->add_flag("--auto", automatic, "search for a decomposition");
  auto* cover = app.add_subcommand("cover", "orientation double cover");
  add_file(cover);
  cover->add_option("--decomposition", dfile, "decomposition file");
  cover->add_flag("--auto", automatic, "search for a decomposition");
  auto* search_cmd = app.add_subcommand("search", "bounded search for structure constants");
  add_file(search_cmd);
  search_cmd->add_option("--bound", bound, "window half-width B")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--mode", mode, "tropical or at-most-one")
      ->check(CLI::IsMember({"tropical", "at-most-one"}));
  search_cmd->add_flag("--all", all, "enumerate every witness");
  search_cmd->add_flag("--deterministic", deterministic, "sort witnesses");
  search_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--limit", limit, "with --all, stop after this many witnesses");
  auto* report_cmd = app.add_subcommand("report", "decomposition and searches cross-checked");
  add_file(report_cmd);
  report_cmd->add_option("--bound", bound, "window half-width B")->check(CLI::NonNegativeNumber);
  report_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const Printer p{report};
  try {
    if (*validate) return cmd_validate(file, p);
    if (*topology) return cmd_topology(file, p);
    if (*classify_cmd) return cmd_classify(file, ones, p);
    if (*blowup) return cmd_blowup(file, ones, vertex, edge);
    if (*sheaf) return cmd_sheaf(file, ones, p);
    if (*recognize) return cmd_recognize(file, dfile, automatic, p);
    if (*cover) return cmd_cover(file, dfile, automatic);
    if (*search_cmd) return cmd_search(file, bound, mode, all, deterministic, threads, limit, p);
    if (*report_cmd) return cmd_report(file, bound, threads, p);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
