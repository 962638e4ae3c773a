#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropsurf/blowup.hpp"
#include "tropsurf/error.hpp"
#include "tropsurf/search.hpp"
#include "tropsurf/topology.hpp"

namespace tropsurf {
namespace {

WeakTropicalSurface load_weak(const char* name) {
  const auto fx = oracle::load_fixture(name);
  return attach_constants(fx.complex, fx.alpha);
}

std::size_t position(std::span<const EdgeId> edges, EdgeId e) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i] == e) return i;
  ADD_FAILURE() << "edge " << e << " not found";
  return 0;
}

RationalMatrix shear(std::size_t n, std::size_t row, std::size_t col, int value) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  m(row, col) = value;
  return m;
}

// Degeneration-compatible structures with at least one semidefinite vertex.
std::vector<WeakTropicalSurface> semidefinite_samples() {
  std::vector<WeakTropicalSurface> out;
  for (const char* name : {"triangle.trs", "pillow.trs", "wedge_triangles.trs", "torus_fin.trs"}) {
    const auto c = oracle::load_fixture(name).complex;
    SearchSpec spec{c, 1, SearchMode::AtMostOne, true, true, 1, 400, {}};
    for (const auto& a : search(spec).witnesses) {
      WeakTropicalSurface w(c, a);
      if (classify(w).verdict == Verdict::DegenerationCompatible) out.push_back(w);
    }
  }
  return out;
}

TEST(Blowup, LoneTriangleExample) {
  const auto w = load_weak("triangle_semidef.trs");
  const auto before = classify(w);
  EXPECT_EQ(before.verdict, Verdict::DegenerationCompatible);
  EXPECT_EQ(before.per_vertex[0].n_plus, 0);
  auto [out, rec] = blow_up_at(w, 0, 0);
  EXPECT_EQ(rec.u, 3);
  EXPECT_EQ(rec.w, 1);
  EXPECT_EQ(rec.after_v.n_plus, 1);
  EXPECT_EQ(rec.after_u.n_plus, 1);
  EXPECT_EQ(rec.after_w.n_plus, rec.before_w.n_plus);
  EXPECT_EQ(rec.after_w.n_minus, rec.before_w.n_minus + 1);
  EXPECT_EQ(local_matrix(out, rec.u),
            SymmetricRationalMatrix::from_rows(
                std::vector<std::vector<std::int64_t>>{{0, 1}, {1, -2}}));
  EXPECT_EQ(inertia(local_matrix(out, rec.u)), (Inertia{1, 0, 1}));

  const auto r = robustify(w);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.surface.complex().vertex_count(), 4);
  const auto after = classify(r.surface);
  EXPECT_EQ(after.verdict, Verdict::Tropical);
  for (const auto& in : after.per_vertex) EXPECT_EQ(in.n_plus, 1);
}

TEST(Blowup, CoefficientTable) {
  const auto w = load_weak("triangle_semidef.trs");
  const auto [out, rec] = blow_up_at(w, 0, 0);
  const auto& c = out.complex();
  EXPECT_EQ(out.alpha(rec.e, rec.w), w.alpha(0, 1));
  EXPECT_EQ(out.alpha(rec.e, rec.v), w.alpha(0, 0) + 1);
  EXPECT_EQ(out.alpha(rec.e_w, rec.w), 0);
  EXPECT_EQ(out.alpha(rec.e_w, rec.u), 1);
  EXPECT_EQ(out.alpha(rec.e_v, rec.v), 2);
  EXPECT_EQ(out.alpha(rec.e_v, rec.u), -1);
  EXPECT_EQ(edge_degree(c, rec.e), edge_degree(w.complex(), 0) + 1);
  EXPECT_EQ(edge_degree(c, rec.e_v), 1);
  EXPECT_EQ(edge_degree(c, rec.e_w), 1);
  EXPECT_TRUE(constraint_violations(c, out.alpha()).empty());
}

TEST(Blowup, Refusals) {
  const auto w = load_weak("triangle_semidef.trs");
  try {
    blow_up_at(w, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSemidefiniteAtVertex);
  }
  try {
    blow_up_at(w, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIncident);
  }
  try {
    robustify(all_ones(oracle::load_fixture("bipyramid7.trs").complex));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

TEST(Blowup, TropicalInputUnchanged) {
  const auto w = all_ones(oracle::load_fixture("torus7.trs").complex);
  const auto r = robustify(w);
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.surface.complex(), w.complex());
  EXPECT_EQ(r.surface.alpha(), w.alpha());
}

TEST(Blowup, CongruencesSplitOffOneBlock) {
  for (const auto& w : semidefinite_samples()) {
    const auto cls = classify(w);
    for (VertexId v = 0; v < w.complex().vertex_count(); ++v) {
      if (cls.per_vertex[v].n_plus != 0) continue;
      const EdgeId e = w.complex().edges_at(v).front();
      const auto [out, rec] = blow_up_at(w, v, e);
      const auto& c = out.complex();

      const auto mv = local_matrix(out, v);
      const std::size_t n = mv.dimension();
      const std::size_t ie = position(c.edges_at(v), e);
      ASSERT_EQ(position(c.edges_at(v), rec.e_v), n - 1);
      const auto nv = congruence(mv, shear(n, ie, n - 1, -1));
      const auto old_v = local_matrix(w, v);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        EXPECT_EQ(nv(i, n - 1), 0);
        for (std::size_t j = 0; j + 1 < n; ++j)
          EXPECT_EQ(nv(i, j), old_v(i, j) - ((i == ie && j == ie) ? 1 : 0));
      }
      EXPECT_EQ(nv(n - 1, n - 1), 1);

      const auto mw = local_matrix(out, rec.w);
      const std::size_t m = mw.dimension();
      const std::size_t je = position(c.edges_at(rec.w), e);
      ASSERT_EQ(position(c.edges_at(rec.w), rec.e_w), m - 1);
      const auto pw = congruence(mw, shear(m, je, m - 1, 1));
      const auto old_w = local_matrix(w, rec.w);
      for (std::size_t i = 0; i + 1 < m; ++i) {
        EXPECT_EQ(pw(i, m - 1), 0);
        for (std::size_t j = 0; j + 1 < m; ++j) EXPECT_EQ(pw(i, j), old_w(i, j));
      }
      EXPECT_EQ(pw(m - 1, m - 1), -1);
    }
  }
}

TEST(Blowup, RandomizedAudit) {
  const auto samples = semidefinite_samples();
  ASSERT_GE(samples.size(), 20u);
  for (const auto& w : samples) {
    const auto r = robustify(w);
    EXPECT_EQ(classify(r.surface).verdict, Verdict::Tropical);
    EXPECT_EQ(euler_characteristic(r.surface.complex()), euler_characteristic(w.complex()));
    std::set<VertexId> semidefinite;
    const auto cls = classify(w);
    for (VertexId v = 0; v < w.complex().vertex_count(); ++v)
      if (cls.per_vertex[v].n_plus == 0) semidefinite.insert(v);
    EXPECT_EQ(r.records.size(), semidefinite.size());
    for (const auto& rec : r.records) {
      EXPECT_TRUE(semidefinite.count(rec.v));
      EXPECT_EQ(rec.before_v.n_plus, 0);
      EXPECT_EQ(rec.after_u.n_plus, 1);
      EXPECT_EQ(rec.after_v.n_plus, 1);
      EXPECT_EQ(rec.after_w.n_plus, rec.before_w.n_plus);
      EXPECT_EQ(rec.e, w.complex().edges_at(rec.v).front());
    }
  }
}

TEST(Blowup, Locality) {
  for (const auto& w : semidefinite_samples()) {
    const auto cls = classify(w);
    VertexId v = 0;
    while (cls.per_vertex[v].n_plus != 0) ++v;
    const auto [out, rec] = blow_up_at(w, v, w.complex().edges_at(v).front());
    for (VertexId x = 0; x < w.complex().vertex_count(); ++x) {
      if (x == rec.v || x == rec.w) continue;
      EXPECT_EQ(local_matrix(out, x), local_matrix(w, x));
    }
  }
}

TEST(Blowup, AttachedTriangleHasTwoFreeEdges) {
  const auto r = robustify(load_weak("triangle_semidef.trs"));
  const auto& rec = r.records.front();
  const auto& c = r.surface.complex();
  EXPECT_EQ(c.facets_of_edge(rec.e_v).size(), 1u);
  EXPECT_EQ(c.facets_of_edge(rec.e_w).size(), 1u);
  EXPECT_EQ(c.facets_at(rec.u).size(), 1u);
}

TEST(Blowup, RecordFormat) {
  const auto r = robustify(load_weak("triangle_semidef.trs"));
  const std::string line = format_record(r.records.front());
  EXPECT_EQ(line.rfind("# blowup v=0 e=0 w=1 u'=3", 0), 0u) << line;
}

}  // namespace
}  // namespace tropsurf
