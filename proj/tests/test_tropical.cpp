#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropsurf/error.hpp"
#include "tropsurf/search.hpp"
#include "tropsurf/topology.hpp"
#include "tropsurf/tropical.hpp"

namespace tropsurf {
namespace {

int max_vertex_degree(const DeltaComplex2& c) {
  int m = 0;
  for (VertexId v = 0; v < c.vertex_count(); ++v)
    m = std::max(m, static_cast<int>(c.edges_at(v).size()));
  return m;
}

std::vector<std::int64_t> cycle_matrix(int m) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(m * m), 0);
  for (int i = 0; i < m; ++i) {
    a[i * m + i] = -1;
    a[i * m + (i + 1) % m] += 1;
    a[((i + 1) % m) * m + i] += 1;
  }
  return a;
}

ErrorCode attach_error(const DeltaComplex2& c, const std::vector<AlphaLine>& lines) {
  try {
    attach_constants(c, lines);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "attach_constants accepted invalid lines";
  return ErrorCode::SyntaxError;
}

std::vector<AlphaLine> ones_lines(const DeltaComplex2& c) {
  std::vector<AlphaLine> lines;
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    lines.push_back({c.original_edge_id(e), c.edge(e).v, 1, 0});
    lines.push_back({c.original_edge_id(e), c.edge(e).w, 1, 0});
  }
  return lines;
}

TEST(Tropical, AllOnesTropicalExactlyWhenDegreeAtMostSix) {
  for (const auto& name : oracle::closed_surface_fixtures()) {
    const auto c = oracle::load_fixture(name).complex;
    const auto cls = classify(all_ones(c));
    EXPECT_EQ(cls.verdict == Verdict::Tropical, max_vertex_degree(c) <= 6) << name;
  }
}

TEST(Tropical, AllOnesExamples) {
  for (const char* name : {"octahedron.trs", "icosahedron.trs", "pillow.trs", "torus7.trs"})
    EXPECT_EQ(classify(all_ones(oracle::load_fixture(name).complex)).verdict, Verdict::Tropical)
        << name;
  const auto g2 = oracle::load_fixture("genus2.trs").complex;
  EXPECT_GE(max_vertex_degree(g2), 7);
  const auto cls = classify(all_ones(g2));
  EXPECT_NE(cls.verdict, Verdict::Tropical);
  EXPECT_NE(cls.verdict, Verdict::NotWeak);
  const auto bp = classify(all_ones(oracle::load_fixture("bipyramid7.trs").complex));
  EXPECT_EQ(bp.verdict, Verdict::WeakOnly);
}

TEST(Tropical, DegreeSevenVertexHasThreePositiveEigenvalues) {
  const auto c = oracle::load_fixture("bipyramid7.trs").complex;
  const auto cls = classify(all_ones(c));
  for (VertexId v = 0; v < c.vertex_count(); ++v)
    if (c.edges_at(v).size() >= 7) {
      EXPECT_GE(cls.per_vertex[v].n_plus, 2);
    }
}

TEST(Tropical, FileConstantsMatchAllOnes) {
  const auto fx = oracle::load_fixture("torus7.trs");
  const auto w = attach_constants(fx.complex, fx.alpha);
  EXPECT_EQ(w.alpha(), all_ones(fx.complex).alpha());
  EXPECT_EQ(classify(w).verdict, Verdict::Tropical);
}

TEST(Tropical, IcosahedronMatchesDisplayedMatrix) {
  const auto c = oracle::load_fixture("icosahedron.trs").complex;
  const auto w = all_ones(c);
  const auto displayed = cycle_matrix(5);
  for (VertexId v = 0; v < c.vertex_count(); ++v) {
    const auto m = local_matrix(w, v);
    ASSERT_EQ(m.dimension(), 5u);
    // Walk the link cycle to put the rows in cyclic order.
    std::vector<std::size_t> order{0};
    std::vector<bool> used(5, false);
    used[0] = true;
    while (order.size() < 5) {
      const std::size_t cur = order.back();
      std::size_t next = 5;
      for (std::size_t j = 0; j < 5; ++j)
        if (!used[j] && m(cur, j) != 0) {
          next = j;
          break;
        }
      ASSERT_LT(next, 5u) << "vertex " << v;
      used[next] = true;
      order.push_back(next);
    }
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        EXPECT_EQ(m(order[i], order[j]), displayed[i * 5 + j]) << "vertex " << v;
  }
}

TEST(Tropical, CycleMatrixFixesAllOnes) {
  for (int m = 3; m <= 16; ++m) {
    const auto a = cycle_matrix(m);
    for (int i = 0; i < m; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < m; ++j) s += a[i * m + j];
      EXPECT_EQ(s, 1) << "m=" << m;
    }
  }
  EXPECT_EQ(inertia(cycle_matrix(7), 7), (Inertia{3, 0, 4}));
  EXPECT_EQ(inertia(cycle_matrix(6), 6), (Inertia{1, 2, 3}));
  EXPECT_EQ(inertia(cycle_matrix(5), 5), (Inertia{1, 0, 4}));
}

TEST(Tropical, SmallLocalMatrices) {
  const auto pillow = all_ones(oracle::load_fixture("pillow.trs").complex);
  for (VertexId v = 0; v < 3; ++v) {
    EXPECT_EQ(local_matrix(pillow, v),
              SymmetricRationalMatrix::from_rows(
                  std::vector<std::vector<std::int64_t>>{{-1, 2}, {2, -1}}));
    EXPECT_EQ(inertia(local_matrix(pillow, v)), (Inertia{1, 0, 1}));
  }
  // Lone triangle with alpha(far endpoint) = 0 on both edges at vertex 0.
  const auto tri = oracle::load_fixture("triangle.trs").complex;
  StructureConstants a(3);
  a.set(tri, 0, 0, 0);
  a.set(tri, 0, 1, 1);
  a.set(tri, 1, 0, 1);
  a.set(tri, 1, 2, 0);
  a.set(tri, 2, 1, 1);
  a.set(tri, 2, 2, 0);
  const WeakTropicalSurface w(tri, a);
  EXPECT_EQ(local_matrix(w, 0),
            SymmetricRationalMatrix::from_rows(
                std::vector<std::vector<std::int64_t>>{{-1, 1}, {1, 0}}));
  StructureConstants b(3);
  for (EdgeId e = 0; e < 3; ++e) {
    b.set_side(e, 0, 1);
    b.set_side(e, 1, 0);
  }
  // Edges 0 and 1 both have far endpoints 1 and 2 with alpha 0 there.
  EXPECT_EQ(local_matrix(WeakTropicalSurface(tri, b), 0),
            SymmetricRationalMatrix::from_rows(
                std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}}));
}

TEST(Tropical, AttachErrors) {
  const auto c = oracle::load_fixture("octahedron.trs").complex;
  auto lines = ones_lines(c);
  EXPECT_NO_THROW(attach_constants(c, lines));

  auto missing = lines;
  missing.pop_back();
  EXPECT_EQ(attach_error(c, missing), ErrorCode::MissingAlpha);

  auto dup = lines;
  dup.push_back(lines.front());
  EXPECT_EQ(attach_error(c, dup), ErrorCode::DuplicateAlpha);

  auto unknown = lines;
  unknown.push_back({999, 0, 1, 0});
  EXPECT_EQ(attach_error(c, unknown), ErrorCode::UnknownId);

  auto bad = lines;
  bad[0].value = 2;
  EXPECT_EQ(attach_error(c, bad), ErrorCode::ConstraintViolated);
  try {
    attach_constants(c, bad);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("=2 + alpha("), std::string::npos) << e.what();
  }

  const auto fin = oracle::load_fixture("torus_fin.trs").complex;
  try {
    all_ones(fin);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDegreeTwo);
  }
}

TEST(Tropical, LoneTriangleOneZeroIsWeak) {
  const auto tri = oracle::load_fixture("triangle.trs").complex;
  StructureConstants a(3);
  for (EdgeId e = 0; e < 3; ++e) a.set_side(e, 0, 1);
  EXPECT_NO_THROW(WeakTropicalSurface(tri, a));
}

TEST(Tropical, NotWeakListsEveryViolation) {
  const auto c = oracle::load_fixture("octahedron.trs").complex;
  StructureConstants a = all_ones(c).alpha();
  a.set_side(2, 0, 5);
  a.set_side(7, 1, -1);
  const auto cls = classify(c, a);
  EXPECT_EQ(cls.verdict, Verdict::NotWeak);
  ASSERT_EQ(cls.violations.size(), 2u);
  EXPECT_EQ(cls.violations[0].edge, 2);
  EXPECT_EQ(cls.violations[1].edge, 7);
  EXPECT_TRUE(cls.per_vertex.empty());
}

TEST(Tropical, ConstraintEquivalentToQuotientVectorSum) {
  std::mt19937 rng(1);
  const auto c = oracle::load_fixture("torus_fin.trs").complex;
  std::uniform_int_distribution<int> d(-1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    StructureConstants a(static_cast<std::size_t>(c.edge_count()));
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      a.set_side(e, 0, d(rng));
      a.set_side(e, 1, trial % 2 ? edge_degree(c, e) - a.at_side(e, 0) : d(rng));
    }
    const auto violations = constraint_violations(c, a);
    for (EdgeId e = 0; e < c.edge_count(); ++e) {
      const std::int64_t sum = edge_degree(c, e) - a.at_side(e, 0) - a.at_side(e, 1);
      const bool listed = std::any_of(violations.begin(), violations.end(),
                                      [&](const EdgeViolation& x) { return x.edge == e; });
      EXPECT_EQ(listed, sum != 0);
    }
  }
}

TEST(Tropical, EdgeStarQuotientVector) {
  const auto w = all_ones(oracle::load_fixture("torus7.trs").complex);
  const auto star = edge_star(w, 3);
  ASSERT_TRUE(star.quotient_vector.has_value());
  EXPECT_EQ(*star.quotient_vector, (std::vector<std::int64_t>{1, 1, -1, -1}));
}

TEST(Tropical, VerdictStableUnderRelabeling) {
  std::mt19937 rng(99);
  for (const char* name : {"torus7.trs", "genus2.trs", "klein.trs", "torus_fin.trs"}) {
    const auto c = oracle::load_fixture(name).complex;
    SearchSpec spec{c, 0, SearchMode::AtMostOne, true, true, 1, 5, {}};
    std::vector<StructureConstants> structures = search(spec).witnesses;
    if (std::string(name) != "torus_fin.trs") structures.push_back(all_ones(c).alpha());
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<VertexId> vperm(static_cast<std::size_t>(c.vertex_count()));
      std::iota(vperm.begin(), vperm.end(), 0);
      std::shuffle(vperm.begin(), vperm.end(), rng);
      std::vector<EdgeId> eperm(static_cast<std::size_t>(c.edge_count()));
      std::iota(eperm.begin(), eperm.end(), 0);
      std::shuffle(eperm.begin(), eperm.end(), rng);
      std::vector<Edge> edges(eperm.size());
      for (EdgeId e = 0; e < c.edge_count(); ++e)
        edges[eperm[e]] = {vperm[c.edge(e).v], vperm[c.edge(e).w]};
      std::vector<Facet> facets;
      for (const auto& f : c.facets()) {
        Facet g;
        for (int k = 0; k < 3; ++k) {
          g.vertices[k] = vperm[f.vertices[k]];
          g.edges[k] = eperm[f.edges[k]];
        }
        facets.push_back(g);
      }
      const DeltaComplex2 relabeled(c.vertex_count(), edges, facets);
      for (const auto& a : structures) {
        StructureConstants b(a.edge_count());
        for (EdgeId e = 0; e < c.edge_count(); ++e)
          for (VertexId x : {c.edge(e).v, c.edge(e).w})
            b.set(relabeled, eperm[e], vperm[x], a.at(c, e, x));
        EXPECT_EQ(classify(c, a).verdict, classify(relabeled, b).verdict) << name;
      }
    }
  }
}

}  // namespace
}  // namespace tropsurf
