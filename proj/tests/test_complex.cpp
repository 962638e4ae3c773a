#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropsurf/complex.hpp"
#include "tropsurf/error.hpp"

namespace tropsurf {
namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_fixture(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorCode::SyntaxError;
}

TEST(Complex, OctahedronCounts) {
  const auto c = oracle::load_fixture("octahedron.trs").complex;
  EXPECT_EQ(c.vertex_count(), 6);
  EXPECT_EQ(c.edge_count(), 12);
  EXPECT_EQ(c.facet_count(), 8);
  for (EdgeId e = 0; e < c.edge_count(); ++e) EXPECT_EQ(edge_degree(c, e), 2);
}

TEST(Complex, SerializeRoundTrip) {
  for (const auto& name : oracle::all_fixtures()) {
    const auto c = oracle::load_fixture(name).complex;
    const std::string text = serialize(c);
    EXPECT_EQ(build_complex(text), c) << name;
    EXPECT_EQ(serialize(build_complex(text)), text) << name;
  }
}

TEST(Complex, SparseIdsAreResolved) {
  const auto fx = parse_fixture(
      "tropsurf 1\nvertices 3\nedge 10 0 1\nedge 20 0 2\nedge 30 2 1\n"
      "facet 7 2 0 1 20 30 10\nalpha 30 1 0\n");
  const auto& c = fx.complex;
  EXPECT_EQ(c.edge_count(), 3);
  EXPECT_EQ(c.original_edge_id(2), 30);
  EXPECT_EQ(c.edge_from_original(20), EdgeId{1});
  EXPECT_FALSE(c.edge_from_original(15).has_value());
  EXPECT_EQ(c.facet(0).vertices, (std::array<VertexId, 3>{0, 1, 2}));
  EXPECT_EQ(c.facet(0).edges, (std::array<EdgeId, 3>{0, 1, 2}));
  ASSERT_EQ(fx.alpha.size(), 1u);
  EXPECT_EQ(fx.alpha[0].edge, 30);
}

TEST(Complex, Errors) {
  EXPECT_EQ(code_of("vertices 2\nedge 0 0 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 2\nedge 0 0 1\nbogus 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 2\nedge 0 0 1\nedge 0 0 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 2\nedge 0 0 5\n"), ErrorCode::UnknownId);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 2\nedge 0 1 1\n"), ErrorCode::NonRegular);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 3\nedge 0 0 1\nedge 1 0 2\nedge 2 1 2\n"
                    "facet 0 0 1 1 0 1 2\n"),
            ErrorCode::NonRegular);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 3\nedge 0 0 1\nedge 1 0 2\nedge 2 1 2\n"
                    "facet 0 0 1 2 0 2 1\n"),
            ErrorCode::IncoherentIncidence);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 4\nedge 0 0 1\nedge 1 2 3\n"), ErrorCode::Disconnected);
  EXPECT_EQ(code_of("tropsurf 1\nvertices 3\nedge 0 0 1\n"), ErrorCode::Disconnected);
}

TEST(Complex, SyntaxErrorsNameTheLine) {
  try {
    parse_fixture("tropsurf 1\nvertices 2\n\nedge 0 0 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(Complex, ParallelEdgesAndMultiFacetsAreAllowed) {
  const auto c = oracle::load_fixture("pillow.trs").complex;
  EXPECT_EQ(c.facet_count(), 2);
  EXPECT_EQ(edge_degree(c, 0), 2);
  const auto star = edge_star(c, 0);
  EXPECT_EQ(star.opposite_vertices, (std::vector<VertexId>{2, 2}));
}

TEST(Complex, OtherEndpointRejectsNonIncidentVertex) {
  const auto c = oracle::load_fixture("octahedron.trs").complex;
  const Edge e = c.edge(0);
  EXPECT_EQ(c.other_endpoint(0, e.v), e.w);
  VertexId outside = 0;
  while (outside == e.v || outside == e.w) ++outside;
  EXPECT_THROW(c.other_endpoint(0, outside), Error);
}

}  // namespace
}  // namespace tropsurf
