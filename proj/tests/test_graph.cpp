#include <doctest.h>

#include <string>

#include "topoidx/error.hpp"
#include "topoidx/graph.hpp"

using namespace topoidx;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::IoError;
}

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("build collapses duplicates and orders endpoints") {
  const std::pair<Vertex, Vertex> e[] = {{1, 0}, {0, 1}, {2, 1}};
  const Graph g = Graph::build(3, e);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.max_degree() == 2);
  CHECK(g.min_degree() == 1);
  CHECK(g.is_connected());
}

TEST_CASE("build rejects bad edges") {
  const std::pair<Vertex, Vertex> loop[] = {{1, 1}};
  const std::pair<Vertex, Vertex> far[] = {{0, 5}};
  CHECK(code_of([&] { Graph::build(3, loop); }) == ErrorCode::SelfLoop);
  CHECK(code_of([&] { Graph::build(3, far); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("family sizes") {
  struct Case {
    FamilySpec spec;
    std::size_t v, e;
  };
  const Case cases[] = {
      {{Family::Regular, {8, 3}}, 8, 12},
      {{Family::Regular, {10, 4}}, 10, 20},
      {{Family::Cycle, {5}}, 5, 5},
      {{Family::Path, {4}}, 4, 3},
      {{Family::Complete, {5}}, 5, 10},
      {{Family::CompleteBipartite, {2, 3}}, 5, 6},
      {{Family::Star, {4}}, 5, 4},
      {{Family::DoubleStar, {2, 3}}, 7, 6},
      {{Family::Wheel, {4}}, 5, 8},
      {{Family::Sunflower, {3}}, 10, 15},
      {{Family::FrenchWindmill, {4, 3}}, 10, 18},
  };
  for (const auto& c : cases) {
    CAPTURE(c.spec.to_string());
    const Graph g = generate(c.spec);
    CHECK(g.vertex_count() == c.v);
    CHECK(g.edge_count() == c.e);
    CHECK(g.is_connected());
  }
}

TEST_CASE("regular generator is regular") {
  for (long n = 3; n <= 12; ++n) {
    for (long r = 1; r < n; ++r) {
      if ((n * r) % 2) continue;
      const Graph g = generate({Family::Regular, {n, r}});
      CAPTURE(n);
      CAPTURE(r);
      CHECK(g.min_degree() == static_cast<std::size_t>(r));
      CHECK(g.max_degree() == static_cast<std::size_t>(r));
    }
  }
}

TEST_CASE("invalid family parameters") {
  CHECK(code_of([] { generate({Family::Regular, {5, 3}}); }) == ErrorCode::InvalidFamilyParams);
  CHECK(code_of([] { generate({Family::Cycle, {2}}); }) == ErrorCode::InvalidFamilyParams);
  CHECK(code_of([] { generate({Family::Wheel, {3, 1}}); }) == ErrorCode::InvalidFamilyParams);
  CHECK(code_of([] { generate({Family::FrenchWindmill, {2, 3}}); }) == ErrorCode::InvalidFamilyParams);
}

TEST_CASE("family names") {
  CHECK(family_from_name("wheel") == Family::Wheel);
  CHECK(family_from_name("kmn") == Family::CompleteBipartite);
  CHECK(family_from_name("windmill") == Family::FrenchWindmill);
  CHECK(family_from_name("doublestar") == Family::DoubleStar);
  CHECK_FALSE(family_from_name("helm").has_value());
  CHECK(family_arity(Family::DoubleStar) == 2);
}

TEST_CASE("wheel 3 and complete 4 coincide") {
  CHECK(generate({Family::Wheel, {3}}) == generate({Family::Complete, {4}}));
  CHECK(generate({Family::Wheel, {3}}).fingerprint() == generate({Family::Complete, {4}}).fingerprint());
  CHECK(generate({Family::Wheel, {4}}).fingerprint() != generate({Family::Complete, {5}}).fingerprint());
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# triangle\nn 3\n0 1\n1 2\n\n2 0  # closing edge\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);

  CHECK(code_of([] { parse_edge_list("0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("n 3\n0 x\n"); }) == ErrorCode::ParseError);
  CHECK(message_of([] { parse_edge_list("n 3\n0 1\n1\n"); }).rfind("line 3:", 0) == 0);
  CHECK(code_of([] { parse_edge_list("n 3\n0 3\n"); }) == ErrorCode::VertexOutOfRange);
  CHECK(message_of([] { parse_edge_list("n 3\n0 1\n2 2\n"); }).rfind("line 3:", 0) == 0);
  CHECK(code_of([] { load_edge_list("/nonexistent/graph.txt"); }) == ErrorCode::IoError);
}

TEST_CASE("edge list round trip") {
  for (const auto& spec : {FamilySpec{Family::Sunflower, {5}}, FamilySpec{Family::DoubleStar, {3, 2}},
                           FamilySpec{Family::Regular, {9, 4}}}) {
    const Graph g = generate(spec);
    const std::string text = format_edge_list(g, spec.to_string());
    CHECK(text.rfind("# ", 0) == 0);
    CHECK(parse_edge_list(text) == g);
  }
}

TEST_CASE("distances") {
  const Graph p = generate({Family::Path, {5}});
  const auto d = bfs_distances(p, 0);
  CHECK(d == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
  const std::pair<Vertex, Vertex> e[] = {{0, 1}};
  const Graph split = Graph::build(3, e);
  CHECK_FALSE(split.is_connected());
  CHECK(bfs_distances(split, 0)[2] == kUnreachable);
}
