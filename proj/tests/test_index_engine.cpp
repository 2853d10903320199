#include <doctest.h>

#include "topoidx/error.hpp"
#include "topoidx/registry.hpp"

using namespace topoidx;

namespace {

IndexResult run(const FamilySpec& spec, std::string_view name) {
  const Graph g = generate(spec);
  EvalContext ctx(g);
  return compute(ctx, lookup_index(name));
}

Rat exact(const FamilySpec& spec, std::string_view name) {
  auto r = run(spec, name);
  REQUIRE(r.kind == IndexResult::Kind::Exact);
  return r.exact;
}

}  // namespace

TEST_CASE("kernels") {
  CHECK(kernel(Variant::V1, Rat(2), Rat(3)) == Rat(19));
  CHECK(kernel(Variant::V2, Rat(2), Rat(3)) == Rat(7));
  CHECK(kernel(Variant::V3, Rat(2), Rat(3)) == Rat(7));
  CHECK(kernel(Variant::V3, Rat(3), Rat(2)) == Rat(7));
  CHECK(kernel(Variant::V4, Rat(2), Rat(3)) == Rat(6));
  CHECK(kernel(Variant::V4, Rat(4), Rat(4)) == Rat(0));
}

TEST_CASE("spot values") {
  CHECK(exact({Family::Cycle, {3}}, "RL1") == Rat(36));
  CHECK(exact({Family::Path, {3}}, "RL1") == Rat(14));
  CHECK(exact({Family::Regular, {6, 3}}, "RL4") == Rat(0));
  CHECK(exact({Family::Wheel, {3}}, "RL1") == Rat(162));
  CHECK(exact({Family::Complete, {4}}, "RL1") == Rat(162));
  CHECK(exact({Family::Wheel, {4}}, "RL1") == Rat(256));
  CHECK(exact({Family::Complete, {4}}, "BRL1") == Rat(288));
  CHECK(exact({Family::Wheel, {4}}, "RLKV1") == Rat(58644));
  CHECK(exact({Family::Wheel, {4}}, "NRL1") == Rat(2656));
  CHECK(exact({Family::Cycle, {3}}, "MRL1") == Rat(1728));
  CHECK(exact({Family::CompleteBipartite, {2, 3}}, "DRL1") == Rat(72));
  CHECK(exact({Family::CompleteBipartite, {2, 3}}, "RL3") == Rat(42));
  CHECK(exact({Family::Cycle, {4}}, "NRL1") == Rat(192));
  CHECK(exact({Family::Cycle, {3}}, "RLKV1") == Rat(144));
}

TEST_CASE("transforms") {
  CHECK(exact({Family::Cycle, {5}}, "HRL1") == Rat(5 * 144));
  CHECK(exact({Family::Cycle, {5}}, "IRL1") == Rat(5, 12));
  CHECK(exact({Family::Cycle, {5}}, "GRL1") == Rat(5 * 1728));
  CHECK(exact({Family::Cycle, {5}}, "GRL2(a=1/2)") == Rat(10));
  const auto r = run({Family::Cycle, {5}}, "GRL1(a=1/2)");
  CHECK(r.kind == IndexResult::Kind::Approx);
  CHECK(r.approx == doctest::Approx(5 * 3.4641016151377544));
  CHECK(exact({Family::Cycle, {4}}, "GRL4(a=2)") == Rat(0));
}

TEST_CASE("aggregation and forms") {
  CHECK(exact({Family::Path, {3}}, "MRL2") == Rat(9));
  const auto p = run({Family::Wheel, {4}}, "RL1_exp");
  REQUIRE(p.kind == IndexResult::Kind::Poly);
  CHECK(p.poly.render() == "4*x^37 + 4*x^27");
  CHECK(run({Family::Wheel, {4}}, "RL2(G,x)").poly.render() == "4*x^13 + 4*x^9");
  CHECK(run({Family::Cycle, {3}}, "MRL1exp").poly.render() == "1*x^36");
  CHECK(run({Family::Cycle, {4}}, "GRL2_exp(a=1/2)").poly.render() == "4*x^2");
}

TEST_CASE("empty graph aggregates") {
  const Graph g = Graph::build(3, {});
  EvalContext ctx(g);
  CHECK(compute(ctx, lookup_index("RL1")).exact == Rat(0));
  CHECK(compute(ctx, lookup_index("MRL1")).exact == Rat(1));
  CHECK(compute(ctx, lookup_index("RL1_exp")).poly.is_zero());
  CHECK(compute(ctx, lookup_index("MRL1_exp")).poly.render() == "1*x^0");
}

TEST_CASE("inverse of a zero kernel is an error") {
  try {
    run({Family::Cycle, {4}}, "IRL4");
    FAIL("expected InverseUndefined");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InverseUndefined);
  }
  try {
    run({Family::Cycle, {4}}, "GRL4(a=-2)");
    FAIL("expected InverseUndefined");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InverseUndefined);
  }
}

TEST_CASE("irrational exponents in polynomials are rejected") {
  try {
    run({Family::Path, {3}}, "GRL2_exp(a=1/2)");
    FAIL("expected UnsupportedEvaluation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedEvaluation);
  }
}

TEST_CASE("special indices") {
  CHECK(exact({Family::Path, {3}}, "RL6") == Rat(6));
  CHECK(exact({Family::Path, {3}}, "RL5") == Rat(2));
  for (long n = 3; n <= 7; ++n) {
    CHECK(exact({Family::Complete, {n}}, "RL7") == Rat(n * (n - 1)));
    CHECK(exact({Family::Cycle, {n}}, "HeronianRL") == Rat(6 * n));
    CHECK(exact({Family::Regular, {2 * n, 3}}, "RL14") == Rat(0));
  }
  const auto h = run({Family::Path, {4}}, "HRL");
  CHECK(h.kind == IndexResult::Kind::Approx);
  REQUIRE(h.radicand.has_value());
  CHECK(h.radicand == Rat(2 + 4 + 2));
}

TEST_CASE("closeness indices need a connected graph") {
  const std::pair<Vertex, Vertex> e[] = {{0, 1}, {2, 3}};
  const Graph g = Graph::build(4, e);
  EvalContext ctx(g);
  try {
    compute(ctx, lookup_index("RL7"));
    FAIL("expected DisconnectedGraph");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DisconnectedGraph);
  }
  CHECK(compute(ctx, lookup_index("RL1")).exact == Rat(6));
}

TEST_CASE("result rendering") {
  CHECK(IndexResult::of(Rat(162)).render() == "162/1");
  CHECK(IndexResult::approximate(0.1).render() == "0.10000000000000001");
  CHECK(IndexResult::of(Rat(1, 3)).to_double() == doctest::Approx(1.0 / 3));
  CHECK_FALSE(IndexResult::of(ExpPoly::monomial(Rat(1))).to_double().has_value());
}
