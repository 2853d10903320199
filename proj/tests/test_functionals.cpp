#include <doctest.h>

#include <map>

#include "support.hpp"
#include "topoidx/error.hpp"
#include "topoidx/functionals.hpp"

using namespace topoidx;

namespace {

std::vector<Rat> values(const FunctionalTable& t) { return t.values; }

std::vector<Rat> rats(std::initializer_list<Rat> v) { return v; }

std::map<std::pair<std::size_t, std::size_t>, std::size_t> census(const Graph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (const auto& e : g.edges()) {
    auto a = g.degree(e.u), b = g.degree(e.v);
    ++out[{std::max(a, b), std::min(a, b)}];
  }
  return out;
}

}  // namespace

TEST_CASE("degree-pair census of the wheel and sunflower") {
  for (std::size_t n = 4; n <= 9; ++n) {
    const Graph w = generate({Family::Wheel, {static_cast<long>(n)}});
    CHECK(census(w) == std::map<std::pair<std::size_t, std::size_t>, std::size_t>{{{3, 3}, n}, {{n, 3}, n}});
    const Graph s = generate({Family::Sunflower, {static_cast<long>(n)}});
    CHECK(census(s) == std::map<std::pair<std::size_t, std::size_t>, std::size_t>{
                           {{4, 4}, n}, {{3 * n, 4}, n}, {{4, 2}, n}, {{3 * n, 2}, n}, {{3 * n, 1}, n}});
  }
}

TEST_CASE("plain and revan degree") {
  const Graph w5 = generate({Family::Wheel, {5}});
  CHECK(revan_degree(w5).values[1] == Rat(5));
  CHECK(revan_degree(w5).values[0] == Rat(3));
  CHECK(plain_degree(w5).values[0] == Rat(5));
}

TEST_CASE("temperature") {
  CHECK(temperature(generate({Family::Path, {3}})).values[0] == Rat(1, 2));
  CHECK(temperature(generate({Family::Star, {3}})).values[0] == Rat(3));
}

TEST_CASE("kv and neighbourhood sum") {
  CHECK(kv(generate({Family::Wheel, {4}})).values[0] == Rat(81));
  CHECK(nbd_sum(generate({Family::Wheel, {6}})).values[1] == Rat(12));
  CHECK(nbd_sum(generate({Family::Cycle, {7}})).values[3] == Rat(4));
}

TEST_CASE("banhatti endpoints") {
  const Graph w6 = generate({Family::Wheel, {6}});
  CHECK(banhatti(w6, Edge{1, 2}) == std::pair{Rat(1), Rat(1)});
  CHECK(banhatti(w6, Edge{0, 1}) == std::pair{Rat(7), Rat(7, 4)});
  const Graph k5 = generate({Family::Complete, {5}});
  CHECK(banhatti(k5, Edge{0, 3}) == std::pair{Rat(6), Rat(6)});
}

TEST_CASE("domination degree") {
  CHECK(values(domination_degree(generate({Family::Complete, {5}}))) == rats({1, 1, 1, 1, 1}));
  CHECK(values(domination_degree(generate({Family::Path, {4}}))) == rats({2, 2, 2, 2}));
  CHECK(values(domination_degree(generate({Family::CompleteBipartite, {2, 3}}))) == rats({2, 2, 2, 2, 2}));
  CHECK(values(domination_degree(generate({Family::Star, {4}}))) == rats({1, 4, 4, 4, 4}));
  const auto wm = domination_degree(generate({Family::FrenchWindmill, {4, 7}}));
  CHECK(wm.values[0] == Rat(1));
  for (std::size_t v = 1; v < wm.values.size(); ++v) CHECK(wm.values[v] == Rat(7));
}

TEST_CASE("domination bound") {
  try {
    domination_degree(generate({Family::Cycle, {30}}));
    FAIL("expected GraphTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GraphTooLarge);
  }
  CHECK(domination_degree(generate({Family::Cycle, {30}}), 30).values.size() == 30);
}

TEST_CASE("closeness") {
  CHECK(values(closeness(generate({Family::Complete, {4}}))) == rats({1, 1, 1, 1}));
  CHECK(values(closeness(generate({Family::Path, {3}}))) == rats({Rat(2, 3), 1, Rat(2, 3)}));
  const auto w5 = closeness(generate({Family::Wheel, {5}}));
  CHECK(w5.values[0] == Rat(1));
  CHECK(w5.values[1] == Rat(5, 7));
  const std::pair<Vertex, Vertex> e[] = {{0, 1}};
  try {
    closeness(Graph::build(3, e));
    FAIL("expected DisconnectedGraph");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DisconnectedGraph);
  }
}

TEST_CASE("cl degree") {
  CHECK(values(cl_degree(generate({Family::Regular, {8, 3}}))) == std::vector<Rat>(8, Rat(0)));
  CHECK(values(cl_degree(generate({Family::Path, {4}}))) == rats({1, 1, 1, 1}));
  CHECK(cl_degree(generate({Family::Wheel, {6}})).values[2] == Rat(3));
  const std::pair<Vertex, Vertex> e[] = {{0, 1}};
  CHECK(cl_degree(Graph::build(3, e)).values[2] == Rat(0));
}

TEST_CASE("regular graph functionals are constant") {
  for (const auto& spec : testsupport::family_samples(9)) {
    if (spec.family != Family::Regular) continue;
    const Graph g = generate(spec);
    const long n = spec.params[0], r = spec.params[1];
    CAPTURE(spec.to_string());
    CHECK(values(revan_degree(g)) == values(plain_degree(g)));
    CHECK(values(temperature(g)) == std::vector<Rat>(n, Rat(r, n - r)));
    CHECK(values(nbd_sum(g)) == std::vector<Rat>(n, Rat(r * r)));
    CHECK(values(kv(g)) == std::vector<Rat>(n, pow(Rat(r), r)));
    for (const auto& e : g.edges()) {
      CHECK(banhatti(g, e) == std::pair{Rat(2 * r - 2, n - r), Rat(2 * r - 2, n - r)});
    }
  }
}

TEST_CASE("source names") {
  CHECK(source_from_name("nbd") == DegreeSource::NbdSum);
  CHECK(source_from_name("degree") == DegreeSource::Plain);
  CHECK(source_from_name("KV") == DegreeSource::KV);
  CHECK_FALSE(source_from_name("eccentric").has_value());
  for (auto s : kAllSources) CHECK(source_from_name(source_name(s)) == s);
}
