#include <doctest.h>

#include <set>

#include "topoidx/error.hpp"
#include "topoidx/registry.hpp"

using namespace topoidx;

namespace {

IndexDescriptor desc(std::string_view name) {
  auto t = lookup_index(name);
  REQUIRE(std::holds_alternative<IndexDescriptor>(t));
  return std::get<IndexDescriptor>(t);
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& r = registry();
  CHECK(r.size() == 448 + 14);
  std::set<std::string> names;
  for (const auto& e : r) names.insert(e.name);
  CHECK(names.size() == r.size());
  CHECK(r.front().name == "RL1");
  CHECK(r.back().name == "HeronianRL");
}

TEST_CASE("every canonical name resolves to itself") {
  for (const auto& e : registry()) {
    CAPTURE(e.name);
    const auto t = lookup_index(e.name);
    CHECK(canonical_name(t) == e.name);
    CHECK(t == e.target);
  }
}

TEST_CASE("lookup examples") {
  CHECK(desc("HBRL_2") == IndexDescriptor{DegreeSource::Banhatti, Variant::V2, Transform::hyper(), Aggregation::Sum,
                                          Form::Value});
  CHECK(desc("MIRRL_1") == IndexDescriptor{DegreeSource::Revan, Variant::V1, Transform::inverse(),
                                           Aggregation::Product, Form::Value});
  CHECK(desc("mhrlkv2").source == DegreeSource::KV);
  CHECK(desc("HMRL1").aggregation == Aggregation::Product);
  CHECK(desc("RL 2 (x)").form == Form::Exponential);
  CHECK(desc("DRL1(G, x)").form == Form::Exponential);
  CHECK(desc("GRL3(a=5/2)").transform == Transform::general(Rat(5, 2)));
  CHECK(desc("GRL3").transform == Transform::general(Rat(3)));
  CHECK(canonical_name(desc("grl3_exp(a=2)")) == "GRL3_exp(a=2)");
  CHECK(lookup_index("C1") == IndexTarget(SpecialIndex::RL7));
  CHECK(lookup_index("heronian") == IndexTarget(SpecialIndex::Heronian));
  CHECK(lookup_index("NCL") == IndexTarget(SpecialIndex::RL17));
}

TEST_CASE("unknown names") {
  for (const char* bad : {"bogus", "MMRL1", "BRLKV1", "RL0", "HRL1(a=2)", "RL5(x)", "RL1(y)"}) {
    CAPTURE(bad);
    try {
      lookup_index(bad);
      FAIL("expected UnknownIndexName");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownIndexName);
    }
  }
  try {
    lookup_index("BRL9");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("did you mean") != std::string::npos);
  }
}

TEST_CASE("catalog lines") {
  CHECK(describe(registry().front()) == "RL1,plain,V1,identity,sum,value");
  bool saw_general = false;
  for (const auto& e : registry()) {
    if (e.name == "MGTRL4_exp") {
      CHECK(describe(e) == "MGTRL4_exp,temperature,V4,general(a=3),product,exponential");
      saw_general = true;
    }
  }
  CHECK(saw_general);
  CHECK(describe(registry().back()) == "HeronianRL,plain,special,identity,sum,value");
}
