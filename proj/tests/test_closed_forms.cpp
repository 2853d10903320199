#include <doctest.h>

#include <set>

#include "topoidx/error.hpp"
#include "topoidx/registry.hpp"
#include "topoidx/verify.hpp"

using namespace topoidx;

namespace {

Rat scalar(std::string_view id, const Params& p) { return std::get<Rat>(oracle_eval(id, p)); }

const OracleResult& row(const std::vector<OracleResult>& rows, std::string_view id, std::string_view params) {
  for (const auto& r : rows) {
    if (r.id == id && r.family_params == params) return r;
  }
  FAIL("missing row");
  return rows.front();
}

}  // namespace

TEST_CASE("oracle examples") {
  CHECK(scalar("RL1/wheel", {4}) == Rat(256));
  CHECK(scalar("RL4/regular", {8, 3}) == Rat(0));
  CHECK(render(oracle_eval("RL2exp/wheel", {4})) == "4*x^13 + 4*x^9");
  CHECK(scalar("NRL1/cycle", {4}) == Rat(432));
  CHECK(scalar("RLKV1/cycle", {3}) == Rat(288));
  CHECK(scalar("DRL1/kmn", {2, 3}) == Rat(222));
  CHECK(scalar("RL3/kmn", {2, 3}) == Rat(30));
}

TEST_CASE("oracle table is well formed") {
  std::set<std::string> ids;
  for (const auto& e : oracles()) {
    CAPTURE(e.id);
    CHECK(ids.insert(e.id).second);
    CHECK_NOTHROW(lookup_index(e.index));
    CHECK_FALSE(e.display.empty());
    CHECK_FALSE(e.stated_range.empty());
    CHECK_FALSE(parameter_points(e, 3, 10, kDefaultDominationMax).empty());
  }
  CHECK(ids.size() > 200);
}

TEST_CASE("oracle errors") {
  try {
    oracle_eval("RL1/wheel", {2});
    FAIL("expected ParamsOutOfStatedRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParamsOutOfStatedRange);
  }
  CHECK_THROWS_AS(oracle_eval("RL1/kmn", {4, 2}), Error);
  CHECK_THROWS_AS(oracle_eval("RL1/wheel", {4, 1}), Error);
  try {
    find_oracle("RL9/wheel");
    FAIL("expected UnknownOracle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownOracle);
  }
}

TEST_CASE("parameter enumeration") {
  const auto& reg = find_oracle("RL1/regular");
  const auto pts = parameter_points(reg, 5, 5, 24);
  CHECK(pts == std::vector<Params>{{5, 2}, {5, 4}});
  CHECK(format_params(reg, pts[0]) == "n=5;r=2");
  const auto& wm = find_oracle("DRL1/windmill");
  for (const auto& p : parameter_points(wm, 3, 10, 24)) CHECK(p[1] * (p[0] - 1) + 1 <= 24);
  const auto& gt = find_oracle("BRL3/kmn");
  for (const auto& p : parameter_points(gt, 3, 6, 24)) CHECK(p[0] > p[1]);
}

TEST_CASE("verify examples") {
  VerifyOptions o;
  o.oracle = "RL1/cycle";
  for (const auto& r : verify(o)) CHECK(r.verdict == Verdict::Confirmed);

  o.oracle = "NRL1/cycle";
  o.lo = 4;
  o.hi = 4;
  auto rows = verify(o);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].verdict == Verdict::Discrepant);
  CHECK(rows[0].oracle_value == "432/1");
  CHECK(rows[0].direct_value == "192/1");
  CHECK(rows[0].difference == "-240/1");

  o.lo = o.hi = 3;
  CHECK(verify(o).at(0).verdict == Verdict::Confirmed);

  o.oracle = "RLKV1/cycle";
  rows = verify(o);
  CHECK(row(rows, "RLKV1/cycle", "n=3").verdict == Verdict::Discrepant);
  CHECK(row(rows, "RLKV1/cycle", "n=3").direct_value == "144/1");

  VerifyOptions w;
  w.oracle = "RLKV1/wheel";
  w.hi = 8;
  for (const auto& r : verify(w)) CHECK(r.verdict == Verdict::Confirmed);
}

TEST_CASE("family filter accepts pattern keys and family names") {
  VerifyOptions o;
  o.family = "kmn";
  o.hi = 4;
  const auto a = verify(o);
  o.family = "complete_bipartite";
  const auto b = verify(o);
  CHECK_FALSE(a.empty());
  CHECK(b.size() > a.size());
  for (const auto& r : a) CHECK(r.id.ends_with("/kmn"));
}

TEST_CASE("baseline handling") {
  const auto rows = parse_baseline(embedded_baseline());
  CHECK(rows.size() > 1000);
  VerifyOptions o;
  const auto results = verify(o);
  const auto diff = compare_to_baseline(results, rows);
  CHECK(count_deviations(diff) == 0);
  CHECK(diff.empty());

  auto edited = parse_baseline(format_baseline(results));
  CHECK(edited.size() == results.size());
  edited[0].verdict = edited[0].verdict == Verdict::Confirmed ? Verdict::Discrepant : Verdict::Confirmed;
  edited.pop_back();
  const auto d2 = compare_to_baseline(results, edited);
  CHECK(count_deviations(d2) == 1);
  CHECK(d2.size() == 2);

  CHECK_THROWS_AS(parse_baseline("RL1/wheel,n=3,MAYBE\n"), Error);
  CHECK_THROWS_AS(parse_baseline("RL1/wheel\n"), Error);
}

TEST_CASE("report formats") {
  VerifyOptions o;
  o.oracle = "RL1/wheel";
  o.hi = 4;
  const auto r = verify(o);
  CHECK(format_csv(r) ==
        "oracle_id,family_params,oracle_value,direct_value,verdict\n"
        "RL1/wheel,n=3,162/1,162/1,CONFIRMED\n"
        "RL1/wheel,n=4,256/1,256/1,CONFIRMED\n");
  CHECK(format_table(r).find("2 points: 2 confirmed, 0 discrepant, 0 errors") != std::string::npos);
}
