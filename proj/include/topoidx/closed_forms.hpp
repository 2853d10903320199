#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "topoidx/exactnum.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

using OracleValue = std::variant<Rat, ExpPoly>;
using Params = std::vector<long>;

std::string render(const OracleValue& v);

/// One closed-form prediction for an index on a graph family.
struct OracleEntry {
  std::string id;                        // e.g. "RL1/wheel", "RL2exp/wheel"
  std::string index;                     // registry name evaluated directly
  std::string pattern;                   // family key used in the id
  std::vector<std::string_view> params;  // parameter names, principal first
  std::string display;                   // the formula as stated
  std::string stated_range;              // e.g. "1 <= m <= n, n >= 2"
  std::function<bool(const Params&)> in_range;
  std::function<FamilySpec(const Params&)> graph;
  std::function<OracleValue(const Params&)> formula;
};

/// Every transcribed closed form, sorted by id.
const std::vector<OracleEntry>& oracles();
const OracleEntry& find_oracle(std::string_view id);  // throws UnknownOracle

/// Evaluates the formula; throws ParamsOutOfStatedRange outside the stated
/// hypotheses or when the arity is wrong.
OracleValue oracle_eval(const OracleEntry& e, const Params& p);
OracleValue oracle_eval(std::string_view id, const Params& p);

/// "n=8;r=3"
std::string format_params(const OracleEntry& e, const Params& p);

/// Parameter points for the oracle whose principal parameter lies in [lo, hi]
/// and which satisfy both the stated range and the generator's constraints.
/// Secondary parameters are enumerated per family, bounded by `max_vertices`
/// for domination oracles.
std::vector<Params> parameter_points(const OracleEntry& e, long lo, long hi, std::size_t max_vertices);

}  // namespace topoidx
