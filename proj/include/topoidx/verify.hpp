#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topoidx/closed_forms.hpp"
#include "topoidx/functionals.hpp"

namespace topoidx {

enum class Verdict { Confirmed, Discrepant, Error };

std::string_view verdict_name(Verdict v);  // CONFIRMED, DISCREPANT, ERROR

struct OracleResult {
  std::string id;
  std::string family_params;  // "n=8;r=3"
  std::string oracle_value;
  std::string direct_value;
  Verdict verdict = Verdict::Error;
  std::string difference;  // direct - oracle for scalar rows, empty otherwise
};

struct VerifyOptions {
  std::optional<std::string> family;  // pattern key, e.g. "wheel" or "kmn"
  long lo = 3;
  long hi = 10;
  std::optional<std::string> oracle;
  std::size_t domination_max = kDefaultDominationMax;
};

/// Runs every selected oracle at every parameter point; results are sorted by
/// (id, parameters). Evaluation failures become Error rows.
std::vector<OracleResult> verify(const VerifyOptions& opts);

/// Baseline CSV shipped with the library: oracle_id,family_params,verdict.
std::string_view embedded_baseline();

struct BaselineRow {
  std::string id;
  std::string family_params;
  Verdict verdict;
};
std::vector<BaselineRow> parse_baseline(std::string_view text);  // throws ParseError
std::string format_baseline(const std::vector<OracleResult>& results);

struct Deviation {
  const OracleResult* result;
  std::optional<Verdict> expected;  // nullopt when the point is absent from the baseline
};

/// Rows whose verdict differs from the baseline. Points missing from the
/// baseline are listed with no expectation and are not counted as deviations.
std::vector<Deviation> compare_to_baseline(const std::vector<OracleResult>& results,
                                           const std::vector<BaselineRow>& baseline);
std::size_t count_deviations(const std::vector<Deviation>& d);

std::string format_csv(const std::vector<OracleResult>& results);
std::string format_table(const std::vector<OracleResult>& results);

}  // namespace topoidx
