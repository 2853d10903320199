#include "topoidx/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <sstream>

#include "topoidx/error.hpp"
#include "topoidx/registry.hpp"

namespace topoidx {

namespace {

struct Workspace {
  Graph graph;
  std::unique_ptr<EvalContext> ctx;
};

bool family_matches(const OracleEntry& e, std::string_view filter) {
  const bool is_pattern =
      std::any_of(oracles().begin(), oracles().end(), [&](const OracleEntry& o) { return o.pattern == filter; });
  if (is_pattern) return e.pattern == filter;
  auto fam = family_from_name(filter);
  if (!fam) return false;
  const Params probe(e.params.size(), 3);
  return e.graph(probe).family == *fam;
}

std::string direct_text(const IndexResult& r) { return r.render(); }

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "CONFIRMED";
    case Verdict::Discrepant: return "DISCREPANT";
    case Verdict::Error: break;
  }
  return "ERROR";
}

std::vector<OracleResult> verify(const VerifyOptions& opts) {
  std::map<std::string, std::unique_ptr<Workspace>> graphs;
  std::vector<OracleResult> out;

  for (const auto& e : oracles()) {
    if (opts.oracle && e.id != *opts.oracle) continue;
    if (opts.family && !family_matches(e, *opts.family)) continue;

    for (const auto& p : parameter_points(e, opts.lo, opts.hi, opts.domination_max)) {
      OracleResult row;
      row.id = e.id;
      row.family_params = format_params(e, p);
      try {
        const OracleValue expected = oracle_eval(e, p);
        row.oracle_value = render(expected);

        const FamilySpec spec = e.graph(p);
        auto& ws = graphs[spec.to_string()];
        if (!ws) {
          ws = std::make_unique<Workspace>();
          ws->graph = generate(spec);
          ws->ctx = std::make_unique<EvalContext>(ws->graph, opts.domination_max);
        }
        const IndexResult direct = compute(*ws->ctx, lookup_index(e.index));
        row.direct_value = direct_text(direct);

        bool equal = false;
        if (const auto* r = std::get_if<Rat>(&expected)) {
          equal = direct.kind == IndexResult::Kind::Exact && direct.exact == *r;
          if (direct.kind == IndexResult::Kind::Exact) row.difference = (direct.exact - *r).to_string();
        } else {
          equal = direct.kind == IndexResult::Kind::Poly && direct.poly == std::get<ExpPoly>(expected);
        }
        row.verdict = equal ? Verdict::Confirmed : Verdict::Discrepant;
      } catch (const Error& err) {
        row.verdict = Verdict::Error;
        row.direct_value = std::string("error: ") + std::string(error_code_name(err.code()));
      }
      out.push_back(std::move(row));
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const OracleResult& a, const OracleResult& b) { return a.id < b.id; });
  return out;
}

std::vector<BaselineRow> parse_baseline(std::string_view text) {
  std::vector<BaselineRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind("oracle_id,", 0) == 0) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw Error(ErrorCode::ParseError, "baseline line " + std::to_string(lineno) + ": expected 3 fields");
    }
    const std::string v = line.substr(c2 + 1);
    Verdict verdict;
    if (v == "CONFIRMED") {
      verdict = Verdict::Confirmed;
    } else if (v == "DISCREPANT") {
      verdict = Verdict::Discrepant;
    } else if (v == "ERROR") {
      verdict = Verdict::Error;
    } else {
      throw Error(ErrorCode::ParseError, "baseline line " + std::to_string(lineno) + ": bad verdict '" + v + "'");
    }
    rows.push_back({line.substr(0, c1), line.substr(c1 + 1, c2 - c1 - 1), verdict});
  }
  return rows;
}

std::string format_baseline(const std::vector<OracleResult>& results) {
  std::string out = "oracle_id,family_params,verdict\n";
  for (const auto& r : results) {
    out += r.id + "," + r.family_params + "," + std::string(verdict_name(r.verdict)) + "\n";
  }
  return out;
}

std::vector<Deviation> compare_to_baseline(const std::vector<OracleResult>& results,
                                           const std::vector<BaselineRow>& baseline) {
  std::map<std::pair<std::string, std::string>, Verdict> expected;
  for (const auto& b : baseline) expected[{b.id, b.family_params}] = b.verdict;
  std::vector<Deviation> out;
  for (const auto& r : results) {
    auto it = expected.find({r.id, r.family_params});
    if (it == expected.end()) {
      out.push_back({&r, std::nullopt});
    } else if (it->second != r.verdict) {
      out.push_back({&r, it->second});
    }
  }
  return out;
}

std::size_t count_deviations(const std::vector<Deviation>& d) {
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Deviation& x) { return x.expected; }));
}

std::string format_csv(const std::vector<OracleResult>& results) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "oracle_id,family_params,oracle_value,direct_value,verdict\n";
  for (const auto& r : results) {
    out += quote(r.id) + "," + quote(r.family_params) + "," + quote(r.oracle_value) + "," + quote(r.direct_value) +
           "," + std::string(verdict_name(r.verdict)) + "\n";
  }
  return out;
}

std::string format_table(const std::vector<OracleResult>& results) {
  std::size_t w_id = 9, w_p = 6, w_o = 6;
  for (const auto& r : results) {
    w_id = std::max(w_id, r.id.size());
    w_p = std::max(w_p, r.family_params.size());
    w_o = std::max(w_o, std::min<std::size_t>(r.oracle_value.size(), 40));
  }
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() > w) s = s.substr(0, w - 3) + "...";
    s.resize(w, ' ');
    return s;
  };
  std::string out = pad("oracle", w_id) + "  " + pad("params", w_p) + "  " + pad("verdict", 10) + "  " +
                    pad("oracle", w_o) + "  direct\n";
  std::size_t confirmed = 0, discrepant = 0, errors = 0;
  for (const auto& r : results) {
    out += pad(r.id, w_id) + "  " + pad(r.family_params, w_p) + "  " + pad(std::string(verdict_name(r.verdict)), 10) +
           "  " + pad(r.oracle_value, w_o) + "  " + r.direct_value + "\n";
    (r.verdict == Verdict::Confirmed ? confirmed : r.verdict == Verdict::Discrepant ? discrepant : errors)++;
  }
  out += std::to_string(results.size()) + " points: " + std::to_string(confirmed) + " confirmed, " +
         std::to_string(discrepant) + " discrepant, " + std::to_string(errors) + " errors\n";
  return out;
}

}  // namespace topoidx
