#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topoidx/topoidx.h"

namespace {

struct Row {
  std::string index;
  std::string value;
  std::string approx;
  std::string kind;
  std::string error;
};

std::string status_message(topoidx_status s) {
  std::string msg = topoidx_status_name(s);
  const std::string detail = topoidx_last_error();
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

[[noreturn]] void die(topoidx_status s) {
  std::cerr << "topoidx: " << status_message(s) << "\n";
  std::exit(2);
}

size_t domination_max_from_env() {
  const char* env = std::getenv("TOPOIDX_DOMINATION_MAX");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) {
    std::cerr << "topoidx: ignoring invalid TOPOIDX_DOMINATION_MAX='" << env << "'\n";
    return 0;
  }
  return static_cast<size_t>(v);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  topoidx_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) {
    std::cerr << "topoidx: cannot write '" << path << "'\n";
    std::exit(2);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::string cur;
    int depth = 0;
    for (char c : item) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

int cmd_gen(const std::string& family, const std::vector<long>& params, const std::string& out) {
  topoidx_graph* g = nullptr;
  if (auto s = topoidx_graph_generate(family.c_str(), params.data(), params.size(), &g)) die(s);
  std::string comment = family;
  for (long p : params) comment += " " + std::to_string(p);
  char* text = nullptr;
  auto s = topoidx_graph_format(g, comment.c_str(), &text);
  topoidx_graph_free(g);
  if (s) die(s);
  emit(take_string(text), out);
  return 0;
}

std::string render_table(const std::vector<Row>& rows, bool with_approx) {
  size_t wi = 5, wv = 5;
  for (const auto& r : rows) {
    wi = std::max(wi, r.index.size());
    wv = std::max(wv, (r.error.empty() ? r.value : r.error).size());
  }
  std::ostringstream os;
  auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
    std::string out = a;
    out.resize(wi, ' ');
    out += "  " + b;
    if (with_approx) {
      out.resize(wi + 2 + wv, ' ');
      out += "  " + c;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << "\n";
  };
  line("index", "value", "approx");
  for (const auto& r : rows) line(r.index, r.error.empty() ? r.value : r.error, r.approx);
  return os.str();
}

int cmd_compute(const std::string& file, const std::vector<std::string>& index_args, bool all,
                const std::string& format, bool floats, const std::optional<std::string>& degree,
                const std::string& out) {
  if (all == !index_args.empty()) {
    std::cerr << "topoidx: compute needs exactly one of --index or --all\n";
    return 2;
  }
  topoidx_graph* g = nullptr;
  if (auto s = topoidx_graph_load(file.c_str(), &g)) die(s);
  topoidx_session* session = nullptr;
  if (auto s = topoidx_session_new(g, domination_max_from_env(), &session)) die(s);

  std::vector<std::string> names;
  if (all) {
    for (size_t i = 0; i < topoidx_index_count(); ++i) {
      const char* name = nullptr;
      topoidx_index_info(i, &name, nullptr);
      names.emplace_back(name);
    }
    std::sort(names.begin(), names.end());
  } else {
    names = split_names(index_args);
  }

  std::vector<Row> rows;
  int failures = 0;
  for (const auto& name : names) {
    topoidx_result* r = nullptr;
    auto s = topoidx_compute(session, name.c_str(), degree ? degree->c_str() : nullptr, &r);
    if (s) {
      if (!all) {
        std::cerr << "topoidx: " << name << ": " << status_message(s) << "\n";
        ++failures;
      }
      rows.push_back({name, "", "", "error", std::string("error: ") + topoidx_status_name(s)});
      continue;
    }
    Row row{topoidx_result_name(r), topoidx_result_text(r), "", "", ""};
    switch (topoidx_result_get_kind(r)) {
      case TOPOIDX_RESULT_EXACT: row.kind = "exact"; break;
      case TOPOIDX_RESULT_POLY: row.kind = "polynomial"; break;
      case TOPOIDX_RESULT_APPROX: row.kind = "approx"; break;
    }
    double d = 0;
    if (floats && topoidx_result_double(r, &d) == TOPOIDX_OK) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", d);
      row.approx = buf;
    }
    rows.push_back(std::move(row));
    topoidx_result_free(r);
  }
  topoidx_session_free(session);
  topoidx_graph_free(g);

  std::string text;
  if (format == "csv") {
    text = "graph,index,value,approx\n";
    for (const auto& r : rows) {
      text += csv_field(file) + "," + csv_field(r.index) + "," + csv_field(r.error.empty() ? r.value : r.error) + "," +
              r.approx + "\n";
    }
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["graph"] = file;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json e;
      e["index"] = r.index;
      if (r.error.empty()) {
        e["kind"] = r.kind;
        e["value"] = r.value;
        if (!r.approx.empty()) e["approx"] = r.approx;
      } else {
        e["error"] = r.error.substr(7);
      }
      j["results"].push_back(std::move(e));
    }
    text = j.dump(2) + "\n";
  } else {
    text = render_table(rows, floats);
  }
  emit(text, out);
  return failures ? 1 : 0;
}

bool parse_range(const std::string& text, long& lo, long& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stol(text);
    } else {
      lo = std::stol(text.substr(0, dots));
      hi = std::stol(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo <= hi;
}

int cmd_verify(const std::optional<std::string>& family, const std::string& range,
               const std::optional<std::string>& oracle, const std::string& format,
               const std::optional<std::string>& baseline_path) {
  long lo = 0, hi = 0;
  if (!parse_range(range, lo, hi)) {
    std::cerr << "topoidx: bad range '" << range << "', expected A..B\n";
    return 2;
  }
  std::optional<std::string> baseline;
  if (baseline_path) {
    std::ifstream f(*baseline_path, std::ios::binary);
    if (!f) {
      std::cerr << "topoidx: cannot read baseline '" << *baseline_path << "'\n";
      return 2;
    }
    baseline = std::string(std::istreambuf_iterator<char>(f), {});
  }

  topoidx_report* report = nullptr;
  if (auto s = topoidx_verify(family ? family->c_str() : nullptr, lo, hi, oracle ? oracle->c_str() : nullptr,
                              domination_max_from_env(), &report)) {
    die(s);
  }
  char* text = nullptr;
  if (auto s = topoidx_report_format(report, format.c_str(), &text)) die(s);
  std::cout << take_string(text);

  size_t deviations = 0, unlisted = 0;
  char* description = nullptr;
  if (auto s = topoidx_report_compare(report, baseline ? baseline->c_str() : nullptr, &deviations, &unlisted,
                                      &description)) {
    die(s);
  }
  const std::string diff = take_string(description);
  if (!diff.empty()) std::cerr << diff;
  if (topoidx_report_size(report) == 0) std::cerr << "topoidx: no oracle points selected\n";
  if (unlisted) std::cerr << unlisted << " point(s) not covered by the baseline\n";
  if (deviations) std::cerr << deviations << " deviation(s) from the baseline\n";
  topoidx_report_free(report);
  return deviations ? 1 : 0;
}

int cmd_list() {
  std::cout << "name,source,variant,transform,aggregation,form\n";
  for (size_t i = 0; i < topoidx_index_count(); ++i) {
    const char* desc = nullptr;
    topoidx_index_info(i, nullptr, &desc);
    std::cout << desc << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-based topological indices with exact arithmetic"};
  app.require_subcommand(1);

  std::string gen_family, gen_out;
  std::vector<long> gen_params;
  auto* gen = app.add_subcommand("gen", "Generate a family graph as an edge list");
  gen->add_option("family", gen_family, "regular, cycle, path, complete, complete_bipartite, star, double_star, "
                                        "wheel, sunflower, french_windmill")
      ->required();
  gen->add_option("params", gen_params, "Family parameters")->required();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string file, format = "table", compute_out;
  std::vector<std::string> indices;
  bool all = false, floats = false;
  std::optional<std::string> degree;
  auto* compute = app.add_subcommand("compute", "Evaluate indices on an edge-list file");
  compute->add_option("file", file, "Edge-list file")->required();
  compute->add_option("--index", indices, "Index names, comma separated");
  compute->add_flag("--all", all, "Every registered index");
  compute->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  compute->add_flag("--float", floats, "Add a 12-digit float column");
  compute->add_option("--degree", degree, "Replace the degree source of catalog indices");
  compute->add_option("-o,--output", compute_out, "Output file (default stdout)");
  compute->footer("RL5 uses min(d(u), d(v)) ^ max(d(u), d(v)) per edge.");

  std::optional<std::string> family, oracle, baseline;
  std::string range = "3..10", verify_format = "table";
  auto* verify = app.add_subcommand("verify", "Compare closed forms against direct evaluation");
  verify->add_option("--family", family, "Family key, e.g. wheel or kmn");
  verify->add_option("--range", range, "Principal parameter range A..B");
  verify->add_option("--oracle", oracle, "Single oracle id, e.g. RL1/wheel");
  verify->add_option("--format", verify_format, "table, csv or baseline")
      ->check(CLI::IsMember({"table", "csv", "baseline"}));
  verify->add_option("--baseline", baseline, "Baseline CSV replacing the built-in one");

  auto* list = app.add_subcommand("list-indices", "Print the index registry");

  CLI11_PARSE(app, argc, argv);

  if (*gen) return cmd_gen(gen_family, gen_params, gen_out);
  if (*compute) return cmd_compute(file, indices, all, format, floats, degree, compute_out);
  if (*verify) return cmd_verify(family, range, oracle, verify_format, baseline);
  if (*list) return cmd_list();
  return 2;
}
