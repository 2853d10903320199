#include "topoidx/topoidx.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "topoidx/error.hpp"
#include "topoidx/registry.hpp"
#include "topoidx/verify.hpp"

struct topoidx_graph {
  topoidx::Graph g;
};

struct topoidx_session {
  topoidx::EvalContext ctx;
};

struct topoidx_result {
  std::string name;
  topoidx::IndexResult value;
  std::string text;
  std::string radicand;
};

struct topoidx_report {
  std::vector<topoidx::OracleResult> rows;
};

namespace {

thread_local std::string g_last_error;

topoidx_status fail(topoidx_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

topoidx_status from_code(topoidx::ErrorCode c) { return static_cast<topoidx_status>(static_cast<int>(c) + 1); }

template <class F>
topoidx_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const topoidx::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TOPOIDX_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TOPOIDX_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

topoidx_status null_arg(const char* what) { return fail(TOPOIDX_E_INVALID_ARGUMENT, std::string(what) + " is NULL"); }

topoidx_status adopt(topoidx::Graph g, topoidx_graph** out) {
  *out = new topoidx_graph{std::move(g)};
  return TOPOIDX_OK;
}

}  // namespace

extern "C" {

const char* topoidx_last_error(void) { return g_last_error.c_str(); }

const char* topoidx_status_name(topoidx_status s) {
  switch (s) {
    case TOPOIDX_OK: return "OK";
    case TOPOIDX_E_INVALID_ARGUMENT: return "InvalidArgument";
    case TOPOIDX_E_INTERNAL: return "Internal";
    default: break;
  }
  if (s > TOPOIDX_OK && s < TOPOIDX_E_INVALID_ARGUMENT) {
    return topoidx::error_code_name(static_cast<topoidx::ErrorCode>(static_cast<int>(s) - 1)).data();
  }
  return "Unknown";
}

void topoidx_string_free(char* s) { std::free(s); }

topoidx_status topoidx_graph_from_edges(uint32_t vertex_count, const uint32_t* edges, size_t edge_count,
                                        topoidx_graph** out) {
  if (!out) return null_arg("out");
  if (!edges && edge_count) return null_arg("edges");
  return guarded([&] {
    std::vector<std::pair<topoidx::Vertex, topoidx::Vertex>> pairs;
    pairs.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) pairs.emplace_back(edges[2 * i], edges[2 * i + 1]);
    return adopt(topoidx::Graph::build(vertex_count, pairs), out);
  });
}

topoidx_status topoidx_graph_parse(const char* text, topoidx_graph** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] { return adopt(topoidx::parse_edge_list(text), out); });
}

topoidx_status topoidx_graph_load(const char* path, topoidx_graph** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] { return adopt(topoidx::load_edge_list(path), out); });
}

topoidx_status topoidx_graph_generate(const char* family, const long* params, size_t param_count,
                                      topoidx_graph** out) {
  if (!family) return null_arg("family");
  if (!out) return null_arg("out");
  if (!params && param_count) return null_arg("params");
  return guarded([&] {
    auto fam = topoidx::family_from_name(family);
    if (!fam) {
      throw topoidx::Error(topoidx::ErrorCode::InvalidFamilyParams, "unknown family '" + std::string(family) + "'");
    }
    return adopt(topoidx::generate({*fam, std::vector<long>(params, params + param_count)}), out);
  });
}

topoidx_status topoidx_graph_format(const topoidx_graph* g, const char* comment, char** out) {
  if (!g) return null_arg("graph");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup(topoidx::format_edge_list(g->g, comment ? comment : ""));
    return TOPOIDX_OK;
  });
}

topoidx_status topoidx_graph_write(const topoidx_graph* g, const char* path, const char* comment) {
  if (!g) return null_arg("graph");
  if (!path) return null_arg("path");
  return guarded([&] {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw topoidx::Error(topoidx::ErrorCode::IoError, "cannot open '" + std::string(path) + "' for writing");
    f << topoidx::format_edge_list(g->g, comment ? comment : "");
    if (!f.flush()) throw topoidx::Error(topoidx::ErrorCode::IoError, "write to '" + std::string(path) + "' failed");
    return TOPOIDX_OK;
  });
}

uint32_t topoidx_graph_vertex_count(const topoidx_graph* g) {
  return g ? static_cast<uint32_t>(g->g.vertex_count()) : 0;
}

size_t topoidx_graph_edge_count(const topoidx_graph* g) { return g ? g->g.edge_count() : 0; }

uint64_t topoidx_graph_fingerprint(const topoidx_graph* g) { return g ? g->g.fingerprint() : 0; }

void topoidx_graph_free(topoidx_graph* g) { delete g; }

topoidx_status topoidx_session_new(const topoidx_graph* g, size_t domination_max, topoidx_session** out) {
  if (!g) return null_arg("graph");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new topoidx_session{
        topoidx::EvalContext(g->g, domination_max ? domination_max : topoidx::kDefaultDominationMax)};
    return TOPOIDX_OK;
  });
}

void topoidx_session_free(topoidx_session* s) { delete s; }

topoidx_status topoidx_compute(topoidx_session* s, const char* index, const char* degree, topoidx_result** out) {
  if (!s) return null_arg("session");
  if (!index) return null_arg("index");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto target = topoidx::lookup_index(index);
    if (degree) {
      auto src = topoidx::source_from_name(degree);
      if (!src) return fail(TOPOIDX_E_INVALID_ARGUMENT, "unknown degree source '" + std::string(degree) + "'");
      auto* d = std::get_if<topoidx::IndexDescriptor>(&target);
      if (!d) return fail(TOPOIDX_E_INVALID_ARGUMENT, "degree override applies only to catalog indices");
      d->source = *src;
    }
    auto r = std::make_unique<topoidx_result>();
    r->name = topoidx::canonical_name(target);
    r->value = topoidx::compute(s->ctx, target);
    r->text = r->value.render();
    if (r->value.radicand) r->radicand = r->value.radicand->to_string();
    *out = r.release();
    return TOPOIDX_OK;
  });
}

topoidx_result_kind topoidx_result_get_kind(const topoidx_result* r) {
  if (!r) return TOPOIDX_RESULT_EXACT;
  switch (r->value.kind) {
    case topoidx::IndexResult::Kind::Exact: return TOPOIDX_RESULT_EXACT;
    case topoidx::IndexResult::Kind::Poly: return TOPOIDX_RESULT_POLY;
    case topoidx::IndexResult::Kind::Approx: break;
  }
  return TOPOIDX_RESULT_APPROX;
}

const char* topoidx_result_name(const topoidx_result* r) { return r ? r->name.c_str() : ""; }

const char* topoidx_result_text(const topoidx_result* r) { return r ? r->text.c_str() : ""; }

topoidx_status topoidx_result_double(const topoidx_result* r, double* out) {
  if (!r) return null_arg("result");
  if (!out) return null_arg("out");
  auto v = r->value.to_double();
  if (!v) return fail(TOPOIDX_E_UNSUPPORTED_EVALUATION, "polynomial results have no scalar value");
  *out = *v;
  return TOPOIDX_OK;
}

const char* topoidx_result_radicand(const topoidx_result* r) {
  return r && r->value.radicand ? r->radicand.c_str() : nullptr;
}

void topoidx_result_free(topoidx_result* r) { delete r; }

topoidx_status topoidx_functional_csv(topoidx_session* s, const char* functional, char** out) {
  if (!s) return null_arg("session");
  if (!functional) return null_arg("functional");
  if (!out) return null_arg("out");
  return guarded([&] {
    const std::string name = functional;
    const topoidx::FunctionalTable* table = nullptr;
    if (name == "closeness") {
      table = &s->ctx.closeness();
    } else if (name == "cl") {
      table = &s->ctx.cl_degree();
    } else if (auto src = topoidx::source_from_name(name)) {
      if (*src == topoidx::DegreeSource::Banhatti) {
        return fail(TOPOIDX_E_INVALID_ARGUMENT, "banhatti values are per edge endpoint, not per vertex");
      }
      table = &s->ctx.table(*src);
    } else {
      return fail(TOPOIDX_E_INVALID_ARGUMENT, "unknown functional '" + name + "'");
    }
    std::string csv = "vertex,value\n";
    for (size_t v = 0; v < table->values.size(); ++v) {
      csv += std::to_string(v) + "," + table->values[v].to_short_string() + "\n";
    }
    *out = dup(csv);
    return TOPOIDX_OK;
  });
}

size_t topoidx_index_count(void) { return topoidx::registry().size(); }

topoidx_status topoidx_index_info(size_t i, const char** name, const char** description) {
  return guarded([&] {
    static const std::vector<std::string> descriptions = [] {
      std::vector<std::string> out;
      for (const auto& e : topoidx::registry()) out.push_back(topoidx::describe(e));
      return out;
    }();
    if (i >= descriptions.size()) return fail(TOPOIDX_E_INVALID_ARGUMENT, "index position out of range");
    if (name) *name = topoidx::registry()[i].name.c_str();
    if (description) *description = descriptions[i].c_str();
    return TOPOIDX_OK;
  });
}

topoidx_status topoidx_verify(const char* family, long lo, long hi, const char* oracle, size_t domination_max,
                              topoidx_report** out) {
  if (!out) return null_arg("out");
  if (lo > hi) return fail(TOPOIDX_E_INVALID_ARGUMENT, "empty range");
  return guarded([&] {
    topoidx::VerifyOptions opts;
    if (family) opts.family = family;
    if (oracle) {
      topoidx::find_oracle(oracle);
      opts.oracle = oracle;
    }
    opts.lo = lo;
    opts.hi = hi;
    if (domination_max) opts.domination_max = domination_max;
    *out = new topoidx_report{topoidx::verify(opts)};
    return TOPOIDX_OK;
  });
}

size_t topoidx_report_size(const topoidx_report* r) { return r ? r->rows.size() : 0; }

topoidx_status topoidx_report_row(const topoidx_report* r, size_t i, const char** id, const char** params,
                                  const char** oracle_value, const char** direct_value, const char** verdict) {
  if (!r) return null_arg("report");
  if (i >= r->rows.size()) return fail(TOPOIDX_E_INVALID_ARGUMENT, "row out of range");
  const auto& row = r->rows[i];
  if (id) *id = row.id.c_str();
  if (params) *params = row.family_params.c_str();
  if (oracle_value) *oracle_value = row.oracle_value.c_str();
  if (direct_value) *direct_value = row.direct_value.c_str();
  if (verdict) *verdict = topoidx::verdict_name(row.verdict).data();
  return TOPOIDX_OK;
}

topoidx_status topoidx_report_format(const topoidx_report* r, const char* format, char** out) {
  if (!r) return null_arg("report");
  if (!format) return null_arg("format");
  if (!out) return null_arg("out");
  return guarded([&] {
    const std::string f = format;
    if (f == "csv") {
      *out = dup(topoidx::format_csv(r->rows));
    } else if (f == "table") {
      *out = dup(topoidx::format_table(r->rows));
    } else if (f == "baseline") {
      *out = dup(topoidx::format_baseline(r->rows));
    } else {
      return fail(TOPOIDX_E_INVALID_ARGUMENT, "unknown report format '" + f + "'");
    }
    return TOPOIDX_OK;
  });
}

topoidx_status topoidx_report_compare(const topoidx_report* r, const char* baseline, size_t* deviations,
                                      size_t* unlisted, char** description) {
  if (!r) return null_arg("report");
  return guarded([&] {
    const auto rows = topoidx::parse_baseline(baseline ? std::string_view(baseline) : topoidx::embedded_baseline());
    const auto diff = topoidx::compare_to_baseline(r->rows, rows);
    const size_t dev = topoidx::count_deviations(diff);
    if (deviations) *deviations = dev;
    if (unlisted) *unlisted = diff.size() - dev;
    if (description) {
      std::string text;
      for (const auto& d : diff) {
        text += d.result->id + " " + d.result->family_params + ": " +
                std::string(topoidx::verdict_name(d.result->verdict));
        text += d.expected ? ", baseline " + std::string(topoidx::verdict_name(*d.expected)) : ", not in baseline";
        text += "\n";
      }
      *description = dup(text);
    }
    return TOPOIDX_OK;
  });
}

void topoidx_report_free(topoidx_report* r) { delete r; }

}  // extern "C"
