#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "topoidx/error.hpp"
#include "topoidx/graph.hpp"

namespace topoidx {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

std::uint64_t to_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!n) {
      if (tok.size() != 2 || tok[0] != "n") fail(line_no, "expected header 'n <vertex_count>'");
      n = to_uint(tok[1], line_no);
      if (*n > UINT32_MAX) fail(line_no, "vertex count too large");
      continue;
    }
    if (tok.size() != 2) fail(line_no, "expected 'u v'");
    auto u = to_uint(tok[0], line_no);
    auto v = to_uint(tok[1], line_no);
    if (u >= *n || v >= *n) {
      throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex out of range 0.." +
                                                   std::to_string(*n == 0 ? 0 : *n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) + ": self-loop at vertex " +
                                           std::to_string(u));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) fail(line_no, "missing header 'n <vertex_count>'");
  return Graph::build(*n, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace topoidx
