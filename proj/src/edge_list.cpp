#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "spantree/errors.hpp"
#include "spantree/graph.hpp"

namespace spantree {
namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");

    long long a = to_int(toks[0], line_no);
    long long b = to_int(toks[1], line_no);
    if (n < 0) {
      if (a < 1 || a > 1000000) throw ParseError("vertex count must be in 1..1000000");
      if (b < 0) throw ParseError("edge count must be non-negative");
      n = a;
      m = b;
      continue;
    }
    if (a < 1 || b > n || a >= b)
      throw ParseError("line " + std::to_string(line_no) + ": edge must satisfy 1 <= u < v <= n");
    Edge e{static_cast<Vertex>(a), static_cast<Vertex>(b)};
    if (!seen.insert(e).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                       std::to_string(a) + " " + std::to_string(b));
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(edges.size()) + " were given");
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("expected a comma-separated list of integers, got '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

} // namespace spantree
