#include "moore/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace moore {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace

MixedGraph read_mixed(std::istream& in) {
  std::optional<MixedGraph> g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty() || tok[0][0] == '#') continue;

    if (!g) {
      if (tok[0] != "mixed")
        throw ParseError(lineno, "expected header 'mixed <n>'");
      if (tok.size() != 2) throw ParseError(lineno, "header needs exactly one count");
      int n = parse_int(tok[1], lineno, "vertex count");
      if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
      g.emplace(n);
      continue;
    }

    if (tok[0] != "e" && tok[0] != "a")
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    if (tok.size() != 3)
      throw ParseError(lineno, "'" + tok[0] + "' line needs two vertex ids");
    int u = parse_int(tok[1], lineno, "vertex id");
    int v = parse_int(tok[2], lineno, "vertex id");
    try {
      if (tok[0] == "e")
        g->add_edge(u, v);
      else
        g->add_arc(u, v);
    } catch (const std::invalid_argument& err) {
      throw ParseError(lineno, err.what());
    }
  }
  if (!g) throw ParseError(lineno, "missing 'mixed <n>' header");
  return *std::move(g);
}

MixedGraph read_mixed_string(const std::string& text) {
  std::istringstream in(text);
  return read_mixed(in);
}

MixedGraph read_mixed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_mixed(in);
}

void write_mixed(std::ostream& os, const MixedGraph& g) {
  os << "mixed " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
  for (const auto& [u, v] : g.arcs()) os << "a " << u << " " << v << "\n";
}

std::string to_mixed_string(const MixedGraph& g) {
  std::ostringstream os;
  write_mixed(os, g);
  return os.str();
}

void write_dot(std::ostream& os, const MixedGraph& g) {
  os << "digraph mixed {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  for (const auto& [u, v] : g.edges())
    os << "  " << u << " -> " << v << " [dir=none];\n";
  os << "}\n";
}

std::string to_dot_string(const MixedGraph& g) {
  std::ostringstream os;
  write_dot(os, g);
  return os.str();
}

}  // namespace moore
