#include "polyskel/text_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace polyskel {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a positive integer, got '" + token + "'");
  }
  if (pos != token.size() || token.front() == '-' || token.front() == '+') {
    throw ParseError(line, "expected a positive integer, got '" + token + "'");
  }
  return static_cast<std::size_t>(value);
}

struct Header {
  std::size_t size;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> pairs;  // 0-based, line
};

Header parse_pairs(std::istream& in, const std::string& keyword, std::size_t min_size) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty input, expected '" + keyword + " <size>'");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != keyword) {
    throw ParseError(head.number, "expected '" + keyword + " <size>'");
  }
  Header out{parse_count(head.tokens[1], head.number), {}};
  if (out.size < min_size || out.size > Subset::kMaxElements) {
    throw ParseError(head.number, keyword + " size must be in [" + std::to_string(min_size) +
                                      ", 64]");
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected two indices 'i j'");
    const std::size_t i = parse_count(line.tokens[0], line.number);
    const std::size_t j = parse_count(line.tokens[1], line.number);
    if (i == 0 || j == 0 || i > out.size || j > out.size) {
      throw ParseError(line.number, "index out of range 1.." + std::to_string(out.size));
    }
    if (i == j) throw ParseError(line.number, "loop on " + std::to_string(i));
    out.pairs.push_back({{i - 1, j - 1}, line.number});
  }
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

Poset parse_poset(std::istream& in) {
  const Header h = parse_pairs(in, "poset", 1);
  // Incremental closure so a cycle is reported on the line that closes it.
  std::vector<Subset> below(h.size);
  std::set<Cover> seen;
  std::vector<Cover> covers;
  for (const auto& [pair, line] : h.pairs) {
    const auto [lo, hi] = pair;
    if (!seen.insert(pair).second) {
      throw ParseError(line, "duplicate cover " + std::to_string(lo + 1) + " " +
                                 std::to_string(hi + 1));
    }
    if (below[lo].contains(hi)) {
      throw ParseError(line, "cover " + std::to_string(lo + 1) + " " + std::to_string(hi + 1) +
                                 " creates a cycle");
    }
    const Subset lower = below[lo].with(lo);
    for (std::size_t k = 0; k < h.size; ++k) {
      if (k == hi || below[k].contains(hi)) below[k] = below[k] | lower;
    }
    covers.push_back(pair);
  }
  return Poset::from_covers(h.size, covers);
}

SimpleGraph parse_graph(std::istream& in) {
  const Header h = parse_pairs(in, "graph", 0);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (const auto& [pair, line] : h.pairs) {
    const Edge e{std::min(pair.first, pair.second), std::max(pair.first, pair.second)};
    if (!seen.insert(e).second) {
      throw ParseError(line, "duplicate edge " + std::to_string(pair.first + 1) + " " +
                                 std::to_string(pair.second + 1));
    }
    edges.push_back(e);
  }
  return SimpleGraph::from_edges(h.size, edges);
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Poset read_poset_file(const std::string& path) {
  auto in = open(path);
  return parse_poset(in);
}

SimpleGraph read_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in);
}

std::string format_poset(const Poset& poset) {
  std::string out = "poset " + std::to_string(poset.size()) + "\n";
  for (const auto& [lo, hi] : poset.covers()) {
    out += std::to_string(lo + 1) + " " + std::to_string(hi + 1) + "\n";
  }
  return out;
}

std::string format_graph(const SimpleGraph& g) {
  std::string out = "graph " + std::to_string(g.size()) + "\n";
  for (const auto& [i, j] : g.edges()) out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

}  // namespace polyskel
