#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>

#include "polyskel/graph.hpp"
#include "polyskel/poset.hpp"

namespace polyskel {

// Input error with the 1-based line it was detected on (0 if not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// "poset <d>" then one "i j" per line meaning p_i is covered by p_j (1-indexed).
// '#' starts a comment. Duplicates, loops and cycles are rejected.
Poset parse_poset(std::istream& in);
Poset parse_poset(const std::string& text);
Poset read_poset_file(const std::string& path);

// "graph <n>" then one "i j" per edge.
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph(const std::string& text);
SimpleGraph read_graph_file(const std::string& path);

std::string format_poset(const Poset& poset);
std::string format_graph(const SimpleGraph& g);

}  // namespace polyskel
