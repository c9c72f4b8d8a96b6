#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "jointspec/graph.hpp"

namespace jointspec::cli {

enum class GraphFormat { edge_list, dense };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Lines "i j" or "i j w" with 1-based vertices; '#' starts a comment; repeated
/// edges are summed. The vertex count is the largest index seen.
WeightedGraph parse_edge_list(std::istream& in, const std::string& source = "<input>");

/// First line n, then n rows of n numbers. Asymmetry beyond 1e-12 is an error.
WeightedGraph parse_dense(std::istream& in, const std::string& source = "<input>");

WeightedGraph parse_graph(std::istream& in, GraphFormat format, const std::string& source = "<input>");
WeightedGraph load_graph(const std::string& path, GraphFormat format);

GraphFormat parse_format(const std::string& name);

/// Dense-format text that parse_dense reads back to an equal graph.
std::string dump_dense(const WeightedGraph& g);
/// Edge-list text (upper triangle, with weights) that parse_edge_list reads back.
std::string dump_edge_list(const WeightedGraph& g);

}  // namespace jointspec::cli
