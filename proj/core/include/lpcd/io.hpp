#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "lpcd/graph.hpp"

namespace lpcd {

/// Malformed graph or assignment input. line() is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Reads a MatrixMarket coordinate file (pattern, real or integer; general or
 * symmetric). Indices are shifted to 0-based and the vertex count is
 * max(rows, cols). Symmetric storage is expanded to both directions, pattern
 * entries get weight 1, repeated entries are summed. No preprocessing.
 */
Graph load_matrix_market(std::istream& in);

/// Reads `u v [w]` lines with 0-based ids; `#` lines and blank lines skipped.
Graph load_edge_list(std::istream& in);

/// Dispatches on extension: `.mtx` is MatrixMarket, anything else edge list.
Graph load_graph(const std::filesystem::path& path);

void write_assignment_tsv(std::ostream& out, const CommunityAssignment& a);

/**
 * Reads `vertex<TAB>community` lines for a graph of vertex_count vertices.
 * Community ids may be arbitrary non-negative integers; they are compacted to
 * dense ids in order of first appearance. A vertex that is missing or listed
 * twice raises ParseError whose message names it.
 */
CommunityAssignment read_assignment_tsv(std::istream& in,
                                        std::size_t vertex_count);

}  // namespace lpcd
