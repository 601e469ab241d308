#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace medeig {

/// Malformed serialized input (graph6 and friends).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input outside the supported parameter range (size caps, missing field tables, ...).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as sorted neighbor lists, so iteration order is
/// deterministic and serialization is reproducible. Every construction path
/// funnels through a validating constructor that rejects loops, duplicate
/// edges and asymmetric adjacency.
class Graph {
 public:
  Graph() = default;  // empty graph on zero vertices

  /// Builds a graph from (possibly repeated, possibly reversed) edge pairs.
  /// Edges are deduplicated and symmetrized; loops are rejected.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Parses the standard graph6 encoding (1-byte and 4-byte headers, n < 258048).
  static Graph from_graph6(std::string_view text);

  /// Canonical graph6 bytes; inverse of from_graph6.
  std::string to_graph6() const;

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::vector<int>> adj);

  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Combinatorial counts of a graph. The average degree is kept exact as the
/// integer pair (2|E|, n) so hypotheses like "average degree at most d" are
/// decided by integer comparison, never by a float threshold.
struct DegreeSummary {
  int max_degree = 0;
  std::size_t edge_count = 0;
  long long triangle_count = 0;
  long long avg_degree_num = 0;  // 2|E|
  long long avg_degree_den = 1;  // n (1 for the zero-vertex graph)

  double average_degree() const {
    return static_cast<double>(avg_degree_num) / static_cast<double>(avg_degree_den);
  }
};

DegreeSummary degree_stats(const Graph& g);

/// Graph on order(a) + order(b) vertices; b's vertices are shifted by order(a).
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace medeig
