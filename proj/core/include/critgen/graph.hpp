#pragma once

#include "critgen/point.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace critgen {

/// Undirected simple graph on vertices 1..m. Immutable after construction;
/// the adjacency indicator is symmetric with zero diagonal.
class Graph {
 public:
  /// Edges as unordered pairs of 1-based vertices. Duplicates are collapsed,
  /// self-loops rejected, out-of-range indices rejected.
  Graph(int m, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return m_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(int i, int j) const;

  /// Normalized edge list: i < j, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Neighbour mask of 1-based vertex v (bit j-1 set iff {v,j} is an edge).
  /// Only available for m <= 64.
  std::uint64_t neighbor_mask(int v) const;

  bool operator==(const Graph& other) const = default;

  /// DIMACS edge format: "p edge m |E|" header, "e i j" lines, "c" comments.
  static Graph parse_dimacs(std::string_view text);
  /// {"m": int, "edges": [[i,j], ...]} with 1-based vertices.
  static Graph parse_json(std::string_view text);
  /// Dispatch on format name: "dimacs" or "json".
  static Graph parse(std::string_view text, std::string_view format);

  std::string to_dimacs() const;
  std::string to_json() const;

 private:
  int m_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> masks_;  // empty when m > 64
};

/// A CLIQUE decision instance: does `graph` contain k pairwise-adjacent vertices?
struct CliqueInstance {
  Graph graph;
  int k;

  CliqueInstance(Graph g, int k_);
  int m() const { return graph.vertex_count(); }
};

/// Element of {-1,+1}^m; +1 entries mark the encoded vertex subset.
using SignVector = std::vector<int>;

/// Exact search for a k-clique. Returns the lexicographically smallest
/// witness (1-based, sorted) or nullopt. Brute force with degree pruning;
/// intended for oracle use at small m, and rejects m > 64.
std::optional<std::vector<int>> has_k_clique(const CliqueInstance& instance);

/// Checks a candidate set directly: size k, valid vertices, pairwise adjacent.
bool is_k_clique(const Graph& graph, const std::vector<int>& vertices, int k);

/// G(m, 1/2) sample with all edges added inside a uniformly random k-subset.
/// Returns the graph and the sorted planted set; reproducible from seed.
std::pair<Graph, std::vector<int>> planted_clique(int m, int k, std::uint64_t seed);

/// Componentwise sign of the first m coordinates, with sign(0) = +1.
SignVector sign_decode(const Point& point, int m);

/// Support set {i | s_i = +1}, 1-based sorted.
std::vector<int> sign_to_support(const SignVector& s);

/// Inverse of sign_to_support for subsets of {1..m}.
SignVector indicator_to_sign(const std::vector<int>& support, int m);

}  // namespace critgen
