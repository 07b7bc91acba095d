#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace d0l {

using VertexId = std::size_t;

/// Simple undirected graph with both an adjacency bit matrix (constant-time
/// lookup, set algebra in the solvers) and neighbor lists.
class Graph {
 public:
  using Bitset = boost::dynamic_bitset<>;

  explicit Graph(std::size_t n = 0);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);

  /// Ignores duplicates. Self-loops are rejected with InvalidInput.
  void add_edge(VertexId u, VertexId v);

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t degree(VertexId v) const { return neighbors_[v].size(); }

  bool adjacent(VertexId u, VertexId v) const { return rows_[u].test(v); }
  const Bitset& row(VertexId v) const { return rows_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const { return neighbors_[v]; }

  /// Edges (u, v) with u < v, lexicographically ordered.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<Bitset> rows_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::size_t edges_ = 0;
};

}  // namespace d0l
