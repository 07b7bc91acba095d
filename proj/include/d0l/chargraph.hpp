#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "d0l/graph.hpp"
#include "d0l/word.hpp"

namespace d0l {

/// Candidate successor slice: position `position` of w_step rewrites to
/// w_{step+1}[start:end] (1-based, end exclusive).
struct CGVertex {
  std::size_t step = 0;
  std::size_t position = 0;
  std::size_t start = 0;
  std::size_t end = 0;

  friend auto operator<=>(const CGVertex&, const CGVertex&) = default;
};

struct CliqueId {
  std::size_t step = 0;
  std::size_t position = 0;

  friend auto operator<=>(const CliqueId&, const CliqueId&) = default;
};

struct GraphStats {
  std::size_t vertices = 0;  ///< n
  std::size_t edges = 0;
  std::size_t k = 0;  ///< clique count, sum of |w_i| for i < m
  std::size_t l = 0;  ///< max |w_{i+1}|
  std::size_t h = 0;  ///< highest symbol frequency over w_0..w_{m-1}
  std::size_t v = 0;  ///< distinct symbols over w_0..w_{m-1}

  /// n <= k * l^2. Can fail for l <= 3, where one clique may hold up to
  /// (l+1)(l+2)/2 > l^2 vertices.
  bool within_kl2_bound() const noexcept { return vertices <= k * l * l; }
  /// n <= k * (l+1)(l+2)/2, the exact largest clique size times k.
  bool within_clique_bound() const noexcept { return vertices <= k * (l + 1) * (l + 2) / 2; }
};

/// Vertices of G_{i,j}, in (start, end) order.
std::vector<CGVertex> clique_vertices(const WordSequence& theta, std::size_t i, std::size_t j);

/// Cross-clique edge predicate evaluated directly from the definition by
/// comparing slices. Symmetric in (v, w).
bool cross_edge(const WordSequence& theta, const CGVertex& v, const CGVertex& w);

/// Sum of |w_i| over i < m.
std::size_t target_k(const WordSequence& theta);

/// G_theta. Vertices are stored in lexicographic (step, position, start, end)
/// order, so each clique is a contiguous index range and cliques appear in
/// (step, position) order. Adjacency is answered by predicate using interned
/// slice contents; materialize() produces the explicit Graph.
class CharacteristicGraph {
 public:
  struct Clique {
    CliqueId id;
    std::size_t begin = 0;  ///< first vertex index
    std::size_t end = 0;    ///< one past the last vertex index
    std::size_t size() const noexcept { return end - begin; }
  };

  static constexpr std::size_t kDefaultMaterializeCap = 4096;

  const WordSequence& theta() const noexcept { return theta_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const CGVertex> vertices() const noexcept { return vertices_; }
  const CGVertex& vertex(VertexId v) const { return vertices_[v]; }

  std::size_t k() const noexcept { return cliques_.size(); }
  std::span<const Clique> cliques() const noexcept { return cliques_; }
  std::size_t clique_of(VertexId v) const { return clique_of_[v]; }
  std::size_t clique_index(CliqueId id) const;
  VertexId index_of(const CGVertex& v) const;  ///< throws IndexOutOfRange if absent

  /// Predecessor symbol w_i[j] of a vertex.
  Symbol symbol(VertexId v) const { return symbol_[v]; }
  /// Interned id of the slice w_{i+1}[start:end]; equal ids iff equal words.
  std::uint32_t content(VertexId v) const { return content_[v]; }

  bool adjacent(VertexId u, VertexId v) const;

  /// Throws InstanceTooLarge above vertex_cap vertices.
  Graph materialize(std::size_t vertex_cap = kDefaultMaterializeCap) const;

 private:
  friend CharacteristicGraph build(const WordSequence& theta);

  WordSequence theta_;
  std::vector<CGVertex> vertices_;
  std::vector<Symbol> symbol_;
  std::vector<std::uint32_t> content_;
  std::vector<std::size_t> clique_of_;
  std::vector<Clique> cliques_;
  std::vector<std::size_t> row_offset_;  ///< first clique of each step
};

/// Throws InvalidInput when theta has fewer than two words and
/// DegenerateSequence when some w_i is empty while w_{i+1} is not.
CharacteristicGraph build(const WordSequence& theta);

/// Edge count is computed by counting, without materializing the graph.
/// Both vertex bounds are reported, not enforced.
GraphStats stats(const CharacteristicGraph& g);

/// Undirected DOT with one cluster per clique. Byte-deterministic.
std::string to_dot(const CharacteristicGraph& g,
                   std::size_t vertex_cap = CharacteristicGraph::kDefaultMaterializeCap);

/// JSON dump: vertices with their quadruples, edge index pairs, k.
std::string to_json(const CharacteristicGraph& g,
                    std::size_t vertex_cap = CharacteristicGraph::kDefaultMaterializeCap);

}  // namespace d0l
