#include "d0l/graph.hpp"

#include "d0l/errors.hpp"

namespace d0l {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)), neighbors_(n) {}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u >= size() || v >= size()) throw IndexOutOfRange("edge endpoint outside the graph");
  if (u == v) throw InvalidInput("self-loops are not allowed");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  neighbors_[u].push_back(v);
  neighbors_[v].push_back(u);
  ++edges_;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edges_);
  for (VertexId u = 0; u < size(); ++u)
    for (auto v = rows_[u].find_next(u); v != Bitset::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

}  // namespace d0l
