#include "d0l/chargraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string_view>
#include <unordered_map>

#include <fmt/format.h>
#include <json.hpp>

#include "d0l/errors.hpp"

namespace d0l {

std::vector<CGVertex> clique_vertices(const WordSequence& theta, std::size_t i, std::size_t j) {
  if (theta.size() < 2 || i >= theta.steps())
    throw IndexOutOfRange(fmt::format("step {} outside 0..m-1", i));
  const std::size_t len = theta[i].size();
  if (j < 1 || j > len) throw IndexOutOfRange(fmt::format("position {} outside 1..{}", j, len));

  const std::size_t limit = theta[i + 1].size() + 1;
  const bool first = j == 1;
  const bool last = j == len;

  std::vector<CGVertex> out;
  const std::size_t s_hi = first ? 1 : limit;
  for (std::size_t s = 1; s <= s_hi; ++s) {
    if (last) {
      out.push_back({i, j, s, limit});
    } else {
      for (std::size_t e = s; e <= limit; ++e) out.push_back({i, j, s, e});
    }
  }
  return out;
}

bool cross_edge(const WordSequence& theta, const CGVertex& v, const CGVertex& w) {
  const Word& succ_v = theta[v.step + 1];
  const Word& succ_w = theta[w.step + 1];
  if (theta[v.step].at(v.position) == theta[w.step].at(w.position) &&
      succ_v.slice(v.start, v.end) != succ_w.slice(w.start, w.end))
    return true;
  if (v.step == w.step) {
    if (w.position == v.position + 1 && v.end != w.start) return true;
    if (v.position == w.position + 1 && w.end != v.start) return true;
  }
  return false;
}

std::size_t target_k(const WordSequence& theta) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < theta.steps(); ++i) k += theta[i].size();
  return k;
}

CharacteristicGraph build(const WordSequence& theta) {
  if (theta.size() < 2) throw InvalidInput("the characteristic graph needs at least two words");
  for (std::size_t i = 0; i < theta.steps(); ++i)
    if (theta[i].empty() && !theta[i + 1].empty())
      throw DegenerateSequence(
          fmt::format("w_{} is empty but w_{} is not; no derivation exists", i, i + 1));

  CharacteristicGraph g;
  g.theta_ = theta;

  std::unordered_map<std::string_view, std::uint32_t> interned;
  auto intern = [&](std::string_view s) {
    auto [it, fresh] = interned.emplace(s, static_cast<std::uint32_t>(interned.size()));
    return it->second;
  };

  for (std::size_t i = 0; i < theta.steps(); ++i) {
    g.row_offset_.push_back(g.cliques_.size());
    const Word& w = g.theta_[i];
    const Word& next = g.theta_[i + 1];
    for (std::size_t j = 1; j <= w.size(); ++j) {
      CharacteristicGraph::Clique clique{{i, j}, g.vertices_.size(), 0};
      for (const auto& v : clique_vertices(g.theta_, i, j)) {
        g.vertices_.push_back(v);
        g.symbol_.push_back(w.at(j));
        g.content_.push_back(intern(next.slice_view(v.start, v.end)));
        g.clique_of_.push_back(g.cliques_.size());
      }
      clique.end = g.vertices_.size();
      g.cliques_.push_back(clique);
    }
  }
  return g;
}

std::size_t CharacteristicGraph::clique_index(CliqueId id) const {
  if (id.step >= row_offset_.size() || id.position < 1 || id.position > theta_[id.step].size())
    throw IndexOutOfRange(fmt::format("no clique G_{}_{}", id.step, id.position));
  return row_offset_[id.step] + id.position - 1;
}

VertexId CharacteristicGraph::index_of(const CGVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw IndexOutOfRange(
        fmt::format("({},{},{},{}) is not a vertex", v.step, v.position, v.start, v.end));
  return static_cast<VertexId>(it - vertices_.begin());
}

bool CharacteristicGraph::adjacent(VertexId u, VertexId v) const {
  if (u == v) return false;
  if (clique_of_[u] == clique_of_[v]) return true;
  if (symbol_[u] == symbol_[v] && content_[u] != content_[v]) return true;
  const CGVertex& a = vertices_[u];
  const CGVertex& b = vertices_[v];
  if (a.step != b.step) return false;
  if (b.position == a.position + 1) return a.end != b.start;
  if (a.position == b.position + 1) return b.end != a.start;
  return false;
}

Graph CharacteristicGraph::materialize(std::size_t vertex_cap) const {
  if (size() > vertex_cap)
    throw InstanceTooLarge(fmt::format(
        "characteristic graph has {} vertices, above the materialization cap of {}", size(),
        vertex_cap));
  Graph g(size());
  for (VertexId u = 0; u < size(); ++u)
    for (VertexId v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) g.add_edge(u, v);
  return g;
}

namespace {

std::size_t pairs(std::size_t n) { return n * (n - 1) / 2; }

// Cross pairs between distinct cliques of one symbol whose slices differ.
std::size_t condition1_pairs(const CharacteristicGraph& g, const std::vector<std::size_t>& group) {
  std::size_t total = 0;
  std::size_t squares = 0;
  std::unordered_map<std::uint32_t, std::size_t> content_total;
  std::unordered_map<std::uint32_t, std::size_t> content_squares;
  for (std::size_t c : group) {
    const auto& clique = g.cliques()[c];
    total += clique.size();
    squares += clique.size() * clique.size();
    std::unordered_map<std::uint32_t, std::size_t> local;
    for (VertexId v = clique.begin; v < clique.end; ++v) ++local[g.content(v)];
    for (auto [t, n] : local) {
      content_total[t] += n;
      content_squares[t] += n * n;
    }
  }
  std::size_t same = 0;
  for (auto [t, n] : content_total) same += (n * n - content_squares[t]) / 2;
  return (total * total - squares) / 2 - same;
}

}  // namespace

GraphStats stats(const CharacteristicGraph& g) {
  const WordSequence& theta = g.theta();
  GraphStats s;
  s.vertices = g.size();
  s.k = g.k();

  std::map<Symbol, std::size_t> freq;
  for (std::size_t i = 0; i < theta.steps(); ++i) {
    s.l = std::max(s.l, theta[i + 1].size());
    for (Symbol a : theta[i]) ++freq[a];
  }
  s.v = freq.size();
  for (auto [a, n] : freq) s.h = std::max(s.h, n);

  // Edges = within-clique pairs + |cond1 ∪ cond2| over cross pairs.
  std::size_t edges = 0;
  std::map<Symbol, std::vector<std::size_t>> by_symbol;
  for (std::size_t c = 0; c < g.k(); ++c) {
    const auto& clique = g.cliques()[c];
    edges += pairs(clique.size());
    by_symbol[g.symbol(clique.begin)].push_back(c);
  }
  for (const auto& [a, group] : by_symbol) edges += condition1_pairs(g, group);

  for (std::size_t c = 0; c + 1 < g.k(); ++c) {
    const auto& left = g.cliques()[c];
    const auto& right = g.cliques()[c + 1];
    if (left.id.step != right.id.step) continue;

    const std::size_t limit = theta[left.id.step + 1].size() + 1;
    std::vector<std::size_t> ends(limit + 1, 0), starts(limit + 1, 0);
    for (VertexId v = left.begin; v < left.end; ++v) ++ends[g.vertex(v).end];
    for (VertexId v = right.begin; v < right.end; ++v) ++starts[g.vertex(v).start];
    std::size_t matched = 0;
    for (std::size_t x = 1; x <= limit; ++x) matched += ends[x] * starts[x];
    const std::size_t misaligned = left.size() * right.size() - matched;
    edges += misaligned;

    if (g.symbol(left.begin) != g.symbol(right.begin)) continue;
    // Remove the misaligned pairs already counted under condition 1, i.e.
    // those whose slices differ: misaligned - (equal slices, misaligned).
    std::unordered_map<std::uint32_t, std::size_t> left_content;
    std::unordered_map<std::uint64_t, std::size_t> left_end_content;
    for (VertexId v = left.begin; v < left.end; ++v) {
      ++left_content[g.content(v)];
      ++left_end_content[(std::uint64_t{g.vertex(v).end} << 32) | g.content(v)];
    }
    std::size_t equal_all = 0;
    std::size_t equal_aligned = 0;
    for (VertexId v = right.begin; v < right.end; ++v) {
      if (auto it = left_content.find(g.content(v)); it != left_content.end())
        equal_all += it->second;
      if (auto it = left_end_content.find((std::uint64_t{g.vertex(v).start} << 32) | g.content(v));
          it != left_end_content.end())
        equal_aligned += it->second;
    }
    edges -= misaligned - (equal_all - equal_aligned);
  }
  s.edges = edges;
  return s;
}

std::string to_dot(const CharacteristicGraph& g, std::size_t vertex_cap) {
  const Graph explicit_graph = g.materialize(vertex_cap);
  std::string out = "graph G_theta {\n";
  for (const auto& clique : g.cliques()) {
    out += fmt::format("  subgraph cluster_{}_{} {{\n", clique.id.step, clique.id.position);
    out += fmt::format("    label=\"G_{}_{}\";\n", clique.id.step, clique.id.position);
    for (VertexId v = clique.begin; v < clique.end; ++v) {
      const auto& q = g.vertex(v);
      out += fmt::format("    v{} [label=\"({},{},{},{})\"];\n", v, q.step, q.position, q.start,
                         q.end);
    }
    out += "  }\n";
  }
  for (auto [u, v] : explicit_graph.edges()) out += fmt::format("  v{} -- v{};\n", u, v);
  out += "}\n";
  return out;
}

std::string to_json(const CharacteristicGraph& g, std::size_t vertex_cap) {
  const Graph explicit_graph = g.materialize(vertex_cap);
  nlohmann::ordered_json doc;
  doc["k"] = g.k();
  doc["steps"] = g.theta().steps();
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto& q = g.vertex(v);
    vertices.push_back({{"index", v},
                        {"i", q.step},
                        {"j", q.position},
                        {"start", q.start},
                        {"end", q.end}});
  }
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : explicit_graph.edges()) edges.push_back({u, v});
  return doc.dump(2) + "\n";
}

}  // namespace d0l
