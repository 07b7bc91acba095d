#pragma once

// Shared test fixtures: instance corpora and brute-force reference checks
// written without the library's solver code.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "d0l/chargraph.hpp"
#include "d0l/generator.hpp"
#include "d0l/graph.hpp"
#include "d0l/word.hpp"

namespace testing {

inline d0l::WordSequence seq(std::initializer_list<const char*> words) {
  d0l::WordSequence s;
  for (const char* w : words) s.push_back(d0l::Word(w));
  return s;
}

inline std::vector<std::string> words_upto(std::size_t min_len, std::size_t max_len,
                                           const std::string& symbols = "ab") {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : symbols) next.push_back(w + c);
    layer = std::move(next);
  }
  return out;
}

// All (w_0, w_1) over {a, b} with lengths in the given ranges.
inline std::vector<d0l::WordSequence> exhaustive_pairs(std::size_t min0, std::size_t max0,
                                                       std::size_t min1, std::size_t max1) {
  std::vector<d0l::WordSequence> out;
  for (const auto& w0 : words_upto(min0, max0))
    for (const auto& w1 : words_upto(min1, max1)) out.push_back(d0l::WordSequence{w0, w1});
  return out;
}

// Seeded parameters for the round-trip corpus: alphabet <= 4, successors
// <= 3, steps 1..4, word cap 60.
inline d0l::GeneratorConfig corpus_config(std::uint64_t index) {
  std::mt19937_64 rng(0x5eed0000 + index);
  d0l::GeneratorConfig cfg;
  cfg.alphabet_size = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  cfg.max_successor_length = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  cfg.steps = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  cfg.word_length_cap = 60;
  return cfg;
}

inline d0l::GeneratedInstance corpus_instance(std::uint64_t index) {
  return d0l::gen_random_instance(corpus_config(index), 1000 + index);
}

// One random edit (substitute, insert or delete a symbol) applied to a
// random word after w_0.
inline d0l::WordSequence perturb(const d0l::WordSequence& theta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> words;
  for (const auto& w : theta) words.push_back(w.str());
  std::string symbols;
  for (const auto& w : words)
    for (char c : w)
      if (symbols.find(c) == std::string::npos) symbols += c;
  if (symbols.empty()) symbols = "a";
  auto pick_symbol = [&] {
    return symbols[std::uniform_int_distribution<std::size_t>(0, symbols.size() - 1)(rng)];
  };

  auto& w = words[std::uniform_int_distribution<std::size_t>(1, words.size() - 1)(rng)];
  const int op = w.empty() ? 1 : std::uniform_int_distribution<int>(0, 2)(rng);
  if (op == 1) {
    const auto at = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), pick_symbol());
  } else {
    const auto at = std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng);
    if (op == 0 && symbols.size() > 1) {
      char c = w[at];
      while (c == w[at]) c = pick_symbol();
      w[at] = c;
    } else {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(at));
    }
  }
  d0l::WordSequence out;
  for (auto& x : words) out.push_back(d0l::Word(x));
  return out;
}

inline d0l::Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  d0l::Graph g(n);
  std::bernoulli_distribution coin(density);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Adjacency as bitmasks, built from the pairwise definition.
inline std::vector<std::uint32_t> adjacency_masks(const d0l::Graph& g) {
  std::vector<std::uint32_t> rows(g.size(), 0);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (u != v && g.adjacent(u, v)) rows[u] |= std::uint32_t{1} << v;
  return rows;
}

inline bool independent_mask(const std::vector<std::uint32_t>& rows, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest; rest &= rest - 1)
    if (rows[static_cast<std::size_t>(std::countr_zero(rest))] & mask) return false;
  return true;
}

inline std::size_t brute_mis_size(const d0l::Graph& g) {
  const auto rows = adjacency_masks(g);
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.size()); ++mask)
    if (independent_mask(rows, mask))
      best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  return best;
}

// Independent sets of exactly k vertices, as bitmasks.
inline std::vector<std::uint32_t> size_k_independent_sets(const d0l::Graph& g, std::size_t k) {
  const auto rows = adjacency_masks(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.size()); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == k && independent_mask(rows, mask))
      out.push_back(mask);
  return out;
}

inline std::size_t induced_edges(const d0l::Graph& g, std::uint32_t mask) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges())
    if (((mask >> u) & 1U) && ((mask >> v) & 1U)) ++count;
  return count;
}

// x^T Q x + lambda (|x| - k)^2 from the graph directly: -|T| + 2|E(T)|
// plus the penalty.
inline double reference_cost(const d0l::Graph& g, std::uint32_t mask, double lambda,
                             std::size_t k) {
  const auto size = static_cast<double>(std::popcount(mask));
  const double d = size - static_cast<double>(k);
  return -size + 2.0 * static_cast<double>(induced_edges(g, mask)) + lambda * d * d;
}

}  // namespace testing
