#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "d0l/chargraph.hpp"
#include "d0l/graph.hpp"

namespace d0l::mis {

/// Sorted, duplicate-free vertex indices into one graph.
using VertexSet = std::vector<VertexId>;

struct SolveOutcome {
  VertexSet set;
  bool exact = false;

  std::size_t size() const noexcept { return set.size(); }
};

bool is_independent(const Graph& g, const VertexSet& s);
bool is_independent(const CharacteristicGraph& g, const VertexSet& s);

inline constexpr std::size_t kBruteForceCap = 20;

/// Enumerates all 2^n subsets; ties go to the lexicographically smallest
/// index list. Throws InstanceTooLarge above `cap` vertices.
SolveOutcome mis_bruteforce(const Graph& g, std::size_t cap = kBruteForceCap);

struct ExactOptions {
  /// Branch nodes before BudgetExceeded; unlimited when empty.
  std::optional<std::uint64_t> node_budget;
};

/// Branch and bound: branch on a maximum-degree vertex (include it and drop
/// its closed neighbourhood first, then exclude it), prune with a greedy
/// clique cover bound. Ties resolve to the lowest vertex index.
SolveOutcome mis_exact(const Graph& g, ExactOptions options = {});

/// Picks one vertex per clique in (step, position) order, each non-adjacent
/// to every earlier pick. A complete pick is exactly a size-k independent
/// set; nullopt when none exists. The first set found is the
/// lexicographically smallest.
std::optional<VertexSet> find_k_is_structured(const CharacteristicGraph& g,
                                              ExactOptions options = {});

}  // namespace d0l::mis
