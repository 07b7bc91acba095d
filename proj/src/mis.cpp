#include "d0l/mis.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

#include "d0l/errors.hpp"

namespace d0l::mis {

namespace {

// Out-of-range or repeated members make the set invalid, not independent.
template <typename G>
bool independent_set(const G& g, const VertexSet& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] >= g.size()) return false;
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] == s[b] || (s[b] < g.size() && g.adjacent(s[a], s[b]))) return false;
  }
  return true;
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) { return independent_set(g, s); }

bool is_independent(const CharacteristicGraph& g, const VertexSet& s) {
  return independent_set(g, s);
}

SolveOutcome mis_bruteforce(const Graph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap || n > 30)
    throw InstanceTooLarge(fmt::format("brute-force MIS limited to {} vertices, got {}", cap, n));

  std::vector<std::uint32_t> rows(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.neighbors(v)) rows[v] |= std::uint32_t{1} << u;

  std::uint32_t best = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < total; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    bool independent = true;
    for (std::uint32_t rest = mask; rest != 0 && independent; rest &= rest - 1)
      independent = (rows[std::countr_zero(rest)] & mask) == 0;
    if (!independent) continue;
    const int size = std::popcount(mask);
    const int best_size = std::popcount(best);
    if (size > best_size) {
      best = mask;
    } else if (size == best_size) {
      // Lexicographically smaller sorted index list owns the lowest differing bit.
      const std::uint32_t diff = mask ^ best;
      if (diff != 0 && (mask & (diff & (~diff + 1))) != 0) best = mask;
    }
  }

  SolveOutcome out{{}, true};
  for (std::uint32_t rest = best; rest != 0; rest &= rest - 1)
    out.set.push_back(static_cast<VertexId>(std::countr_zero(rest)));
  return out;
}

namespace {

class BranchAndBound {
 public:
  using Bitset = Graph::Bitset;

  BranchAndBound(const Graph& g, ExactOptions options) : g_(g), options_(options) {}

  VertexSet solve() {
    Bitset all(g_.size());
    all.set();
    search(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(Bitset candidates) {
    if (options_.node_budget && ++nodes_ > *options_.node_budget)
      throw BudgetExceeded(fmt::format("exact MIS exceeded {} branch nodes", *options_.node_budget));

    if (candidates.none()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + clique_cover_bound(candidates) <= best_.size()) return;

    VertexId pivot = Bitset::npos;
    std::size_t pivot_degree = 0;
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
      const std::size_t d = (g_.row(v) & candidates).count();
      if (pivot == Bitset::npos || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }

    if (pivot_degree == 0) {
      const std::size_t before = current_.size();
      for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v))
        current_.push_back(v);
      if (current_.size() > best_.size()) best_ = current_;
      current_.resize(before);
      return;
    }

    current_.push_back(pivot);
    Bitset with = candidates - g_.row(pivot);
    with.reset(pivot);
    search(std::move(with));
    current_.pop_back();

    candidates.reset(pivot);
    search(std::move(candidates));
  }

  // Any independent set takes at most one vertex per clique of a cover.
  std::size_t clique_cover_bound(const Bitset& candidates) const {
    std::vector<Bitset> extendable;
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
      bool placed = false;
      for (auto& common : extendable) {
        if (common.test(v)) {
          common &= g_.row(v);
          placed = true;
          break;
        }
      }
      if (!placed) extendable.push_back(g_.row(v) & candidates);
    }
    return extendable.size();
  }

  const Graph& g_;
  ExactOptions options_;
  std::uint64_t nodes_ = 0;
  VertexSet current_;
  VertexSet best_;
};

}  // namespace

SolveOutcome mis_exact(const Graph& g, ExactOptions options) {
  return {BranchAndBound(g, options).solve(), true};
}

std::optional<VertexSet> find_k_is_structured(const CharacteristicGraph& g,
                                              ExactOptions options) {
  const std::size_t k = g.k();
  const auto cliques = g.cliques();
  VertexSet picks;
  picks.reserve(k);
  // cursor[c]: next vertex of clique c to try.
  std::vector<VertexId> cursor(k);
  if (k == 0) return picks;
  cursor[0] = cliques[0].begin;

  std::uint64_t nodes = 0;
  std::size_t c = 0;
  for (;;) {
    if (options.node_budget && ++nodes > *options.node_budget)
      throw BudgetExceeded(
          fmt::format("structured search exceeded {} nodes", *options.node_budget));

    bool advanced = false;
    while (cursor[c] < cliques[c].end) {
      const VertexId v = cursor[c]++;
      // The previous pick is checked first: alignment with the left
      // neighbour rejects most candidates.
      if (!picks.empty() && g.adjacent(picks.back(), v)) continue;
      bool ok = true;
      for (std::size_t t = 0; t + 1 < picks.size() && ok; ++t) ok = !g.adjacent(picks[t], v);
      if (!ok) continue;
      picks.push_back(v);
      advanced = true;
      break;
    }

    if (advanced) {
      if (picks.size() == k) return picks;
      ++c;
      cursor[c] = cliques[c].begin;
      continue;
    }
    if (c == 0) return std::nullopt;
    --c;
    picks.pop_back();
  }
}

}  // namespace d0l::mis
