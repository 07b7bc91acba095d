#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d0l/chargraph.hpp"
#include "d0l/errors.hpp"
#include "d0l/mis.hpp"
#include "support/corpus.hpp"

using namespace d0l;
using namespace d0l::mis;
using testing::seq;

namespace {

VertexSet indices_of(const CharacteristicGraph& g, std::initializer_list<CGVertex> quads) {
  VertexSet out;
  for (const auto& q : quads) out.push_back(g.index_of(q));
  return out;
}

}  // namespace

TEST_CASE("is_independent") {
  const auto g = build(seq({"ab", "ba"}));
  CHECK(is_independent(g, indices_of(g, {{0, 1, 1, 2}, {0, 2, 2, 3}})));
  CHECK(is_independent(g, {}));
  CHECK(is_independent(Graph::complete(3), {}));
  CHECK_FALSE(is_independent(Graph::complete(3), {1, 2}));
  CHECK_FALSE(is_independent(Graph::complete(3), {1, 1}));
  CHECK_FALSE(is_independent(Graph::complete(3), {5}));
}

TEST_CASE("mis_bruteforce examples") {
  CHECK(mis_bruteforce(Graph::complete(3)).size() == 1);
  CHECK(mis_bruteforce(Graph::complete(3)).set == VertexSet{0});
  CHECK(mis_bruteforce(Graph(4)).size() == 4);
  CHECK(mis_bruteforce(Graph(4)).exact);

  const auto g = build(seq({"ab", "ba"}));
  const auto best = mis_bruteforce(g.materialize());
  CHECK(best.size() == 2);
  CHECK(is_independent(g, best.set));
  // Lowest lexicographic index set among the three size-2 sets.
  CHECK(best.set == indices_of(g, {{0, 1, 1, 1}, {0, 2, 1, 3}}));
  CHECK(testing::size_k_independent_sets(g.materialize(), 2).size() == 3);

  CHECK_THROWS_AS(mis_bruteforce(Graph(21)), InstanceTooLarge);
}

TEST_CASE("mis_exact examples") {
  CHECK(mis_exact(build(seq({"aa", "ab"})).materialize()).size() == 1);
  CHECK(mis_exact(Graph::path(5)).size() == 3);
  CHECK(mis_exact(Graph::path(5)).set == VertexSet{0, 2, 4});
  CHECK(mis_exact(Graph(0)).size() == 0);
  CHECK(mis_exact(Graph::complete(6)).set == VertexSet{0});
}

TEST_CASE("mis_exact matches brute force on random graphs") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 12);
    const double density = 0.1 + 0.8 * static_cast<double>(t % 7) / 6.0;
    const Graph g = testing::random_graph(n, density, rng);
    const auto exact = mis_exact(g);
    CHECK(exact.exact);
    CHECK(is_independent(g, exact.set));
    CHECK(exact.size() == testing::brute_mis_size(g));
    CHECK(mis_bruteforce(g).size() == exact.size());
  }
}

TEST_CASE("mis_exact honours a node budget") {
  std::mt19937_64 rng(5);
  const Graph g = testing::random_graph(40, 0.2, rng);
  CHECK_THROWS_AS(mis_exact(g, ExactOptions{10}), BudgetExceeded);
}

TEST_CASE("find_k_is_structured examples") {
  const auto g = build(seq({"ab", "ba"}));
  const auto found = find_k_is_structured(g);
  REQUIRE(found);
  REQUIRE(found->size() == 2);
  CHECK(is_independent(g, *found));
  CHECK(g.vertex((*found)[0]).end == g.vertex((*found)[1]).start);

  CHECK_FALSE(find_k_is_structured(build(seq({"aa", "ab"}))));

  const auto single = build(seq({"a", "a"}));
  CHECK(find_k_is_structured(single) == std::optional<VertexSet>(VertexSet{0}));
  CHECK(find_k_is_structured(build(seq({"", ""}))) == std::optional<VertexSet>(VertexSet{}));
}

TEST_CASE("structured and generic solvers agree on feasibility") {
  std::vector<WordSequence> corpus = testing::exhaustive_pairs(1, 3, 0, 3);
  for (std::uint64_t i = 0; i < 80; ++i) {
    corpus.push_back(testing::corpus_instance(i).trace);
    corpus.push_back(testing::perturb(testing::corpus_instance(i).trace, i));
  }
  std::size_t compared = 0;
  for (const auto& theta : corpus) {
    CAPTURE(theta);
    bool degenerate = false;
    for (std::size_t i = 0; i < theta.steps(); ++i)
      degenerate |= theta[i].empty() && !theta[i + 1].empty();
    if (degenerate) continue;
    const auto g = build(theta);
    if (g.size() > 400) continue;
    const auto structured = find_k_is_structured(g);
    const auto generic = mis_exact(g.materialize(400));
    CHECK(generic.size() <= g.k());
    CHECK(is_independent(g, generic.set));
    CHECK(structured.has_value() == (generic.size() == g.k()));
    if (structured) {
      CHECK(structured->size() == g.k());
      CHECK(is_independent(g, *structured));
    }
    ++compared;
  }
  CHECK(compared > 200);
}
