#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include <json.hpp>

#include "d0l/chargraph.hpp"
#include "d0l/errors.hpp"
#include "d0l/qubo.hpp"
#include "support/corpus.hpp"

using namespace d0l;
using namespace d0l::qubo;
using testing::seq;

namespace {

// Strings list x_0 first.
BitVector bits(const char* s) {
  BitVector out;
  for (const char* c = s; *c; ++c) out.push_back(*c == '1' ? 1 : 0);
  return out;
}

}  // namespace

TEST_CASE("build_qubo examples") {
  const auto k3 = build_qubo(Graph::complete(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? -1 : 1));

  const auto e2 = build_qubo(Graph(2));
  CHECK(e2(0, 0) == -1);
  CHECK(e2(1, 1) == -1);
  CHECK(e2(0, 1) == 0);
  CHECK(e2(1, 0) == 0);

  const auto g = build(seq({"ab", "ba"})).materialize();
  const auto q = build_qubo(g);
  int ones = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(q(i, j) == q(j, i));
      if (i != j) {
        ones += q(i, j);
        CHECK(q(i, j) == (g.adjacent(i, j) ? 1 : 0));
      }
    }
  CHECK(ones == 24);
}

TEST_CASE("qubo_value examples") {
  const auto k3 = build_qubo(Graph::complete(3));
  CHECK(qubo_value(k3, bits("100")) == -1);
  CHECK(qubo_value(k3, bits("110")) == 0);
  CHECK(qubo_value(k3, bits("000")) == 0);
  CHECK_THROWS_AS(qubo_value(k3, bits("10")), DimensionMismatch);
}

TEST_CASE("penalized_cost examples") {
  const auto k3 = build_qubo(Graph::complete(3));
  const PenaltyConfig cfg{2.0, 1};
  CHECK(penalized_cost(k3, cfg, bits("100")) == -1.0);
  CHECK(penalized_cost(k3, cfg, bits("000")) == 2.0);
  CHECK(penalized_cost(k3, cfg, bits("111")) == 11.0);
  CHECK_THROWS_AS(penalized_cost(k3, cfg, bits("1111")), DimensionMismatch);
}

TEST_CASE("bit order: bit i of an index is vertex i") {
  CHECK(bits_from_index(1, 3) == bits("100"));
  CHECK(bits_from_index(4, 3) == bits("001"));
  CHECK(index_from_bits(bits("011")) == 6);
}

TEST_CASE("brute_min examples") {
  const auto k3 = build_qubo(Graph::complete(3));
  const auto m = brute_min(k3, {2.0, 1});
  CHECK(m.cost == -1.0);
  CHECK(index_from_bits(m.bits) == 1);

  const auto g = build(seq({"ab", "ba"})).materialize();
  const auto m2 = brute_min(build_qubo(g), {2.0, 2});
  CHECK(m2.cost == -2.0);
  const auto mask = static_cast<std::uint32_t>(index_from_bits(m2.bits));
  CHECK(std::popcount(mask) == 2);
  CHECK(testing::induced_edges(g, mask) == 0);

  const auto g3 = build(seq({"aa", "ab"})).materialize();
  CHECK(brute_min(build_qubo(g3), {2.0, 2}).cost > -2.0);

  CHECK_THROWS_AS(brute_min(QuboMatrix(21), {2.0, 1}), InstanceTooLarge);
}

TEST_CASE("x^T Q x = -|T| + 2|E(T)| for every subset") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 10);
    const Graph g = testing::random_graph(n, 0.4, rng);
    const auto q = build_qubo(g);
    const auto all = penalized_cost_all(q, {0.0, 0});
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      const auto x = bits_from_index(mask, n);
      const long long expected = -std::popcount(mask) + 2 * static_cast<long long>(testing::induced_edges(g, mask));
      CHECK(qubo_value(q, x) == expected);
      CHECK(all[mask] == static_cast<double>(expected));
    }
  }
}

TEST_CASE("penalty adds lambda (|x| - k)^2") {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 8);
    const Graph g = testing::random_graph(n, 0.5, rng);
    const auto q = build_qubo(g);
    const PenaltyConfig cfg{0.5 + t * 0.25, static_cast<std::size_t>(t) % n};
    const auto all = penalized_cost_all(q, cfg);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      const auto x = bits_from_index(mask, n);
      const double diff = penalized_cost(q, cfg, x) - static_cast<double>(qubo_value(q, x));
      const double d = std::popcount(mask) - static_cast<double>(cfg.k);
      CHECK(diff == doctest::Approx(cfg.lambda * d * d).epsilon(1e-12));
      CHECK(diff >= 0.0);
      CHECK(all[mask] == doctest::Approx(testing::reference_cost(g, mask, cfg.lambda, cfg.k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("unpenalized minimum is a maximum independent set") {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 12);
    const Graph g = testing::random_graph(n, 0.35, rng);
    const auto m = brute_min(build_qubo(g), {0.0, 0});
    const auto mask = static_cast<std::uint32_t>(index_from_bits(m.bits));
    CHECK(m.cost == -static_cast<double>(testing::brute_mis_size(g)));
    CHECK(testing::induced_edges(g, mask) == 0);
  }
}

TEST_CASE("JSON export") {
  const auto doc = nlohmann::json::parse(to_json(build_qubo(Graph::complete(2)), {2.0, 1}));
  CHECK(doc["dimension"] == 2);
  CHECK(doc["lambda"] == 2.0);
  CHECK(doc["k"] == 1);
  CHECK(doc["rows"] == nlohmann::json::parse("[[-1,1],[1,-1]]"));
}
