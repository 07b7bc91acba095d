#include "d0l/generator.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include <fmt/format.h>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

// Number of words of length <= max_len over `a` symbols, or 0 on overflow.
std::uint64_t word_count(std::uint64_t a, std::size_t max_len) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (total > std::numeric_limits<std::uint64_t>::max() - power) return 0;
    total += power;
    if (len < max_len) {
      if (power > std::numeric_limits<std::uint64_t>::max() / a) return 0;
      power *= a;
    }
  }
  return total;
}

// Maps an index in [0, word_count) to a word: all length-0 words first,
// then length 1 in base-a order, and so on.
std::string word_at(std::uint64_t index, std::uint64_t a) {
  std::uint64_t power = 1;
  std::size_t len = 0;
  while (index >= power) {
    index -= power;
    power *= a;
    ++len;
  }
  std::string out(len, 'a');
  for (std::size_t t = len; t-- > 0;) {
    out[t] = static_cast<char>('a' + index % a);
    index /= a;
  }
  return out;
}

}  // namespace

GeneratedInstance gen_random_instance(const GeneratorConfig& config, std::uint64_t seed) {
  if (config.alphabet_size < 1 || config.alphabet_size > 26)
    throw InvalidInput("alphabet size must be in 1..26");
  if (config.steps < 1) throw InvalidInput("steps must be at least 1");
  if (config.max_axiom_length < 1 || config.word_length_cap < 1)
    throw InvalidInput("axiom length and word cap must be at least 1");

  const std::uint64_t a = config.alphabet_size;
  const std::uint64_t successors = word_count(a, config.max_successor_length);
  if (successors == 0) throw InvalidInput("successor space too large to sample uniformly");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_successor(0, successors - 1);
  std::uniform_int_distribution<std::size_t> pick_axiom_length(
      1, std::min(config.max_axiom_length, config.word_length_cap));
  std::uniform_int_distribution<int> pick_symbol(0, static_cast<int>(a) - 1);

  for (std::size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
    D0LSystem::ProductionMap productions;
    for (std::uint64_t c = 0; c < a; ++c)
      productions.emplace(static_cast<Symbol>('a' + c), Word(word_at(pick_successor(rng), a)));
    std::string axiom(pick_axiom_length(rng), 'a');
    for (auto& ch : axiom) ch = static_cast<char>('a' + pick_symbol(rng));

    D0LSystem sys(Word(axiom), std::move(productions));
    WordSequence trace{sys.axiom()};
    bool ok = true;
    for (std::size_t i = 0; i < config.steps && ok; ++i) {
      if (trace.back().empty()) {
        ok = false;
        break;
      }
      // Bound the successor length before materializing it.
      std::size_t next_len = 0;
      for (Symbol s : trace.back()) next_len += sys.successor(s)->size();
      if (next_len > config.word_length_cap) {
        ok = false;
        break;
      }
      trace.push_back(derive_step(sys, trace.back()));
    }
    if (ok) return {std::move(sys), std::move(trace)};
  }
  throw GenerationFailed(
      fmt::format("no acceptable trace after {} attempts", config.max_attempts));
}

}  // namespace d0l
