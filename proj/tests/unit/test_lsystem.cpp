#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "d0l/errors.hpp"
#include "d0l/generator.hpp"
#include "d0l/lsystem.hpp"
#include "d0l/oracle.hpp"
#include "d0l/text_io.hpp"
#include "support/corpus.hpp"

using namespace d0l;
using testing::seq;

namespace {

D0LSystem system_of(const char* axiom, std::map<char, const char*> rules) {
  D0LSystem::ProductionMap p;
  for (auto [a, x] : rules) p.emplace(a, Word(x));
  return D0LSystem(Word(axiom), std::move(p));
}

// Exhaustive reference: does any total map over the symbols of w_0..w_{m-1}
// with successors of length <= max_len reproduce theta?
bool any_map_fits(const WordSequence& theta, std::size_t max_len) {
  std::string symbols;
  for (std::size_t i = 0; i < theta.steps(); ++i)
    for (char c : theta[i].str())
      if (symbols.find(c) == std::string::npos) symbols += c;
  const auto candidates = testing::words_upto(0, max_len);
  std::vector<std::size_t> choice(symbols.size(), 0);
  while (true) {
    D0LSystem::ProductionMap p;
    for (std::size_t s = 0; s < symbols.size(); ++s) p.emplace(symbols[s], Word(candidates[choice[s]]));
    if (is_compatible(D0LSystem(theta[0], p), theta)) return true;
    std::size_t s = 0;
    while (s < choice.size() && ++choice[s] == candidates.size()) choice[s++] = 0;
    if (s == choice.size()) return false;
  }
}

}  // namespace

TEST_CASE("slice follows the 1-based end-exclusive convention") {
  CHECK(slice(Word("abc"), 1, 3) == Word("ab"));
  CHECK(slice(Word("abc"), 2, 2) == Word(""));
  CHECK(slice(Word("abc"), 2, 4) == Word("bc"));
  CHECK_THROWS_AS(slice(Word("abc"), 0, 2), IndexOutOfRange);
  CHECK_THROWS_AS(slice(Word("abc"), 3, 2), IndexOutOfRange);
  CHECK_THROWS_AS(slice(Word("abc"), 2, 5), IndexOutOfRange);
}

TEST_CASE("slice length and full-range identity") {
  for (const auto& s : testing::words_upto(0, 4, "abc")) {
    const Word w(s);
    CHECK(w.slice(1, w.size() + 1) == w);
    for (std::size_t i = 1; i <= w.size() + 1; ++i)
      for (std::size_t j = i; j <= w.size() + 1; ++j) CHECK(w.slice(i, j).size() == j - i);
  }
}

TEST_CASE("derive_step rewrites every symbol in parallel") {
  CHECK(derive_step(system_of("a", {{'a', "ab"}, {'b', "ab"}}), Word("ab")) == Word("abab"));
  CHECK(derive_step(system_of("a", {{'a', ""}}), Word("aaa")) == Word(""));
  try {
    derive_step(system_of("a", {{'a', "b"}}), Word("ba"));
    FAIL("expected MissingProduction");
  } catch (const MissingProduction& e) {
    CHECK(e.symbol() == 'b');
  }
}

TEST_CASE("derive_trace") {
  CHECK(derive_trace(system_of("a", {{'a', "ab"}, {'b', "ab"}}), 2) == seq({"a", "ab", "abab"}));
  CHECK(derive_trace(system_of("a", {{'a', "a"}}), 3) == seq({"a", "a", "a", "a"}));
  CHECK(derive_trace(system_of("a", {{'a', ""}}), 2) == seq({"a", "", ""}));
  CHECK_THROWS_AS(derive_trace(system_of("a", {{'a', "a"}}), 0), InvalidInput);
  CHECK_THROWS_AS(derive_trace(system_of("a", {{'a', "b"}}), 2), MissingProduction);
}

TEST_CASE("derive records the production used at every position") {
  const auto d = derive(system_of("a", {{'a', "ab"}, {'b', "b"}}), 2);
  CHECK(d.trace == seq({"a", "ab", "abb"}));
  for (std::size_t i = 0; i + 1 < d.trace.size(); ++i) {
    std::string joined;
    for (std::size_t j = 1; j <= d.trace[i].size(); ++j) {
      const auto& prod = d.choices.at({i, j});
      CHECK(prod.predecessor == d.trace[i].at(j));
      joined += prod.successor.str();
    }
    CHECK(joined == d.trace[i + 1].str());
  }
}

TEST_CASE("is_compatible") {
  CHECK(is_compatible(system_of("a", {{'a', "ab"}, {'b', "ab"}}), seq({"a", "ab", "abab"})));
  CHECK_FALSE(is_compatible(system_of("a", {{'a', "a"}}), seq({"a", "b"})));
  CHECK_FALSE(is_compatible(system_of("a", {{'a', "b"}}), seq({"a", "b", "?"})));
  CHECK_FALSE(is_compatible(system_of("b", {{'b', "b"}}), seq({"a", "a"})));
  CHECK_FALSE(is_compatible(system_of("a", {{'a', "a"}}), seq({"a"})));
}

TEST_CASE("alphabet must cover every symbol used") {
  CHECK(system_of("a", {{'a', "bc"}}).alphabet() == std::set<Symbol>{'a', 'b', 'c'});
  CHECK_THROWS_AS(D0LSystem({'a'}, Word("a"), {{'a', Word("b")}}), InvalidInput);
}

TEST_CASE("oracle_infer examples") {
  const auto s = oracle_infer(seq({"a", "ab", "abab"}));
  REQUIRE(s);
  CHECK(*s->successor('a') == Word("ab"));
  CHECK(*s->successor('b') == Word("ab"));
  CHECK_FALSE(oracle_infer(seq({"aa", "ab"})));
  const auto id = oracle_infer(seq({"a", "a"}));
  REQUIRE(id);
  CHECK(id->productions().size() == 1);
  CHECK(*id->successor('a') == Word("a"));
  CHECK_THROWS_AS(oracle_infer(seq({"a"})), InvalidInput);
}

TEST_CASE("oracle budget is enforced") {
  CHECK_THROWS_AS(oracle_infer(seq({"ab", "ba"}), OracleLimits{2}),
                  InstanceTooLarge);
}

TEST_CASE("oracle verdict matches exhaustive maps on small two-symbol families") {
  for (const auto& theta : testing::exhaustive_pairs(0, 3, 0, 3)) {
    const auto found = oracle_infer(theta);
    CHECK(found.has_value() == any_map_fits(theta, 3));
    if (found) CHECK(is_compatible(*found, theta));
  }
  for (const auto& w0 : testing::words_upto(1, 2))
    for (const auto& w1 : testing::words_upto(0, 2))
      for (const auto& w2 : testing::words_upto(0, 3)) {
        const WordSequence theta{w0, w1, w2};
        CHECK(oracle_infer(theta).has_value() == any_map_fits(theta, 3));
      }
}

TEST_CASE("oracle_enumerate lists distinct compatible systems") {
  const auto all = oracle_enumerate(seq({"ab", "ba"}), 100);
  CHECK(all.size() == 3);
  for (const auto& s : all) CHECK(is_compatible(s, seq({"ab", "ba"})));
  CHECK(oracle_enumerate(seq({"ab", "ba"}), 2).size() == 2);
  CHECK(oracle_enumerate(seq({"aa", "ab"}), 100).empty());
}

TEST_CASE("generator produces compatible, deterministic instances") {
  GeneratorConfig tiny;
  tiny.alphabet_size = 1;
  tiny.max_successor_length = 1;
  tiny.steps = 1;
  tiny.word_length_cap = 10;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_random_instance(tiny, seed);
    CHECK(inst.trace.size() == 2);
    const Word& succ = *inst.system.successor('a');
    CHECK((succ == Word("") || succ == Word("a")));
    CHECK(is_compatible(inst.system, inst.trace));
  }

  GeneratorConfig cfg;
  cfg.alphabet_size = 2;
  cfg.max_successor_length = 3;
  cfg.steps = 3;
  cfg.word_length_cap = 60;
  const auto a = gen_random_instance(cfg, 7);
  const auto b = gen_random_instance(cfg, 7);
  CHECK(is_compatible(a.system, a.trace));
  CHECK(a.system == b.system);
  CHECK(a.trace == b.trace);
}

TEST_CASE("generated traces respect the cap and never collapse early") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto inst = testing::corpus_instance(i);
    CHECK(is_compatible(inst.system, inst.trace));
    for (std::size_t t = 0; t < inst.trace.size(); ++t) {
      CHECK(inst.trace[t].size() <= 60);
      if (t < inst.trace.steps()) CHECK_FALSE(inst.trace[t].empty());
    }
  }
}

TEST_CASE("generator gives up when every draw is rejected") {
  GeneratorConfig cfg;
  cfg.alphabet_size = 1;
  cfg.max_successor_length = 0;
  cfg.steps = 2;
  cfg.max_attempts = 5;
  CHECK_THROWS_AS(gen_random_instance(cfg, 3), GenerationFailed);
  cfg.alphabet_size = 0;
  CHECK_THROWS_AS(gen_random_instance(cfg, 3), InvalidInput);
}

TEST_CASE("sequence files") {
  CHECK(parse_sequence("a\nab\nabab") == seq({"a", "ab", "abab"}));
  CHECK(parse_sequence("a\nab\nabab\n") == seq({"a", "ab", "abab"}));
  CHECK(parse_sequence("a\n\n") == seq({"a", ""}));
  CHECK(parse_sequence("a\r\nb\r\n") == seq({"a", "b"}));
  CHECK(serialize_sequence(seq({"a", "", "b"})) == "a\n\nb\n");
  const auto round = seq({"ab", "", ""});
  CHECK(parse_sequence(serialize_sequence(round)) == round);
}

TEST_CASE("system files") {
  const auto sys = parse_system("axiom: a\na -> ab\nb -> ab");
  CHECK(sys == system_of("a", {{'a', "ab"}, {'b', "ab"}}));

  const std::string canonical = "axiom: ab\na -> \nb -> ba\n";
  CHECK(serialize_system(parse_system(canonical)) == canonical);
  CHECK(parse_system("axiom: a\na ->\n") == system_of("a", {{'a', ""}}));

  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_system(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("axiom: a\na -> b\na -> c\n") == 3);
  CHECK(line_of("a -> b\n") == 1);
  CHECK(line_of("axiom: a\nab -> b\n") == 2);
  CHECK(line_of("axiom: a\na->b\n") == 2);
}
