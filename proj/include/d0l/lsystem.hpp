#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "d0l/word.hpp"

namespace d0l {

struct Production {
  Symbol predecessor{};
  Word successor;

  friend bool operator==(const Production&, const Production&) = default;
};

/// Deterministic context-free L-system (V, axiom, P). The production map may
/// be partial: symbols that only occur in the last word of a trace never
/// need a successor.
class D0LSystem {
 public:
  using ProductionMap = std::map<Symbol, Word>;

  D0LSystem() = default;

  /// Alphabet is inferred as the symbols of the axiom, the predecessors, and
  /// every successor.
  D0LSystem(Word axiom, ProductionMap productions);

  /// Explicit alphabet; throws InvalidInput unless it covers axiom,
  /// predecessors and successors.
  D0LSystem(std::set<Symbol> alphabet, Word axiom, ProductionMap productions);

  const std::set<Symbol>& alphabet() const noexcept { return alphabet_; }
  const Word& axiom() const noexcept { return axiom_; }
  const ProductionMap& productions() const noexcept { return productions_; }

  /// nullptr when the symbol has no production.
  const Word* successor(Symbol a) const;

  friend bool operator==(const D0LSystem&, const D0LSystem&) = default;

 private:
  std::set<Symbol> alphabet_;
  Word axiom_;
  ProductionMap productions_;
};

/// A trace together with the production used at every (step, position).
struct Derivation {
  WordSequence trace;
  std::map<std::pair<std::size_t, std::size_t>, Production> choices;
};

/// One parallel rewriting step. Throws MissingProduction.
Word derive_step(const D0LSystem& sys, const Word& w);

/// (axiom, derive_step(axiom), ...) with m + 1 words. Throws InvalidInput
/// for m == 0 and propagates MissingProduction.
WordSequence derive_trace(const D0LSystem& sys, std::size_t m);

/// derive_trace plus the per-position production record.
Derivation derive(const D0LSystem& sys, std::size_t m);

/// True iff sys generates theta as a trace from its axiom.
bool is_compatible(const D0LSystem& sys, const WordSequence& theta);

}  // namespace d0l
