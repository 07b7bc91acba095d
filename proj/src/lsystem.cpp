#include "d0l/lsystem.hpp"

#include <algorithm>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

std::set<Symbol> symbols_of(const Word& axiom, const D0LSystem::ProductionMap& productions) {
  std::set<Symbol> out(axiom.begin(), axiom.end());
  for (const auto& [a, x] : productions) {
    out.insert(a);
    out.insert(x.begin(), x.end());
  }
  return out;
}

}  // namespace

D0LSystem::D0LSystem(Word axiom, ProductionMap productions)
    : alphabet_(symbols_of(axiom, productions)),
      axiom_(std::move(axiom)),
      productions_(std::move(productions)) {}

D0LSystem::D0LSystem(std::set<Symbol> alphabet, Word axiom, ProductionMap productions)
    : alphabet_(std::move(alphabet)), axiom_(std::move(axiom)), productions_(std::move(productions)) {
  const auto used = symbols_of(axiom_, productions_);
  if (!std::includes(alphabet_.begin(), alphabet_.end(), used.begin(), used.end()))
    throw InvalidInput("alphabet does not cover every symbol of the axiom and productions");
}

const Word* D0LSystem::successor(Symbol a) const {
  auto it = productions_.find(a);
  return it == productions_.end() ? nullptr : &it->second;
}

Word derive_step(const D0LSystem& sys, const Word& w) {
  Word out;
  for (Symbol a : w) {
    const Word* x = sys.successor(a);
    if (x == nullptr) throw MissingProduction(a);
    out += *x;
  }
  return out;
}

WordSequence derive_trace(const D0LSystem& sys, std::size_t m) {
  if (m == 0) throw InvalidInput("a trace needs at least one derivation step");
  WordSequence trace{sys.axiom()};
  for (std::size_t i = 0; i < m; ++i) trace.push_back(derive_step(sys, trace.back()));
  return trace;
}

Derivation derive(const D0LSystem& sys, std::size_t m) {
  Derivation d{derive_trace(sys, m), {}};
  for (std::size_t i = 0; i < m; ++i) {
    const Word& w = d.trace[i];
    for (std::size_t j = 1; j <= w.size(); ++j)
      d.choices.emplace(std::pair{i, j}, Production{w.at(j), *sys.successor(w.at(j))});
  }
  return d;
}

bool is_compatible(const D0LSystem& sys, const WordSequence& theta) {
  if (theta.size() < 2 || sys.axiom() != theta[0]) return false;
  Word current = theta[0];
  for (std::size_t i = 0; i < theta.steps(); ++i) {
    // Checked word by word so a partial system only needs the symbols that
    // actually occur before the last word.
    for (Symbol a : current)
      if (sys.successor(a) == nullptr) return false;
    current = derive_step(sys, current);
    if (current != theta[i + 1]) return false;
  }
  return true;
}

}  // namespace d0l
