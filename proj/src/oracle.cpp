#include "d0l/oracle.hpp"

#include <array>
#include <functional>
#include <string>

#include "d0l/errors.hpp"

namespace d0l {

namespace {

class SplitSearch {
 public:
  using Visitor = std::function<bool(const D0LSystem&)>;

  SplitSearch(const WordSequence& theta, OracleLimits limits, Visitor visit)
      : theta_(theta), limits_(limits), visit_(std::move(visit)) {}

  void run() { step(0, 0, 0); }

 private:
  // Returns false once the visitor asks to stop.
  bool step(std::size_t i, std::size_t j, std::size_t pos) {
    if (++nodes_ > limits_.node_budget)
      throw InstanceTooLarge("oracle search exceeded its node budget");
    if (i == theta_.steps()) return visit_(current_system());

    const std::string& src = theta_[i].str();
    const std::string& dst = theta_[i + 1].str();
    if (j == src.size()) return pos == dst.size() ? step(i + 1, 0, 0) : true;

    auto& bound = binding_[static_cast<unsigned char>(src[j])];
    const std::size_t remaining = dst.size() - pos;
    if (bound) {
      if (bound->size() > remaining || dst.compare(pos, bound->size(), *bound) != 0) return true;
      return step(i, j + 1, pos + bound->size());
    }
    for (std::size_t len = 0; len <= remaining; ++len) {
      bound = dst.substr(pos, len);
      const bool more = step(i, j + 1, pos + len);
      if (!more) {
        bound.reset();
        return false;
      }
    }
    bound.reset();
    return true;
  }

  D0LSystem current_system() const {
    D0LSystem::ProductionMap productions;
    for (std::size_t c = 0; c < binding_.size(); ++c)
      if (binding_[c]) productions.emplace(static_cast<Symbol>(c), Word(*binding_[c]));
    return D0LSystem(theta_[0], std::move(productions));
  }

  const WordSequence& theta_;
  OracleLimits limits_;
  Visitor visit_;
  std::array<std::optional<std::string>, 256> binding_{};
  std::uint64_t nodes_ = 0;
};

void require_steps(const WordSequence& theta) {
  if (theta.size() < 2) throw InvalidInput("inference needs at least two words");
}

}  // namespace

std::optional<D0LSystem> oracle_infer(const WordSequence& theta, OracleLimits limits) {
  require_steps(theta);
  std::optional<D0LSystem> found;
  SplitSearch(theta, limits, [&](const D0LSystem& sys) {
    found = sys;
    return false;
  }).run();
  return found;
}

std::vector<D0LSystem> oracle_enumerate(const WordSequence& theta, std::size_t max_solutions,
                                        OracleLimits limits) {
  require_steps(theta);
  std::vector<D0LSystem> out;
  if (max_solutions == 0) return out;
  SplitSearch(theta, limits, [&](const D0LSystem& sys) {
    out.push_back(sys);
    return out.size() < max_solutions;
  }).run();
  return out;
}

}  // namespace d0l
