#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "d0l/chargraph.hpp"
#include "d0l/lsystem.hpp"
#include "d0l/mis.hpp"
#include "d0l/qaoa.hpp"
#include "d0l/sat.hpp"

namespace d0l {

enum class Backend { Structured, GenericMis, Qaoa, Sat };

const char* to_string(Backend b);

struct Infeasible {
  std::string reason;
};

/// Produced only by non-exact backends: the best candidate (if one could be
/// extracted) failed verification.
struct Unverified {
  std::optional<D0LSystem> candidate;
  std::string reason;
};

using Outcome = std::variant<D0LSystem, Infeasible, Unverified>;

struct InferenceResult {
  Outcome outcome;
  Backend solver = Backend::Structured;
  std::optional<GraphStats> stats;  ///< absent when the graph was never built
  std::chrono::duration<double> wall_time{};

  bool has_system() const noexcept { return std::holds_alternative<D0LSystem>(outcome); }
  bool infeasible() const noexcept { return std::holds_alternative<Infeasible>(outcome); }
  bool unverified() const noexcept { return std::holds_alternative<Unverified>(outcome); }
  const D0LSystem& system() const { return std::get<D0LSystem>(outcome); }
};

/// Productions w_i[j] -> w_{i+1}[s:e] for every selected vertex. The alphabet
/// is the symbols of w_0..w_{m-1} plus those of the successors; the axiom is
/// w_0. Throws NotOnePerClique unless `selected` holds exactly one vertex of
/// every clique, and ConflictingProduction when a symbol gets two successors.
D0LSystem extract_system(const WordSequence& theta, std::span<const CGVertex> selected);
D0LSystem extract_system(const CharacteristicGraph& g, const mis::VertexSet& selected);

bool verify(const WordSequence& theta, const D0LSystem& sys);

/// Screens theta. Returns the reason when some w_i is empty while w_{i+1}
/// is not; throws InvalidInput when there are fewer than two words.
std::optional<std::string> degenerate_reason(const WordSequence& theta);

enum class ExactBackend { Structured, GenericMis };

struct ClassicalOptions {
  ExactBackend backend = ExactBackend::Structured;
  mis::ExactOptions limits;
  std::size_t materialize_cap = CharacteristicGraph::kDefaultMaterializeCap;
};

/// Exact inference: Infeasible iff no size-k independent set exists.
InferenceResult classical_d0l_solver(const WordSequence& theta, ClassicalOptions options = {});

/// QAOA inference. Always verifies the candidate; anything that fails is
/// Unverified. Throws QubitCapExceeded.
InferenceResult quant_infer_d0l(const WordSequence& theta, const qaoa::QaoaParams& params);

/// Details of the last QAOA run alongside the inference result.
struct QuantumRun {
  InferenceResult result;
  std::optional<qaoa::QaoaOutcome> qaoa;
};
QuantumRun quant_infer_d0l_detailed(const WordSequence& theta, const qaoa::QaoaParams& params);

struct InternalSweep {
  std::size_t cap = sat::kSweepCap;
};
struct ExternalModel {
  std::string text;
};
using ModelSource = std::variant<InternalSweep, ExternalModel>;

/// SAT route. An external model reporting UNSATISFIABLE yields Infeasible;
/// otherwise the model must decode to one vertex per clique forming an
/// independent set, else IncompatibleModel is thrown.
InferenceResult sat_infer_d0l(const WordSequence& theta, const ModelSource& source,
                              std::size_t materialize_cap = CharacteristicGraph::kDefaultMaterializeCap);

/// {"outcome", "solver", "system"/"candidate", "reason", "stats", "wall_time_s"}.
std::string to_json(const InferenceResult& r);

}  // namespace d0l
