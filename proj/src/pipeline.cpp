#include "d0l/pipeline.hpp"

#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "d0l/errors.hpp"
#include "d0l/text_io.hpp"

namespace d0l {

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Structured: return "exact-structured";
    case Backend::GenericMis: return "exact-generic";
    case Backend::Qaoa: return "qaoa";
    case Backend::Sat: return "sat";
  }
  return "unknown";
}

D0LSystem extract_system(const WordSequence& theta, std::span<const CGVertex> selected) {
  if (theta.size() < 2) throw InvalidInput("extraction needs at least two words");

  std::set<CliqueId> covered;
  D0LSystem::ProductionMap productions;
  for (const auto& v : selected) {
    if (v.step >= theta.steps() || v.position < 1 || v.position > theta[v.step].size())
      throw NotOnePerClique(fmt::format("vertex ({},{},{},{}) belongs to no clique", v.step,
                                        v.position, v.start, v.end));
    if (!covered.insert({v.step, v.position}).second)
      throw NotOnePerClique(fmt::format("two vertices selected from G_{}_{}", v.step, v.position));

    const Symbol a = theta[v.step].at(v.position);
    Word successor = theta[v.step + 1].slice(v.start, v.end);
    auto [it, fresh] = productions.emplace(a, successor);
    if (!fresh && it->second != successor)
      throw ConflictingProduction(fmt::format("symbol '{}' bound to \"{}\" and \"{}\"", a,
                                              it->second.str(), successor.str()));
  }
  const std::size_t k = target_k(theta);
  if (covered.size() != k)
    throw NotOnePerClique(fmt::format("{} of {} cliques covered", covered.size(), k));
  return D0LSystem(theta[0], std::move(productions));
}

D0LSystem extract_system(const CharacteristicGraph& g, const mis::VertexSet& selected) {
  std::vector<CGVertex> quads;
  quads.reserve(selected.size());
  for (VertexId v : selected) quads.push_back(g.vertex(v));
  return extract_system(g.theta(), quads);
}

bool verify(const WordSequence& theta, const D0LSystem& sys) { return is_compatible(sys, theta); }

std::optional<std::string> degenerate_reason(const WordSequence& theta) {
  if (theta.size() < 2) throw InvalidInput("inference needs at least two words (m >= 1)");
  for (std::size_t i = 0; i < theta.steps(); ++i)
    if (theta[i].empty() && !theta[i + 1].empty())
      return fmt::format("w_{} is empty but w_{} is not; the empty word only derives itself", i,
                         i + 1);
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::chrono::duration<double> elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_ = Clock::now();
};

bool one_per_clique(const CharacteristicGraph& g, const mis::VertexSet& set) {
  if (set.size() != g.k()) return false;
  std::vector<bool> hit(g.k(), false);
  for (VertexId v : set) {
    if (v >= g.size() || hit[g.clique_of(v)]) return false;
    hit[g.clique_of(v)] = true;
  }
  return true;
}

D0LSystem checked_extraction(const CharacteristicGraph& g, const mis::VertexSet& set,
                             Backend backend) {
  D0LSystem sys = extract_system(g, set);
  if (!verify(g.theta(), sys))
    throw std::logic_error(fmt::format("{} backend produced a size-k independent set whose "
                                       "system does not reproduce the trace",
                                       to_string(backend)));
  return sys;
}

}  // namespace

InferenceResult classical_d0l_solver(const WordSequence& theta, ClassicalOptions options) {
  Stopwatch clock;
  const Backend backend = options.backend == ExactBackend::Structured ? Backend::Structured
                                                                      : Backend::GenericMis;
  if (auto reason = degenerate_reason(theta))
    return {Infeasible{*reason}, backend, std::nullopt, clock.elapsed()};

  const CharacteristicGraph g = build(theta);
  const GraphStats st = stats(g);

  std::optional<mis::VertexSet> found;
  if (options.backend == ExactBackend::Structured) {
    found = mis::find_k_is_structured(g, options.limits);
  } else {
    auto outcome = mis::mis_exact(g.materialize(options.materialize_cap), options.limits);
    if (outcome.size() == g.k()) found = std::move(outcome.set);
  }
  if (!found)
    return {Infeasible{fmt::format("maximum independent set is smaller than k = {}", g.k())},
            backend, st, clock.elapsed()};
  return {checked_extraction(g, *found, backend), backend, st, clock.elapsed()};
}

QuantumRun quant_infer_d0l_detailed(const WordSequence& theta, const qaoa::QaoaParams& params) {
  Stopwatch clock;
  if (auto reason = degenerate_reason(theta))
    return {{Infeasible{*reason}, Backend::Qaoa, std::nullopt, clock.elapsed()}, std::nullopt};

  const CharacteristicGraph g = build(theta);
  const GraphStats st = stats(g);
  if (g.size() > params.qubit_cap)
    throw QubitCapExceeded(fmt::format(
        "characteristic graph has {} vertices, above the {}-qubit simulator cap; use the exact "
        "backend",
        g.size(), params.qubit_cap));

  auto run = qaoa::modified_qaoa_mis_solver(g.materialize(), g.k(), params);
  const mis::VertexSet& set = run.outcome.set;

  auto unverified = [&](std::optional<D0LSystem> candidate, std::string reason) {
    return QuantumRun{{Unverified{std::move(candidate), std::move(reason)}, Backend::Qaoa, st,
                       clock.elapsed()},
                      std::move(run)};
  };

  if (!one_per_clique(g, set))
    return unverified(std::nullopt,
                      fmt::format("best sample (cost {}) selects {} vertices, not one from each "
                                  "of the {} cliques",
                                  run.best_cost, set.size(), g.k()));
  std::optional<D0LSystem> candidate;
  try {
    candidate = extract_system(g, set);
  } catch (const ConflictingProduction& e) {
    return unverified(std::nullopt,
                      fmt::format("best sample (cost {}) is not independent: {}", run.best_cost,
                                  e.what()));
  }
  if (!verify(theta, *candidate))
    return unverified(std::move(candidate),
                      fmt::format("best sample (cost {}) does not reproduce the trace",
                                  run.best_cost));
  D0LSystem sys = std::move(*candidate);
  return {{std::move(sys), Backend::Qaoa, st, clock.elapsed()}, std::move(run)};
}

InferenceResult quant_infer_d0l(const WordSequence& theta, const qaoa::QaoaParams& params) {
  return quant_infer_d0l_detailed(theta, params).result;
}

InferenceResult sat_infer_d0l(const WordSequence& theta, const ModelSource& source,
                              std::size_t materialize_cap) {
  Stopwatch clock;
  if (auto reason = degenerate_reason(theta))
    return {Infeasible{*reason}, Backend::Sat, std::nullopt, clock.elapsed()};

  const CharacteristicGraph g = build(theta);
  const GraphStats st = stats(g);
  const sat::Encoding enc = sat::encode(g, materialize_cap);

  sat::Assignment assignment;
  if (const auto* internal = std::get_if<InternalSweep>(&source)) {
    auto found = sat::sweep(enc.formula, internal->cap);
    if (!found)
      return {Infeasible{"CNF encoding is unsatisfiable (exhaustive sweep)"}, Backend::Sat, st,
              clock.elapsed()};
    assignment = std::move(*found);
  } else {
    const auto& text = std::get<ExternalModel>(source).text;
    sat::Model model;
    try {
      model = sat::parse_model(text);
    } catch (const ParseError& e) {
      throw IncompatibleModel(fmt::format("malformed model: {}", e.what()));
    }
    if (model.status == sat::ModelStatus::Unsatisfiable)
      return {Infeasible{"external solver reported UNSATISFIABLE"}, Backend::Sat, st,
              clock.elapsed()};
    if (model.literals.empty())
      throw IncompatibleModel("model has neither a status of UNSATISFIABLE nor any literals");
    try {
      assignment = sat::assignment_from_model(model, enc.formula.var_count);
    } catch (const IncompleteModel& e) {
      throw IncompatibleModel(e.what());
    }
  }

  const mis::VertexSet set = sat::decode_model(enc.varmap, assignment);
  if (!one_per_clique(g, set))
    throw IncompatibleModel(fmt::format(
        "model selects {} vertices but a solution needs exactly one from each of {} cliques",
        set.size(), g.k()));
  if (!mis::is_independent(g, set))
    throw IncompatibleModel("model selects two adjacent vertices");
  return {checked_extraction(g, set, Backend::Sat), Backend::Sat, st, clock.elapsed()};
}

std::string to_json(const InferenceResult& r) {
  nlohmann::ordered_json doc;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, D0LSystem>) {
          doc["outcome"] = "system";
          doc["system"] = serialize_system(o);
        } else if constexpr (std::is_same_v<T, Infeasible>) {
          doc["outcome"] = "infeasible";
          doc["reason"] = o.reason;
        } else {
          doc["outcome"] = "unverified";
          doc["candidate"] = o.candidate ? nlohmann::ordered_json(serialize_system(*o.candidate))
                                         : nlohmann::ordered_json(nullptr);
          doc["reason"] = o.reason;
        }
      },
      r.outcome);
  doc["solver"] = to_string(r.solver);
  if (r.stats) {
    const auto& s = *r.stats;
    doc["stats"] = {{"vertices", s.vertices}, {"edges", s.edges}, {"k", s.k}, {"l", s.l},
                    {"h", s.h},               {"v", s.v}};
  } else {
    doc["stats"] = nullptr;
  }
  doc["wall_time_s"] = r.wall_time.count();
  return doc.dump(2) + "\n";
}

}  // namespace d0l
