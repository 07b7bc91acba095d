// d0l: infer D0L-systems from word sequences via the characteristic graph.
//
// Exit codes: 0 system found / compatible, 1 infeasible / incompatible,
// 2 usage or parse error, 3 resource cap, 4 unverified or unusable model.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "d0l/chargraph.hpp"
#include "d0l/errors.hpp"
#include "d0l/generator.hpp"
#include "d0l/pipeline.hpp"
#include "d0l/qubo.hpp"
#include "d0l/sat.hpp"
#include "d0l/text_io.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kResource = 3,
  kUnverified = 4,
};

struct InferArgs {
  std::string input;
  std::string backend = "exact";
  std::string mis = "structured";
  bool json = false;
  bool verbose = false;
  std::optional<std::uint64_t> node_budget;
  std::size_t materialize_cap = d0l::CharacteristicGraph::kDefaultMaterializeCap;
  std::size_t sweep_cap = d0l::sat::kSweepCap;
  d0l::qaoa::QaoaParams qaoa;
  std::string trace_path;
};

struct ExportArgs {
  std::string input;
  std::string output;
  bool dot = false;
  bool qubo = false;
  bool cnf = false;
  bool graph_json = false;
  double lambda = 2.0;
  std::size_t materialize_cap = d0l::CharacteristicGraph::kDefaultMaterializeCap;
};

struct VerifyArgs {
  std::string sequence;
  std::string system;
};

struct GenArgs {
  d0l::GeneratorConfig config;
  std::uint64_t seed = 0;
  std::string sequence_out;
  std::string system_out;
};

struct DecodeArgs {
  std::string sequence;
  std::string model;
  bool json = false;
  std::size_t materialize_cap = d0l::CharacteristicGraph::kDefaultMaterializeCap;
};

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-")
    std::cout << contents;
  else
    d0l::write_file(path, contents);
}

int report(const d0l::InferenceResult& r, bool json, bool verbose = false) {
  if (verbose) {
    std::cerr << "solver: " << d0l::to_string(r.solver) << "\n";
    if (r.stats)
      std::cerr << fmt::format("n={} edges={} k={} l={} h={} v={}\n", r.stats->vertices,
                               r.stats->edges, r.stats->k, r.stats->l, r.stats->h, r.stats->v);
    std::cerr << fmt::format("wall time: {:.6f} s\n", r.wall_time.count());
  }
  if (json) std::cout << d0l::to_json(r);
  if (r.has_system()) {
    if (!json) std::cout << d0l::serialize_system(r.system());
    return kOk;
  }
  if (const auto* inf = std::get_if<d0l::Infeasible>(&r.outcome)) {
    if (!json) {
      std::cout << "INFEASIBLE\n";
      std::cerr << inf->reason << "\n";
    }
    return kNegative;
  }
  const auto& unv = std::get<d0l::Unverified>(r.outcome);
  if (!json) {
    std::cout << "UNVERIFIED\n";
    if (unv.candidate) std::cout << d0l::serialize_system(*unv.candidate);
    std::cerr << unv.reason << "\n";
  }
  return kUnverified;
}

std::string trace_json(const d0l::qaoa::QaoaOutcome& run) {
  nlohmann::ordered_json doc;
  doc["layers"] = run.layers;
  doc["bit_order"] = "bit i of a basis-state index is qubit i, which selects vertex i";
  doc["initial_gamma"] = run.initial_gamma;
  doc["initial_beta"] = run.initial_beta;
  auto& iterations = doc["iterations"] = nlohmann::ordered_json::array();
  for (const auto& rec : run.optimization.history)
    iterations.push_back({{"iteration", rec.iteration},
                          {"expectation", rec.objective},
                          {"gamma", rec.gamma},
                          {"beta", rec.beta}});
  doc["final_gamma"] = run.optimization.gamma;
  doc["final_beta"] = run.optimization.beta;
  doc["final_expectation"] = run.optimization.final_expectation;
  doc["best_cost"] = run.best_cost;
  doc["best_bits"] = run.best_bits;
  return doc.dump(2) + "\n";
}

int cmd_infer(const InferArgs& args) {
  const auto theta = d0l::parse_sequence(d0l::read_file(args.input));
  if (args.backend == "exact") {
    d0l::ClassicalOptions options;
    options.backend = args.mis == "generic" ? d0l::ExactBackend::GenericMis
                                            : d0l::ExactBackend::Structured;
    options.limits.node_budget = args.node_budget;
    options.materialize_cap = args.materialize_cap;
    return report(d0l::classical_d0l_solver(theta, options), args.json, args.verbose);
  }
  if (args.backend == "qaoa") {
    args.qaoa.validate();
    auto run = d0l::quant_infer_d0l_detailed(theta, args.qaoa);
    if (!args.trace_path.empty() && run.qaoa) d0l::write_file(args.trace_path, trace_json(*run.qaoa));
    return report(run.result, args.json, args.verbose);
  }
  return report(d0l::sat_infer_d0l(theta, d0l::InternalSweep{args.sweep_cap}, args.materialize_cap),
                args.json, args.verbose);
}

int cmd_export(const ExportArgs& args) {
  const int formats = int{args.dot} + int{args.qubo} + int{args.cnf} + int{args.graph_json};
  if (formats != 1) throw d0l::InvalidInput("choose exactly one of --dot, --qubo, --cnf, --graph-json");
  const auto theta = d0l::parse_sequence(d0l::read_file(args.input));
  const auto g = d0l::build(theta);
  std::string out;
  if (args.dot) {
    out = d0l::to_dot(g, args.materialize_cap);
  } else if (args.graph_json) {
    out = d0l::to_json(g, args.materialize_cap);
  } else if (args.qubo) {
    const auto q = d0l::qubo::build_qubo(g.materialize(args.materialize_cap));
    out = d0l::qubo::to_json(q, {args.lambda, g.k()});
  } else {
    out = d0l::sat::write_dimacs(d0l::sat::encode(g, args.materialize_cap).formula);
  }
  emit(args.output, out);
  return kOk;
}

int cmd_verify(const VerifyArgs& args) {
  const auto theta = d0l::parse_sequence(d0l::read_file(args.sequence));
  const auto sys = d0l::parse_system(d0l::read_file(args.system));
  if (d0l::verify(theta, sys)) {
    std::cout << "COMPATIBLE\n";
    return kOk;
  }
  std::cout << "INCOMPATIBLE\n";
  return kNegative;
}

int cmd_gen(const GenArgs& args) {
  const auto inst = d0l::gen_random_instance(args.config, args.seed);
  d0l::write_file(args.sequence_out, d0l::serialize_sequence(inst.trace));
  d0l::write_file(args.system_out, d0l::serialize_system(inst.system));
  return kOk;
}

int cmd_decode(const DecodeArgs& args) {
  const auto theta = d0l::parse_sequence(d0l::read_file(args.sequence));
  const auto model = d0l::read_file(args.model);
  return report(d0l::sat_infer_d0l(theta, d0l::ExternalModel{model}, args.materialize_cap),
                args.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infer deterministic L-systems from word sequences"};
  app.require_subcommand(1);

  InferArgs infer;
  auto* infer_cmd = app.add_subcommand("infer", "infer a D0L-system compatible with a sequence file");
  infer_cmd->add_option("sequence", infer.input, "sequence file")->required();
  infer_cmd->add_option("--backend", infer.backend, "solver backend")
      ->check(CLI::IsMember({"exact", "qaoa", "sat-internal"}))
      ->capture_default_str();
  infer_cmd->add_option("--mis", infer.mis, "exact MIS engine")
      ->check(CLI::IsMember({"structured", "generic"}))
      ->capture_default_str();
  infer_cmd->add_flag("--json", infer.json, "print a machine-readable report");
  infer_cmd->add_flag("-v,--verbose", infer.verbose, "graph statistics and timing on stderr");
  infer_cmd->add_option("--node-budget", infer.node_budget, "exact search node budget");
  infer_cmd->add_option("--materialize-cap", infer.materialize_cap,
                        "largest graph built explicitly")
      ->capture_default_str();
  infer_cmd->add_option("--sweep-cap", infer.sweep_cap, "largest formula swept exhaustively")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  infer_cmd->add_option("-p,--layers", infer.qaoa.p, "QAOA layers (0: ceil(log2 n))")
      ->capture_default_str();
  infer_cmd->add_option("--lambda", infer.qaoa.lambda, "penalty weight")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  infer_cmd->add_option("-e,--shots", infer.qaoa.shots, "samples per evaluation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  infer_cmd->add_option("-T,--iters", infer.qaoa.iters, "optimizer iterations")
      ->capture_default_str();
  infer_cmd->add_option("--eta", infer.qaoa.eta, "learning rate")->capture_default_str();
  infer_cmd->add_option("--fd-step", infer.qaoa.fd_step, "finite-difference step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  infer_cmd->add_option("--seed", infer.qaoa.seed, "random seed")->capture_default_str();
  infer_cmd->add_option("--qubit-cap", infer.qaoa.qubit_cap, "largest simulated register")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  infer_cmd->add_flag("--shot-based", infer.qaoa.shot_based,
                      "optimize sampled cost averages instead of exact expectations");
  bool plain_steps = false;
  infer_cmd->add_flag("--plain-steps", plain_steps,
                      "fixed-step updates without step halving");
  infer_cmd->add_option("--trace", infer.trace_path, "write a per-iteration JSON trace");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "export the characteristic graph, QUBO or CNF");
  export_cmd->add_option("sequence", exp.input, "sequence file")->required();
  export_cmd->add_flag("--dot", exp.dot, "Graphviz DOT");
  export_cmd->add_flag("--qubo", exp.qubo, "QUBO matrix as JSON");
  export_cmd->add_flag("--cnf", exp.cnf, "DIMACS CNF");
  export_cmd->add_flag("--graph-json", exp.graph_json, "graph dump as JSON");
  export_cmd->add_option("-o,--output", exp.output, "output file (default: stdout)");
  export_cmd->add_option("--lambda", exp.lambda, "penalty weight recorded with --qubo")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  export_cmd->add_option("--materialize-cap", exp.materialize_cap, "largest graph exported")
      ->capture_default_str();

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "check a system against a sequence");
  verify_cmd->add_option("sequence", ver.sequence, "sequence file")->required();
  verify_cmd->add_option("system", ver.system, "system file")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random system and its trace");
  gen_cmd->add_option("--alphabet", gen.config.alphabet_size, "alphabet size")
      ->check(CLI::Range(1, 26))
      ->required();
  gen_cmd->add_option("--max-succ", gen.config.max_successor_length, "longest successor")
      ->required();
  gen_cmd->add_option("--steps", gen.config.steps, "derivation steps")
      ->check(CLI::PositiveNumber)
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "random seed")->required();
  gen_cmd->add_option("--cap", gen.config.word_length_cap, "longest allowed word")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("--max-axiom", gen.config.max_axiom_length, "longest axiom")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.sequence_out, "sequence file to write")->required();
  gen_cmd->add_option("--system-out", gen.system_out, "system file to write")->required();

  DecodeArgs dec;
  auto* decode_cmd =
      app.add_subcommand("decode", "infer from an external SAT solver's model of the CNF export");
  decode_cmd->add_option("sequence", dec.sequence, "sequence file")->required();
  decode_cmd->add_option("model", dec.model, "solver model file")->required();
  decode_cmd->add_flag("--json", dec.json, "print a machine-readable report");
  decode_cmd->add_option("--materialize-cap", dec.materialize_cap, "largest graph encoded")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  infer.qaoa.line_search = !plain_steps;

  try {
    if (*infer_cmd) return cmd_infer(infer);
    if (*export_cmd) return cmd_export(exp);
    if (*verify_cmd) return cmd_verify(ver);
    if (*gen_cmd) return cmd_gen(gen);
    if (*decode_cmd) return cmd_decode(dec);
  } catch (const d0l::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const d0l::IncompatibleModel& e) {
    std::cerr << "incompatible model: " << e.what() << "\n";
    return kUnverified;
  } catch (const d0l::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
