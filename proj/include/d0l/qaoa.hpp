#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "d0l/graph.hpp"
#include "d0l/mis.hpp"
#include "d0l/qubo.hpp"

namespace d0l::qaoa {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr std::size_t kDefaultQubitCap = 24;

/// Diagonal of the cost Hamiltonian up to an additive constant:
/// values[x] = penalized cost of bitstring x, bit i of x = qubit i.
struct CostTable {
  std::size_t qubits = 0;
  std::vector<double> values;
};

class StateVector {
 public:
  explicit StateVector(std::size_t qubits = 0);

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  Amplitude& operator[](std::size_t x) { return amplitudes_[x]; }
  const Amplitude& operator[](std::size_t x) const { return amplitudes_[x]; }
  std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  double norm() const;
  std::vector<double> probabilities() const;

  /// |x>.
  static StateVector basis(std::size_t qubits, std::uint64_t x);

 private:
  std::size_t qubits_;
  std::vector<Amplitude> amplitudes_;
};

struct QaoaParams {
  /// Layer count; 0 selects max(1, ceil(log2 n)) in the solver.
  std::size_t p = 0;
  /// Initial angles; when empty the solver draws gamma in [0, pi) and beta
  /// in [0, pi/2) from the seeded generator.
  std::vector<double> gamma;
  std::vector<double> beta;
  double lambda = 2.0;
  std::size_t shots = 512;  ///< e
  std::size_t iters = 100;  ///< T
  double eta = 0.05;
  double fd_step = 1e-3;
  std::uint64_t seed = 0;
  std::size_t qubit_cap = kDefaultQubitCap;
  /// Estimate the objective from e fresh shots per evaluation instead of the
  /// exact expectation.
  bool shot_based = false;
  /// With exact expectations, halve the step until the objective drops
  /// (up to kMaxHalvings times) and keep the angles when it never does.
  /// Off: plain fixed-step updates.
  bool line_search = true;

  /// Throws InvalidInput on shots == 0, fd_step <= 0, lambda < 0 or
  /// mismatched angle vectors.
  void validate() const;
};

/// Throws QubitCapExceeded above qubit_cap.
CostTable build_cost_table(const qubo::QuboMatrix& q, const qubo::PenaltyConfig& cfg,
                           std::size_t qubit_cap = kDefaultQubitCap);

/// |+>^n.
StateVector init_plus(std::size_t n, std::size_t qubit_cap = kDefaultQubitCap);

/// amplitude[x] *= exp(-i gamma values[x]).
void apply_cost_phase(StateVector& psi, const CostTable& table, double gamma);

/// RX(2 beta) on every qubit.
void apply_mixer(StateVector& psi, double beta);

/// init_plus followed by (cost phase, mixer) for each layer in order.
StateVector run_circuit(const CostTable& table, std::span<const double> gamma,
                        std::span<const double> beta, std::size_t qubit_cap = kDefaultQubitCap);

/// sum_x |psi[x]|^2 values[x].
double expectation(const StateVector& psi, const CostTable& table);

/// Independent draws from |psi[x]|^2, returned as basis-state indices.
std::vector<std::uint64_t> sample(const StateVector& psi, std::size_t shots, Rng& rng);

/// Mean table value over `shots` samples of psi.
double sampled_average(const StateVector& psi, const CostTable& table, std::size_t shots,
                       Rng& rng);

/// Central finite-difference gradient of the exact expectation; returns the
/// 2p partials as (d/dgamma_1..p, d/dbeta_1..p).
std::vector<double> expectation_gradient(const CostTable& table, std::span<const double> gamma,
                                         std::span<const double> beta, double step);

struct IterationRecord {
  std::size_t iteration = 0;
  double objective = 0.0;  ///< exact expectation, or sampled average in shot mode
  std::vector<double> gamma;
  std::vector<double> beta;
};

struct OptimizeResult {
  std::vector<double> gamma;
  std::vector<double> beta;
  std::vector<IterationRecord> history;  ///< one record per iteration, before its update
  double final_expectation = 0.0;        ///< exact expectation at the returned angles
};

/// Called with the state prepared at the start of each iteration.
inline constexpr int kMaxHalvings = 20;

using IterationObserver = std::function<void(std::size_t iteration, const StateVector&)>;

/// T steps of gradient descent on the layer angles, starting from
/// params.gamma / params.beta (which must have equal length).
OptimizeResult optimize(const CostTable& table, const QaoaParams& params, Rng& rng,
                        const IterationObserver& observer = {});

/// max(1, ceil(log2 n)).
std::size_t default_layers(std::size_t n);

struct QaoaOutcome {
  mis::SolveOutcome outcome;  ///< exact == false
  std::uint64_t best_bits = 0;
  double best_cost = 0.0;
  OptimizeResult optimization;
  std::vector<double> initial_gamma;
  std::vector<double> initial_beta;
  std::size_t layers = 0;
};

/// Modified QAOA MIS solver: builds Q and the penalized cost table with the
/// target size k, optimizes the angles, samples e shots per iteration and
/// from the final state, and returns the lowest-cost bitstring observed.
/// The result is not guaranteed to be independent.
QaoaOutcome modified_qaoa_mis_solver(const Graph& g, std::size_t k, const QaoaParams& params);

}  // namespace d0l::qaoa
