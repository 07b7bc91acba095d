#include "d0l/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <tuple>

#include <fmt/format.h>

#include "d0l/errors.hpp"

namespace d0l::qaoa {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n > 40)
    throw QubitCapExceeded(fmt::format(
        "{} qubits exceed the simulator cap of {}; use the exact classical backend", n, cap));
}

void check_table(const StateVector& psi, const CostTable& table) {
  if (psi.dimension() != table.values.size())
    throw DimensionMismatch(fmt::format("state has {} amplitudes but the cost table has {}",
                                        psi.dimension(), table.values.size()));
}

}  // namespace

StateVector::StateVector(std::size_t qubits)
    : qubits_(qubits), amplitudes_(std::size_t{1} << qubits, Amplitude{0.0, 0.0}) {}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](const Amplitude& a) { return std::norm(a); });
  return p;
}

StateVector StateVector::basis(std::size_t qubits, std::uint64_t x) {
  StateVector psi(qubits);
  psi.amplitudes_.at(x) = 1.0;
  return psi;
}

void QaoaParams::validate() const {
  if (shots == 0) throw InvalidInput("shots must be at least 1");
  if (!(fd_step > 0.0)) throw InvalidInput("finite-difference step must be positive");
  if (!(lambda >= 0.0)) throw InvalidInput("lambda must be non-negative");
  if (gamma.size() != beta.size()) throw InvalidInput("gamma and beta must have equal length");
  if (!gamma.empty() && p != 0 && gamma.size() != p)
    throw InvalidInput("initial angles must have one entry per layer");
}

CostTable build_cost_table(const qubo::QuboMatrix& q, const qubo::PenaltyConfig& cfg,
                           std::size_t qubit_cap) {
  check_cap(q.size(), qubit_cap);
  return {q.size(), qubo::penalized_cost_all(q, cfg, 40)};
}

StateVector init_plus(std::size_t n, std::size_t qubit_cap) {
  check_cap(n, qubit_cap);
  StateVector psi(n);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  for (auto& a : psi.amplitudes()) a = amp;
  return psi;
}

void apply_cost_phase(StateVector& psi, const CostTable& table, double gamma) {
  check_table(psi, table);
  auto amps = psi.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x)
    amps[x] *= std::polar(1.0, -gamma * table.values[x]);
}

void apply_mixer(StateVector& psi, double beta) {
  const double c = std::cos(beta);
  const Amplitude off{0.0, -std::sin(beta)};
  auto amps = psi.amplitudes();
  for (std::size_t q = 0; q < psi.qubits(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t x = 0; x < amps.size(); ++x) {
      if (x & bit) continue;
      const Amplitude a0 = amps[x];
      const Amplitude a1 = amps[x | bit];
      amps[x] = c * a0 + off * a1;
      amps[x | bit] = off * a0 + c * a1;
    }
  }
}

StateVector run_circuit(const CostTable& table, std::span<const double> gamma,
                        std::span<const double> beta, std::size_t qubit_cap) {
  if (gamma.size() != beta.size())
    throw InvalidInput("gamma and beta must have one entry per layer");
  StateVector psi = init_plus(table.qubits, qubit_cap);
  for (std::size_t layer = 0; layer < gamma.size(); ++layer) {
    apply_cost_phase(psi, table, gamma[layer]);
    apply_mixer(psi, beta[layer]);
  }
  return psi;
}

double expectation(const StateVector& psi, const CostTable& table) {
  check_table(psi, table);
  double sum = 0.0;
  auto amps = psi.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) sum += std::norm(amps[x]) * table.values[x];
  return sum;
}

std::vector<std::uint64_t> sample(const StateVector& psi, std::size_t shots, Rng& rng) {
  std::vector<double> cumulative(psi.dimension());
  double total = 0.0;
  auto amps = psi.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) cumulative[x] = total += std::norm(amps[x]);

  std::uniform_real_distribution<double> uniform(0.0, total);
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), uniform(rng));
    if (it == cumulative.end()) --it;
    out.push_back(static_cast<std::uint64_t>(it - cumulative.begin()));
  }
  return out;
}

double sampled_average(const StateVector& psi, const CostTable& table, std::size_t shots,
                       Rng& rng) {
  check_table(psi, table);
  double sum = 0.0;
  for (auto x : sample(psi, shots, rng)) sum += table.values[x];
  return sum / static_cast<double>(shots);
}

namespace {

// Central differences of `objective` over the concatenated (gamma, beta).
template <typename Objective>
std::vector<double> central_differences(std::span<const double> gamma,
                                        std::span<const double> beta, double step,
                                        Objective&& objective) {
  const std::size_t p = gamma.size();
  std::vector<double> g(gamma.begin(), gamma.end());
  std::vector<double> b(beta.begin(), beta.end());
  std::vector<double> grad(2 * p);
  for (std::size_t t = 0; t < 2 * p; ++t) {
    double& angle = t < p ? g[t] : b[t - p];
    const double saved = angle;
    angle = saved + step;
    const double up = objective(g, b);
    angle = saved - step;
    const double down = objective(g, b);
    angle = saved;
    grad[t] = (up - down) / (2.0 * step);
  }
  return grad;
}

}  // namespace

std::vector<double> expectation_gradient(const CostTable& table, std::span<const double> gamma,
                                         std::span<const double> beta, double step) {
  return central_differences(gamma, beta, step, [&](const auto& g, const auto& b) {
    return expectation(run_circuit(table, g, b, table.qubits), table);
  });
}

OptimizeResult optimize(const CostTable& table, const QaoaParams& params, Rng& rng,
                        const IterationObserver& observer) {
  params.validate();
  OptimizeResult result{params.gamma, params.beta, {}, 0.0};
  const std::size_t cap = std::max(params.qubit_cap, table.qubits);

  for (std::size_t t = 0; t < params.iters; ++t) {
    const StateVector psi = run_circuit(table, result.gamma, result.beta, cap);
    const double objective = params.shot_based
                                 ? sampled_average(psi, table, params.shots, rng)
                                 : expectation(psi, table);
    result.history.push_back({t, objective, result.gamma, result.beta});
    if (observer) observer(t, psi);

    std::vector<double> grad;
    if (params.shot_based) {
      grad = central_differences(
          result.gamma, result.beta, params.fd_step, [&](const auto& g, const auto& b) {
            return sampled_average(run_circuit(table, g, b, cap), table, params.shots, rng);
          });
    } else {
      grad = expectation_gradient(table, result.gamma, result.beta, params.fd_step);
    }
    const std::size_t p = result.gamma.size();
    auto stepped = [&](double eta) {
      std::pair<std::vector<double>, std::vector<double>> next{result.gamma, result.beta};
      for (std::size_t l = 0; l < p; ++l) {
        next.first[l] -= eta * grad[l];
        next.second[l] -= eta * grad[p + l];
      }
      return next;
    };
    if (params.shot_based || !params.line_search) {
      std::tie(result.gamma, result.beta) = stepped(params.eta);
      continue;
    }
    double eta = params.eta;
    for (int halving = 0; halving <= kMaxHalvings; ++halving, eta /= 2.0) {
      auto [g, b] = stepped(eta);
      if (expectation(run_circuit(table, g, b, cap), table) < objective) {
        result.gamma = std::move(g);
        result.beta = std::move(b);
        break;
      }
    }
  }
  result.final_expectation =
      expectation(run_circuit(table, result.gamma, result.beta, cap), table);
  return result;
}

std::size_t default_layers(std::size_t n) {
  if (n <= 2) return 1;
  return static_cast<std::size_t>(std::bit_width(n - 1));
}

QaoaOutcome modified_qaoa_mis_solver(const Graph& g, std::size_t k, const QaoaParams& params) {
  params.validate();
  check_cap(g.size(), params.qubit_cap);

  const qubo::QuboMatrix q = qubo::build_qubo(g);
  const CostTable table = build_cost_table(q, {params.lambda, k}, params.qubit_cap);

  QaoaOutcome out;
  out.layers = params.p != 0 ? params.p
               : !params.gamma.empty() ? params.gamma.size()
                                       : default_layers(g.size());

  Rng rng(params.seed);
  QaoaParams run = params;
  run.p = out.layers;
  if (run.gamma.empty()) {
    std::uniform_real_distribution<double> gamma_dist(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> beta_dist(0.0, std::numbers::pi / 2.0);
    for (std::size_t l = 0; l < out.layers; ++l) {
      run.gamma.push_back(gamma_dist(rng));
      run.beta.push_back(beta_dist(rng));
    }
  }
  out.initial_gamma = run.gamma;
  out.initial_beta = run.beta;

  bool have_best = false;
  auto record = [&](const StateVector& psi) {
    for (auto x : sample(psi, params.shots, rng)) {
      if (!have_best || table.values[x] < out.best_cost) {
        out.best_cost = table.values[x];
        out.best_bits = x;
        have_best = true;
      }
    }
  };

  out.optimization =
      optimize(table, run, rng, [&](std::size_t, const StateVector& psi) { record(psi); });
  record(run_circuit(table, out.optimization.gamma, out.optimization.beta, params.qubit_cap));

  out.outcome.exact = false;
  for (std::size_t v = 0; v < g.size(); ++v)
    if ((out.best_bits >> v) & 1U) out.outcome.set.push_back(v);
  return out;
}

}  // namespace d0l::qaoa
