#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "d0l/graph.hpp"

namespace d0l::qubo {

/// Symmetric n x n matrix: -1 on the diagonal, 1 on edges, 0 elsewhere.
class QuboMatrix {
 public:
  explicit QuboMatrix(std::size_t n = 0) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  friend bool operator==(const QuboMatrix&, const QuboMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<int> entries_;
};

struct PenaltyConfig {
  double lambda = 2.0;
  std::size_t k = 0;
};

/// bits[i] selects vertex i.
using BitVector = std::vector<std::uint8_t>;

/// Bit i of `index` becomes bits[i].
BitVector bits_from_index(std::uint64_t index, std::size_t n);
std::uint64_t index_from_bits(const BitVector& bits);

QuboMatrix build_qubo(const Graph& g);

/// x^T Q x. Throws DimensionMismatch.
long long qubo_value(const QuboMatrix& q, const BitVector& x);

/// x^T Q x + lambda (sum x - k)^2. Throws DimensionMismatch.
double penalized_cost(const QuboMatrix& q, const PenaltyConfig& cfg, const BitVector& x);

/// penalized_cost for every bitstring, indexed with bit i = x_i. Throws
/// InstanceTooLarge when n > max_n.
std::vector<double> penalized_cost_all(const QuboMatrix& q, const PenaltyConfig& cfg,
                                       std::size_t max_n = 30);

struct Minimum {
  BitVector bits;
  double cost = 0.0;
};

inline constexpr std::size_t kBruteMinCap = 20;

/// Exhaustive minimizer; ties go to the lowest index (bit i = x_i).
Minimum brute_min(const QuboMatrix& q, const PenaltyConfig& cfg, std::size_t cap = kBruteMinCap);

/// {"dimension", "rows", "lambda", "k", "bit_order"}.
std::string to_json(const QuboMatrix& q, const PenaltyConfig& cfg);

}  // namespace d0l::qubo
