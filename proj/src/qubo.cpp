#include "d0l/qubo.hpp"

#include <bit>

#include <fmt/format.h>
#include <json.hpp>

#include "d0l/errors.hpp"

namespace d0l::qubo {

BitVector bits_from_index(std::uint64_t index, std::size_t n) {
  BitVector bits(n, 0);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((index >> i) & 1U);
  return bits;
}

std::uint64_t index_from_bits(const BitVector& bits) {
  if (bits.size() > 64) throw InvalidInput("bit vector longer than 64");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) index |= std::uint64_t{1} << i;
  return index;
}

QuboMatrix build_qubo(const Graph& g) {
  QuboMatrix q(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) q(i, i) = -1;
  for (auto [u, v] : g.edges()) q(u, v) = q(v, u) = 1;
  return q;
}

namespace {

void check_dimensions(const QuboMatrix& q, const BitVector& x) {
  if (q.size() != x.size())
    throw DimensionMismatch(
        fmt::format("matrix is {}x{} but the bit vector has {} entries", q.size(), q.size(),
                    x.size()));
}

double penalty(const PenaltyConfig& cfg, long long ones) {
  const double excess = static_cast<double>(ones) - static_cast<double>(cfg.k);
  return cfg.lambda * excess * excess;
}

}  // namespace

long long qubo_value(const QuboMatrix& q, const BitVector& x) {
  check_dimensions(q, x);
  long long value = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (x[j]) value += q(i, j);
  }
  return value;
}

double penalized_cost(const QuboMatrix& q, const PenaltyConfig& cfg, const BitVector& x) {
  const long long value = qubo_value(q, x);
  long long ones = 0;
  for (auto b : x) ones += b ? 1 : 0;
  return static_cast<double>(value) + penalty(cfg, ones);
}

std::vector<double> penalized_cost_all(const QuboMatrix& q, const PenaltyConfig& cfg,
                                       std::size_t max_n) {
  const std::size_t n = q.size();
  if (n > max_n || n > 62)
    throw InstanceTooLarge(fmt::format("cannot tabulate 2^{} costs (limit 2^{})", n, max_n));

  // x^T Q x = sum_i x_i (Q_ii + sum_{j != i} Q_ij x_j); rows as bit masks of
  // the off-diagonal +1 and -1 entries keep this linear in n per state.
  std::vector<std::uint64_t> plus(n, 0), minus(n, 0);
  std::vector<int> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = q(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const int entry = q(i, j);
      if (entry == 1) {
        plus[i] |= std::uint64_t{1} << j;
      } else if (entry == -1) {
        minus[i] |= std::uint64_t{1} << j;
      } else if (entry != 0) {
        throw InvalidInput("QUBO entries must lie in {-1, 0, 1}");
      }
    }
  }

  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<double> values(states);
  for (std::uint64_t x = 0; x < states; ++x) {
    long long value = 0;
    for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      value += diag[i] + std::popcount(plus[i] & x) - std::popcount(minus[i] & x);
    }
    values[x] = static_cast<double>(value) + penalty(cfg, std::popcount(x));
  }
  return values;
}

Minimum brute_min(const QuboMatrix& q, const PenaltyConfig& cfg, std::size_t cap) {
  if (q.size() > cap)
    throw InstanceTooLarge(
        fmt::format("brute-force QUBO minimization limited to {} variables, got {}", cap,
                    q.size()));
  const auto values = penalized_cost_all(q, cfg, cap);
  std::uint64_t best = 0;
  for (std::uint64_t x = 1; x < values.size(); ++x)
    if (values[x] < values[best]) best = x;
  return {bits_from_index(best, q.size()), values[best]};
}

std::string to_json(const QuboMatrix& q, const PenaltyConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["dimension"] = q.size();
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < q.size(); ++j) row.push_back(q(i, j));
    rows.push_back(std::move(row));
  }
  doc["lambda"] = cfg.lambda;
  doc["k"] = cfg.k;
  doc["bit_order"] = "bit i of a basis-state index selects vertex i";
  return doc.dump() + "\n";
}

}  // namespace d0l::qubo
