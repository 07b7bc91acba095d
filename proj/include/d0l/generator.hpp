#pragma once

#include <cstddef>
#include <cstdint>

#include "d0l/lsystem.hpp"
#include "d0l/word.hpp"

namespace d0l {

struct GeneratorConfig {
  std::size_t alphabet_size = 2;         ///< symbols 'a', 'b', ... (at most 26)
  std::size_t max_successor_length = 2;  ///< successors drawn uniformly from words of length <= this
  std::size_t steps = 2;                 ///< m
  std::size_t word_length_cap = 60;      ///< every word of the trace, axiom included
  std::size_t max_axiom_length = 3;      ///< axiom length is uniform in 1..this
  std::size_t max_attempts = 1000;
};

struct GeneratedInstance {
  D0LSystem system;
  WordSequence trace;
};

/// Samples a total production map and an axiom, derives `steps` words, and
/// retries when a word exceeds the cap or becomes empty before the last
/// step. Deterministic for a fixed seed. Throws GenerationFailed after
/// max_attempts rejections.
GeneratedInstance gen_random_instance(const GeneratorConfig& config, std::uint64_t seed);

}  // namespace d0l
