// Seeded random back-and-forth automorphisms and exploratory statistics.
// The sampling rule picks uniformly among the first 16 qualifying
// realizers; it is a declared convention, not a canonical measure.
#pragma once

#include <optional>

#include "rado/oracle.hpp"

namespace rado {

inline constexpr std::size_t sample_choices = 16;
inline constexpr const char* sampling_rule = "uniform-among-first-16-realizers";

// Same as AutomorphismOracle::sampled.
AutomorphismOracle sample(std::uint64_t seed, std::size_t depth, bool allow_cycles);

struct SampleReport {
  std::uint64_t seed = 0;
  std::size_t depth = 0;
  std::size_t orbit_chain_count = 0;
  std::size_t closed_cycle_count = 0;
  std::size_t trials = 0;
  std::size_t search_cap = 0;
  std::optional<double> witness_success_rate;  // nullopt when trials = 0

  json to_json() const;
};

// Draws `trials` disjoint (A, B) from the touched vertices and searches the
// first `search_cap` realizers for one outside the core orbits of A ∪ B.
SampleReport report(const AutomorphismOracle& o, std::size_t trials, std::uint64_t seed = 0,
                    std::size_t search_cap = 8);

}  // namespace rado
