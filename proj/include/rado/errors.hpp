#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rado/vertex.hpp"

namespace rado {

enum class Errc {
  not_injective,
  edge_violation,
  cycle_detected,
  not_constructed,
  untouched_vertex,
  not_disjoint,
  finite_orbits_unsupported,
  target_not_star0,
  precondition_phi_missing,
  incompatible_tau,
  already_defined,
  implementation_fault,
  not_c0_built,
  variant_conflict,
  replay_mismatch,
  parse_error,
  invalid_argument,
};

// Stable identifier used in JSON error payloads, e.g. "EdgeViolation".
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<Vertex> witness = {});

  Errc code() const noexcept { return code_; }
  // Vertices naming the failure, e.g. the violated pair of an EdgeViolation.
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<Vertex> witness_;
};

}  // namespace rado
