// Finite partial automorphisms of the random graph.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rado/errors.hpp"
#include "rado/rado_core.hpp"

namespace rado {

using VertexPairs = std::vector<std::pair<Vertex, Vertex>>;

// Immutable finite injective edge-preserving map. Build through check();
// unchecked() exists for deserialization and for planting violations in
// tests, after which violation() reports what is wrong.
class PartialAutomorphism {
 public:
  PartialAutomorphism() = default;

  static PartialAutomorphism check(const VertexPairs& pairs);
  // Keeps the last value for repeated keys; never throws.
  static PartialAutomorphism unchecked(const VertexPairs& pairs);

  std::optional<Error> violation() const;
  bool valid() const { return !violation().has_value(); }

  // Copy with one more pair; throws unless the result is still valid.
  PartialAutomorphism extended(const Vertex& u, const Vertex& v) const;

  std::optional<Vertex> apply(const Vertex& v) const;
  std::optional<Vertex> inverse_apply(const Vertex& v) const;
  bool in_domain(const Vertex& v) const { return fwd_.count(v) != 0; }
  bool in_range(const Vertex& v) const { return bwd_.count(v) != 0; }

  const std::map<Vertex, Vertex>& pairs() const { return fwd_; }
  VertexPairs pair_list() const { return {fwd_.begin(), fwd_.end()}; }
  VertexSet domain() const;
  VertexSet range() const;
  std::size_t size() const { return fwd_.size(); }
  bool empty() const { return fwd_.empty(); }

  friend bool operator==(const PartialAutomorphism& a, const PartialAutomorphism& b) { return a.fwd_ == b.fwd_; }

 private:
  std::map<Vertex, Vertex> fwd_;
  std::map<Vertex, Vertex> bwd_;
};

VertexSet rd(const PartialAutomorphism& g);

// e(w, g): iterate g while defined. Throws CycleDetected on a g-cycle.
Vertex forward_end(const Vertex& w, const PartialAutomorphism& g);
// b(w, g): iterate g^-1 while defined.
Vertex backward_end(const Vertex& w, const PartialAutomorphism& g);

struct OrbitPath {
  bool cycle = false;
  std::vector<Vertex> points;  // chains run from b to e under g
};

// Partition of rd(g) into maximal chains and cycles, ordered by least point.
std::vector<OrbitPath> orbit_paths(const PartialAutomorphism& g);

// One factor of a composed path: a partial map (forward and backward
// lookups) raised to an integer power.
struct MapStep {
  std::function<std::optional<Vertex>(const Vertex&)> forward;
  std::function<std::optional<Vertex>(const Vertex&)> backward;
  int exponent = 1;
};

MapStep step(const PartialAutomorphism& g, int exponent);

// Applies the steps left to right; nullopt once any factor is undefined.
std::optional<Vertex> compose_path(const Vertex& w, std::span<const MapStep> steps);

}  // namespace rado
