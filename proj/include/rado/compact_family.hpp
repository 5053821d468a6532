// Finite families of oracles standing in for a compact set K, and the
// metric d_K of the graph joining x to h(x) and h^-1(x).
#pragma once

#include <optional>
#include <vector>

#include "rado/oracle.hpp"

namespace rado {

class CompactFamily {
 public:
  explicit CompactFamily(std::vector<AutomorphismOracle> members);

  std::size_t size() const noexcept { return members_.size(); }
  AutomorphismOracle& operator[](std::size_t i) { return members_.at(i); }
  const AutomorphismOracle& operator[](std::size_t i) const { return members_.at(i); }
  auto begin() { return members_.begin(); }
  auto end() { return members_.end(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  json log() const;
  static CompactFamily replay(const json& logs);

 private:
  std::vector<AutomorphismOracle> members_;
};

VertexSet family_image(CompactFamily& k, const VertexSet& m);
VertexSet family_preimage(CompactFamily& k, const VertexSet& m);
// M ∪ K^-1(M).
VertexSet m_star(CompactFamily& k, const VertexSet& m);

// Exact distance when at most `radius`, nullopt beyond it.
std::optional<std::size_t> dK(CompactFamily& k, const Vertex& x, const Vertex& y, std::size_t radius);
// Distance from x to the nearest point of m (nullopt for m empty).
std::optional<std::size_t> dK_to_set(CompactFamily& k, const Vertex& x, const VertexSet& m, std::size_t radius);
// Every vertex within `radius` of m.
VertexSet ball(CompactFamily& k, const VertexSet& m, std::size_t radius);

}  // namespace rado
