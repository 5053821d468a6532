// Good triples (g, {φ_h}, M): the finite approximations of the translation
// construction, their ten decidable conditions and the extension steps.
// Finite orbits are not supported, so the set N of the general theory is
// empty throughout.
#pragma once

#include <string>
#include <vector>

#include "rado/compact_family.hpp"

namespace rado {

struct BadSituation {
  std::size_t h = 0, h2 = 0;  // member indices
  Vertex x, x2, y;
};

struct UglySituation {
  std::size_t h = 0, h2 = 0;
  Vertex x, y;
};

struct CheckReport {
  bool ok = true;
  std::string condition;  // "(i)" ... "(x)" on failure
  std::string detail;
  std::vector<Vertex> witness;
  std::vector<std::size_t> members;

  json to_json() const;
};

class GoodTriple {
 public:
  // Empty g, φ and M. Rejects finite orbits and targets without (∗)₀.
  static GoodTriple init(CompactFamily family, AutomorphismOracle target);
  // Replays the logged oracles; maps are loaded unchecked so that check()
  // can judge them.
  static GoodTriple from_snapshot(const json& snapshot);
  json snapshot();

  const PartialAutomorphism& g() const noexcept { return g_; }
  const PartialAutomorphism& phi(std::size_t member) const { return phi_.at(member); }
  const VertexSet& m() const noexcept { return m_; }
  CompactFamily& family() noexcept { return family_; }
  AutomorphismOracle& target() noexcept { return target_; }

  VertexSet m_star();
  // Members grouped by their restriction to the current M*, each group
  // sorted, groups ordered by least member.
  std::vector<std::vector<std::size_t>> classes();
  // z ∈ O^f(ran φ_member).
  bool covers_orbit(std::size_t member, const Vertex& z);

  CheckReport check();
  std::vector<BadSituation> find_bad();
  std::vector<UglySituation> find_ugly();

  // Growing M alone keeps a triple good.
  void add_to_m(const VertexSet& extra);
  // Returns v̄ with g(v) = v̄.
  Vertex extend_domain_g(const Vertex& v);
  // Returns v̄ with g(v̄) = v.
  Vertex extend_range_g(const Vertex& v);
  // Defines φ at v for the class of `member`; returns the new value z.
  Vertex extend_phi(std::size_t member, const Vertex& v);
  void extend_phi_all(const Vertex& v);
  // Makes z ∈ O^f(ran φ_h) for every h; returns the new domain points.
  std::vector<Vertex> extend_phi_range(const Vertex& z);

  // Direct writes for snapshots and planted violations.
  void set_g_unchecked(PartialAutomorphism g) { g_ = std::move(g); }
  void set_phi_unchecked(std::size_t member, PartialAutomorphism phi) { phi_.at(member) = std::move(phi); }
  void set_m_unchecked(VertexSet m) { m_ = std::move(m); }

 private:
  GoodTriple(CompactFamily family, AutomorphismOracle target);

  PartialAutomorphism composed(std::size_t member);  // h ∘ g
  std::vector<std::size_t> class_of(std::size_t member);

  CompactFamily family_;
  AutomorphismOracle target_;
  PartialAutomorphism g_;
  std::vector<PartialAutomorphism> phi_;  // one per member
  VertexSet m_;
};

}  // namespace rado
