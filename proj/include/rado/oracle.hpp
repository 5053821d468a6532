// Lazily extended automorphisms of the random graph.
#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rado/json_io.hpp"
#include "rado/partial_automorphism.hpp"

namespace rado {

enum class OracleKind { identity, seeded, sampled, fp, c0 };

// (∗): fresh orbit only; (∗)₀: also v ¬R f(v); (∗)₁: also v R f(v).
enum class StarVariant { plain, no_edge, edge };

using OrbitId = std::size_t;

std::string_view kind_name(OracleKind kind) noexcept;
std::string_view variant_name(StarVariant variant) noexcept;
StarVariant parse_variant(std::string_view name);

// A total automorphism revealed one pair at a time. Queries outside the
// stored core extend it with a fresh realizer above every touched vertex,
// so extensions never close a cycle.
//
// Constructed oracles (fp and c0 kinds) also keep an orbit registry: each
// orbit is a finite chain of built points around an anchor at position 0,
// and new points are only ever appended at a chain end. Every adjacency not
// forced by the automorphism or by the orbit pattern is decided as a
// non-edge. That policy makes cross-orbit adjacency constant along
// diagonals, so finitely many diagonals carry edges.
//
// Every mutating public call is appended to a task log; replay() re-runs
// the log and must reproduce the core.
class AutomorphismOracle {
 public:
  static AutomorphismOracle identity();
  static AutomorphismOracle seeded(const PartialAutomorphism& seed_core, std::uint64_t seed = 0);
  // Constructed oracles before any build stage. `pattern` lists p(1), p(2), ...
  // and repeats periodically; p(n) = 0 means v R f^n(v).
  static AutomorphismOracle fp(std::vector<bool> pattern, std::uint64_t seed);
  static AutomorphismOracle c0(std::uint64_t seed);
  // Random back-and-forth core; see sampler.hpp.
  static AutomorphismOracle sampled(std::uint64_t seed, std::size_t depth, bool allow_cycles);
  static AutomorphismOracle replay(const json& log);

  OracleKind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }
  bool constructed() const noexcept { return kind_ == OracleKind::fp || kind_ == OracleKind::c0; }

  Vertex image(const Vertex& v);
  Vertex preimage(const Vertex& v);
  std::optional<Vertex> known_image(const Vertex& v) const;
  std::optional<Vertex> known_preimage(const Vertex& v) const;

  PartialAutomorphism core() const;
  // (depth, allow_cycles) of a sampled oracle.
  const std::optional<std::pair<std::size_t, bool>>& sample_params() const noexcept { return sample_params_; }
  std::size_t core_size() const noexcept { return fwd_.size(); }
  // Vertices lying on cycles of the seed; empty for every other kind.
  const VertexSet& declared_finite_orbits() const noexcept { return declared_finite_; }
  const std::vector<Vertex>& touched() const noexcept { return touched_; }
  bool is_touched(const Vertex& v) const { return touched_set_.count(v) != 0; }

  // --- constructed oracles ---------------------------------------------
  void touch(const Vertex& v);  // registers an untouched vertex as a new orbit
  OrbitId orbit_id(const Vertex& v) const;
  std::int64_t orbit_position(const Vertex& v) const;
  std::size_t orbit_count() const;
  // Anchors in creation order.
  std::vector<Vertex> orbit_representatives() const;
  std::vector<Vertex> orbit_points(OrbitId o) const;
  std::pair<std::int64_t, std::int64_t> orbit_span(OrbitId o) const;
  // f^position(anchor of o); extends the orbit as needed.
  Vertex orbit_point(OrbitId o, std::int64_t position);

  Vertex star_witness(const TypeFunction& tau, StarVariant variant);
  // v R x for x in A, v ¬R every point of O(A ∪ B) \ A, now and later.
  Vertex c0_witness(const VertexSet& a, const VertexSet& b);
  // Positions in orbit o of every point adjacent to v, in the limit.
  std::vector<std::int64_t> neighbor_positions(const Vertex& v, OrbitId o) const;
  // Prohibited witnesses per orbit, recorded by c0 witnesses.
  const std::vector<Vertex>& prohibitions(OrbitId o) const;

  void run_stage();
  std::size_t stages_run() const noexcept { return stages_; }
  const std::vector<bool>& pattern() const noexcept { return pattern_; }
  // Whether v R f^n(v) is prescribed along orbits (n >= 1).
  bool pattern_edge(std::size_t n) const;

  json log() const;

 private:
  struct Orbit {
    std::deque<Vertex> points;
    std::int64_t first = 0;  // position of points.front()
  };

  void require_constructed(const char* op) const;
  struct Task {
    std::string op;
    Vertex v{};
    TypeFunction tau{};
    StarVariant variant = StarVariant::plain;
    VertexSet a{}, b{};
  };

  void log_task(Task task) { tasks_.push_back(std::move(task)); }
  void touch_raw(const Vertex& v);
  void add_pair(const Vertex& u, const Vertex& v);
  Vertex top_bound() const;

  Vertex extend_forward(const Vertex& v);
  Vertex extend_backward(const Vertex& v);
  Vertex default_forth(const Vertex& v);
  Vertex default_back(const Vertex& v);
  OrbitId register_orbit(const Vertex& v);
  Vertex grow_forward(OrbitId o);
  Vertex grow_backward(OrbitId o);
  void enforce_prohibitions(TypeFunction& tau, OrbitId o) const;
  Vertex star_witness_impl(const TypeFunction& tau, StarVariant variant);
  Vertex c0_witness_impl(const VertexSet& a, const VertexSet& b);
  void stage_impl();

  OracleKind kind_ = OracleKind::identity;
  std::uint64_t seed_ = 0;
  std::vector<bool> pattern_;
  PartialAutomorphism seed_core_;
  std::optional<std::pair<std::size_t, bool>> sample_params_;

  std::unordered_map<Vertex, Vertex> fwd_;
  std::unordered_map<Vertex, Vertex> bwd_;
  std::vector<Vertex> touched_;
  std::unordered_set<Vertex> touched_set_;
  std::optional<Vertex> max_touched_;
  VertexSet declared_finite_;

  std::vector<Orbit> orbits_;
  std::unordered_map<Vertex, std::pair<OrbitId, std::int64_t>> where_;
  std::vector<std::vector<Vertex>> prohibitions_;
  std::size_t stages_ = 0;
  std::mt19937_64 rng_;

  std::vector<Task> tasks_;
};

AutomorphismOracle build_fp(const std::vector<bool>& pattern, std::uint64_t seed, std::size_t depth);
AutomorphismOracle build_c0(std::uint64_t seed, std::size_t depth);

std::vector<bool> parse_pattern(std::string_view bits);
std::string pattern_string(const std::vector<bool>& pattern);

// The finite map v ↦ o(v) over m.
PartialAutomorphism restriction_fingerprint(AutomorphismOracle& o, const VertexSet& m);

MapStep step(AutomorphismOracle& o, int exponent);

}  // namespace rado
