#include "rado/sampler.hpp"

#include <algorithm>

namespace rado {

namespace {

// Below this bound small candidates are scanned one by one, so that a step
// can land on a touched vertex and merge chains or close a cycle.
constexpr std::uint64_t small_scan = 4096;

bool realizes(const TypeFunction& tau, const Vertex& u) {
  for (const auto& [w, bit] : tau)
    if (w == u || adjacent(w, u) != bit) return false;
  return true;
}

// The first sample_choices vertices u outside `used` realizing tau, with
// `closing` also excluded unless cycles are allowed.
std::vector<Vertex> candidates(const TypeFunction& tau, const VertexSet& used, const std::optional<Vertex>& closing) {
  std::vector<Vertex> out;
  Vertex top;
  for (const auto& [w, bit] : tau) top = std::max(top, w);
  const std::uint64_t limit = top.is_small() ? std::min(*top.to_u64(), small_scan) : small_scan;
  for (std::uint64_t n = 0; n <= limit && out.size() < sample_choices; ++n) {
    const Vertex u(n);
    if (!used.count(u) && u != closing && realizes(tau, u)) out.push_back(u);
  }
  VertexSet forbidden = used;
  if (closing) forbidden.insert(*closing);
  forbidden.insert(out.begin(), out.end());
  while (out.size() < sample_choices) {
    Vertex u = realize(tau, forbidden, 0);
    forbidden.insert(u);
    out.push_back(u);
  }
  return out;
}

}  // namespace

AutomorphismOracle AutomorphismOracle::sampled(std::uint64_t seed, std::size_t depth, bool allow_cycles) {
  AutomorphismOracle o;
  o.kind_ = OracleKind::sampled;
  o.seed_ = seed;
  o.sample_params_ = std::make_pair(depth, allow_cycles);
  std::mt19937_64 rng(seed);
  PartialAutomorphism core;

  auto least_missing = [](const std::unordered_map<Vertex, Vertex>& m) {
    std::uint64_t n = 0;
    while (m.count(Vertex(n))) ++n;
    return Vertex(n);
  };

  for (std::size_t step = 0; step < depth; ++step) {
    {  // forth: the image u of the least vertex outside dom(core)
      const Vertex v = least_missing(o.fwd_);
      TypeFunction tau;
      for (const auto& [w, cw] : o.fwd_) tau.assign(cw, adjacent(w, v));
      VertexSet used;
      for (const auto& [u, w] : o.bwd_) used.insert(u);
      const Vertex start = backward_end(v, core);
      auto cands = candidates(tau, used, allow_cycles ? std::nullopt : std::optional<Vertex>(start));
      const Vertex u = cands[rng() % cands.size()];
      o.add_pair(v, u);
      core = core.extended(v, u);
    }
    {  // back: the preimage u of the least vertex outside ran(core)
      const Vertex v = least_missing(o.bwd_);
      TypeFunction tau;
      for (const auto& [w, cw] : o.fwd_) tau.assign(w, adjacent(cw, v));
      VertexSet used;
      for (const auto& [u, w] : o.fwd_) used.insert(u);
      const Vertex end = forward_end(v, core);
      auto cands = candidates(tau, used, allow_cycles ? std::nullopt : std::optional<Vertex>(end));
      const Vertex u = cands[rng() % cands.size()];
      o.add_pair(u, v);
      core = core.extended(u, v);
    }
  }
  for (const auto& path : orbit_paths(core))
    if (path.cycle) o.declared_finite_.insert(path.points.begin(), path.points.end());
  return o;
}

AutomorphismOracle sample(std::uint64_t seed, std::size_t depth, bool allow_cycles) {
  return AutomorphismOracle::sampled(seed, depth, allow_cycles);
}

json SampleReport::to_json() const {
  return {{"seed", seed},
          {"depth", depth},
          {"orbit_chain_count", orbit_chain_count},
          {"closed_cycle_count", closed_cycle_count},
          {"trials", trials},
          {"search_cap", search_cap},
          {"witness_success_rate", witness_success_rate ? json(*witness_success_rate) : json("n/a")},
          {"sampling_rule", sampling_rule},
          {"note", "exploratory statistics under a declared sampling rule; no measure-theoretic claim"}};
}

SampleReport report(const AutomorphismOracle& o, std::size_t trials, std::uint64_t seed, std::size_t search_cap) {
  SampleReport r;
  r.seed = o.seed();
  r.depth = o.sample_params() ? o.sample_params()->first : 0;
  r.trials = trials;
  r.search_cap = search_cap;
  const PartialAutomorphism core = o.core();
  const auto paths = orbit_paths(core);
  for (const auto& p : paths) (p.cycle ? r.closed_cycle_count : r.orbit_chain_count) += 1;
  if (trials == 0) return r;

  // Orbit of x as far as the core knows it.
  auto core_orbit = [&](const Vertex& x) {
    for (const auto& p : paths)
      if (std::find(p.points.begin(), p.points.end(), x) != p.points.end()) return VertexSet(p.points.begin(), p.points.end());
    return VertexSet{x};
  };

  std::mt19937_64 rng(seed);
  const auto& pool = o.touched();
  std::size_t successes = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    VertexSet a, b;
    if (!pool.empty()) {
      const std::size_t k = 1 + rng() % 4;
      for (std::size_t i = 0; i < k; ++i) {
        const Vertex& x = pool[rng() % pool.size()];
        if (a.count(x) || b.count(x)) continue;
        ((rng() & 1U) ? a : b).insert(x);
      }
    } else {
      a = {Vertex(0)};
      b = {Vertex(1)};
    }
    TypeFunction tau;
    VertexSet orbit;
    for (const auto& x : a) tau.assign(x, true);
    for (const auto& x : b) tau.assign(x, false);
    for (const auto& [x, bit] : tau) {
      auto ox = core_orbit(x);
      orbit.insert(ox.begin(), ox.end());
    }
    VertexSet rejected;
    for (std::size_t i = 0; i < search_cap; ++i) {
      const Vertex v = realize(tau, rejected, 0);
      if (!orbit.count(v)) {
        ++successes;
        break;
      }
      rejected.insert(v);
    }
  }
  r.witness_success_rate = static_cast<double>(successes) / static_cast<double>(trials);
  return r;
}

}  // namespace rado
