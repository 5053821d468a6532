#include "rado/partial_automorphism.hpp"

#include <algorithm>

namespace rado {

PartialAutomorphism PartialAutomorphism::unchecked(const VertexPairs& pairs) {
  PartialAutomorphism g;
  for (const auto& [u, v] : pairs) g.fwd_[u] = v;
  for (const auto& [u, v] : g.fwd_) g.bwd_.emplace(v, u);
  return g;
}

PartialAutomorphism PartialAutomorphism::check(const VertexPairs& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].first == pairs[j].first && pairs[i].second != pairs[j].second)
        throw Error(Errc::not_injective, "vertex " + pairs[i].first.brief() + " has two images",
                    {pairs[i].first});
  PartialAutomorphism g = unchecked(pairs);
  if (auto err = g.violation()) throw *err;
  return g;
}

std::optional<Error> PartialAutomorphism::violation() const {
  if (bwd_.size() != fwd_.size()) {
    std::map<Vertex, Vertex> seen;
    for (const auto& [u, v] : fwd_) {
      auto [it, fresh] = seen.emplace(v, u);
      if (!fresh)
        return Error(Errc::not_injective,
                     it->second.brief() + " and " + u.brief() + " share the image " + v.brief(),
                     {it->second, u});
    }
  }
  for (auto a = fwd_.begin(); a != fwd_.end(); ++a)
    for (auto b = std::next(a); b != fwd_.end(); ++b)
      if (adjacent(a->first, b->first) != adjacent(a->second, b->second))
        return Error(Errc::edge_violation, "pair (" + a->first.brief() + "," + b->first.brief() + ")",
                     {a->first, b->first});
  return std::nullopt;
}

PartialAutomorphism PartialAutomorphism::extended(const Vertex& u, const Vertex& v) const {
  if (auto it = fwd_.find(u); it != fwd_.end()) {
    if (it->second == v) return *this;
    throw Error(Errc::not_injective, "vertex " + u.brief() + " already mapped", {u});
  }
  if (auto it = bwd_.find(v); it != bwd_.end())
    throw Error(Errc::not_injective, "image " + v.brief() + " already taken", {it->second, u});
  for (const auto& [a, b] : fwd_)
    if (adjacent(a, u) != adjacent(b, v))
      throw Error(Errc::edge_violation, "pair (" + std::min(a, u).brief() + "," + std::max(a, u).brief() + ")",
                  {std::min(a, u), std::max(a, u)});
  PartialAutomorphism g = *this;
  g.fwd_.emplace(u, v);
  g.bwd_.emplace(v, u);
  return g;
}

std::optional<Vertex> PartialAutomorphism::apply(const Vertex& v) const {
  auto it = fwd_.find(v);
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> PartialAutomorphism::inverse_apply(const Vertex& v) const {
  auto it = bwd_.find(v);
  if (it == bwd_.end()) return std::nullopt;
  return it->second;
}

VertexSet PartialAutomorphism::domain() const {
  VertexSet s;
  for (const auto& [u, v] : fwd_) s.insert(s.end(), u);
  return s;
}

VertexSet PartialAutomorphism::range() const {
  VertexSet s;
  for (const auto& [v, u] : bwd_) s.insert(s.end(), v);
  return s;
}

VertexSet rd(const PartialAutomorphism& g) {
  VertexSet s = g.domain();
  for (const auto& [u, v] : g.pairs()) s.insert(v);
  return s;
}

namespace {

template <typename Step>
Vertex run_to_end(const Vertex& w, Step next) {
  Vertex cur = w;
  while (auto nxt = next(cur)) {
    if (*nxt == w) throw Error(Errc::cycle_detected, "vertex " + w.brief() + " lies on a cycle", {w});
    cur = *nxt;
  }
  return cur;
}

}  // namespace

Vertex forward_end(const Vertex& w, const PartialAutomorphism& g) {
  return run_to_end(w, [&](const Vertex& x) { return g.apply(x); });
}

Vertex backward_end(const Vertex& w, const PartialAutomorphism& g) {
  return run_to_end(w, [&](const Vertex& x) { return g.inverse_apply(x); });
}

std::vector<OrbitPath> orbit_paths(const PartialAutomorphism& g) {
  std::vector<OrbitPath> out;
  VertexSet done;
  for (const auto& start : rd(g)) {
    if (done.count(start)) continue;
    // Walk back to the chain start, or around the cycle.
    Vertex b = start;
    bool cycle = false;
    while (auto prev = g.inverse_apply(b)) {
      if (*prev == start) {
        cycle = true;
        break;
      }
      b = *prev;
    }
    OrbitPath path;
    path.cycle = cycle;
    if (cycle) b = start;
    Vertex cur = b;
    for (;;) {
      path.points.push_back(cur);
      done.insert(cur);
      auto nxt = g.apply(cur);
      if (!nxt || *nxt == b) break;
      cur = *nxt;
    }
    out.push_back(std::move(path));
  }
  return out;
}

MapStep step(const PartialAutomorphism& g, int exponent) {
  return MapStep{[g](const Vertex& v) { return g.apply(v); }, [g](const Vertex& v) { return g.inverse_apply(v); },
                 exponent};
}

std::optional<Vertex> compose_path(const Vertex& w, std::span<const MapStep> steps) {
  std::optional<Vertex> cur = w;
  for (const auto& s : steps) {
    const auto& fn = s.exponent >= 0 ? s.forward : s.backward;
    for (int i = 0; i < std::abs(s.exponent) && cur; ++i) cur = fn(*cur);
    if (!cur) return std::nullopt;
  }
  return cur;
}

}  // namespace rado
