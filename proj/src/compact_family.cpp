#include "rado/compact_family.hpp"

namespace rado {

CompactFamily::CompactFamily(std::vector<AutomorphismOracle> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(Errc::invalid_argument, "a compact family needs at least one member");
}

json CompactFamily::log() const {
  json j = json::array();
  for (const auto& h : members_) j.push_back(h.log());
  return j;
}

CompactFamily CompactFamily::replay(const json& logs) {
  std::vector<AutomorphismOracle> members;
  for (const auto& l : logs) members.push_back(AutomorphismOracle::replay(l));
  return CompactFamily(std::move(members));
}

VertexSet family_image(CompactFamily& k, const VertexSet& m) {
  VertexSet out;
  for (auto& h : k)
    for (const auto& v : m) out.insert(h.image(v));
  return out;
}

VertexSet family_preimage(CompactFamily& k, const VertexSet& m) {
  VertexSet out;
  for (auto& h : k)
    for (const auto& v : m) out.insert(h.preimage(v));
  return out;
}

VertexSet m_star(CompactFamily& k, const VertexSet& m) {
  VertexSet out = family_preimage(k, m);
  out.insert(m.begin(), m.end());
  return out;
}

namespace {

// Layered BFS from `sources`; stops after `radius` layers or when `stop`
// holds for a reached vertex, returning that layer.
template <typename Stop>
std::optional<std::size_t> bfs(CompactFamily& k, const VertexSet& sources, std::size_t radius, Stop stop,
                               VertexSet* reached = nullptr) {
  VertexSet seen = sources;
  std::vector<Vertex> layer(sources.begin(), sources.end());
  for (const auto& v : layer)
    if (stop(v)) return 0;
  for (std::size_t d = 1; d <= radius && !layer.empty(); ++d) {
    std::vector<Vertex> next;
    for (const auto& v : layer)
      for (auto& h : k)
        for (const Vertex& w : {h.image(v), h.preimage(v)})
          if (seen.insert(w).second) {
            if (stop(w)) return d;
            next.push_back(w);
          }
    layer = std::move(next);
  }
  if (reached) *reached = std::move(seen);
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> dK(CompactFamily& k, const Vertex& x, const Vertex& y, std::size_t radius) {
  return bfs(k, {x}, radius, [&](const Vertex& w) { return w == y; });
}

std::optional<std::size_t> dK_to_set(CompactFamily& k, const Vertex& x, const VertexSet& m, std::size_t radius) {
  if (m.empty()) return std::nullopt;
  return bfs(k, {x}, radius, [&](const Vertex& w) { return m.count(w) != 0; });
}

VertexSet ball(CompactFamily& k, const VertexSet& m, std::size_t radius) {
  VertexSet reached;
  bfs(k, m, radius, [](const Vertex&) { return false; }, &reached);
  return reached;
}

}  // namespace rado
