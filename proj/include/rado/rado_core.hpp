// The BIT random graph: u R v iff bit u of v is set (u < v).
#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rado/vertex.hpp"

namespace rado {

using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// A finite 0/1 assignment on vertices: the type a realizer must match.
class TypeFunction {
 public:
  TypeFunction() = default;
  TypeFunction(std::initializer_list<std::pair<const Vertex, bool>> entries) : entries_(entries) {}

  // Returns false (and leaves the entry alone) on a conflicting value.
  bool assign(const Vertex& w, bool value) {
    auto [it, inserted] = entries_.emplace(w, value);
    return inserted || it->second == value;
  }
  std::optional<bool> get(const Vertex& w) const {
    auto it = entries_.find(w);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Vertex& w) const { return entries_.count(w) != 0; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Vertex, bool>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const TypeFunction&, const TypeFunction&) = default;

 private:
  std::map<Vertex, bool> entries_;
};

bool adjacent(const Vertex& u, const Vertex& v);

// Least v > max(dom(tau) ∪ {lower_bound}) outside `forbidden` whose
// adjacency to every w in dom(tau) is tau(w).
Vertex realize(const TypeFunction& tau, const VertexSet& forbidden = {}, const Vertex& lower_bound = 0);

// Least v >= start agreeing with tau; needs start > max(dom(tau)).
Vertex least_realizer_from(const TypeFunction& tau, const Vertex& start);

std::vector<Edge> induced_subgraph(const VertexSet& m);
std::string to_dot(const VertexSet& m);

}  // namespace rado
