#include "rado/rado_core.hpp"

#include <algorithm>
#include <sstream>

#include "rado/errors.hpp"

namespace rado {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_injective: return "NotInjective";
    case Errc::edge_violation: return "EdgeViolation";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::not_constructed: return "NotConstructed";
    case Errc::untouched_vertex: return "UntouchedVertex";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::finite_orbits_unsupported: return "FiniteOrbitsUnsupported";
    case Errc::target_not_star0: return "TargetNotStar0";
    case Errc::precondition_phi_missing: return "PreconditionPhiMissing";
    case Errc::incompatible_tau: return "IncompatibleTau";
    case Errc::already_defined: return "AlreadyDefined";
    case Errc::implementation_fault: return "ImplementationFault";
    case Errc::not_c0_built: return "NotC0Built";
    case Errc::variant_conflict: return "VariantConflict";
    case Errc::replay_mismatch: return "ReplayMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::vector<Vertex> witness)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), witness_(std::move(witness)) {}

bool adjacent(const Vertex& u, const Vertex& v) {
  if (u == v) return false;
  return u < v ? v.bit(u) : u.bit(v);
}

Vertex least_realizer_from(const TypeFunction& tau, const Vertex& start) {
  // Highest position where start disagrees with tau.
  const Vertex* top_mismatch = nullptr;
  bool wanted = false;
  for (auto it = tau.entries().rbegin(); it != tau.entries().rend(); ++it) {
    if (start.bit(it->first) != it->second) {
      top_mismatch = &it->first;
      wanted = it->second;
      break;
    }
  }
  if (top_mismatch == nullptr) return start;

  // Any realizer >= start keeps start's bits above some position i where it
  // has a 1 and start has a 0, and i >= the top mismatch. Take i minimal.
  Vertex i = *top_mismatch;
  if (!wanted) {
    do {
      i = i.successor();
    } while (start.bit(i) || tau.contains(i));
  }
  std::vector<Vertex> exps;
  for (const auto& e : start.exponents()) {
    if (e > i) exps.push_back(e);
    else break;
  }
  exps.push_back(i);
  for (auto it = tau.entries().rbegin(); it != tau.entries().rend(); ++it)
    if (it->first < i && it->second) exps.push_back(it->first);
  return Vertex::from_exponents(std::move(exps));
}

Vertex realize(const TypeFunction& tau, const VertexSet& forbidden, const Vertex& lower_bound) {
  Vertex floor = lower_bound;
  if (!tau.empty()) floor = std::max(floor, tau.entries().rbegin()->first);
  Vertex v = least_realizer_from(tau, floor.successor());
  while (forbidden.count(v) != 0) v = least_realizer_from(tau, v.successor());
  return v;
}

std::vector<Edge> induced_subgraph(const VertexSet& m) {
  std::vector<Edge> out;
  for (auto a = m.begin(); a != m.end(); ++a)
    for (auto b = std::next(a); b != m.end(); ++b)
      if (adjacent(*a, *b)) out.emplace_back(*a, *b);
  return out;
}

std::string to_dot(const VertexSet& m) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : m) os << "  \"" << v << "\";\n";
  for (const auto& [u, v] : induced_subgraph(m)) os << "  \"" << u << "\" -- \"" << v << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rado
