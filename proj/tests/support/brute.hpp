// Test-side reference implementations, written from the definitions and
// sharing nothing with the library beyond its public types.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rado/good_triple.hpp"

namespace brute {

// u R v iff bit min(u,v) of max(u,v) is set; plain machine words.
inline bool adj64(std::uint64_t u, std::uint64_t v) {
  if (u == v) return false;
  const std::uint64_t lo = u < v ? u : v, hi = u < v ? v : u;
  return lo < 64 && ((hi >> lo) & 1U) != 0;
}

// Least v > max(dom tau ∪ {bound}) outside `forbidden` realizing tau, by
// ascending scan; nullopt when no such v is below `limit`.
inline std::optional<std::uint64_t> scan_realize(const std::map<std::uint64_t, bool>& tau,
                                                 const std::set<std::uint64_t>& forbidden, std::uint64_t bound,
                                                 std::uint64_t limit = std::uint64_t{1} << 40) {
  std::uint64_t lo = bound;
  for (const auto& [w, b] : tau) lo = std::max(lo, w);
  for (std::uint64_t v = lo + 1; v < limit; ++v) {
    if (forbidden.count(v)) continue;
    bool ok = true;
    for (const auto& [w, b] : tau)
      if (adj64(w, v) != b) {
        ok = false;
        break;
      }
    if (ok) return v;
  }
  return std::nullopt;
}

// Conditions (i)-(x) evaluated literally. Returns the violated ones, e.g.
// {"(iv)", "(x)"}; empty means good.
std::set<std::string> evaluate(rado::GoodTriple& t);

}  // namespace brute
