// Splitting points: realizers on which family members that differ on a
// window take pairwise distinct images and preimages.
#pragma once

#include "rado/compact_family.hpp"

namespace rado {

struct SplitRequest {
  VertexSet m;
  TypeFunction tau;  // dom(tau) ⊆ m; extended by 0 to the rest of m
  Vertex exclusion_bound;
};

// v > exclusion_bound realizing tau on m, with h(v) ≠ h'(v) and
// h^-1(v) ≠ h'^-1(v) whenever h and h' differ somewhere on m.
Vertex split(CompactFamily& k, const SplitRequest& req);

// v R a for a in A, v ¬R b for b in B, separating members that differ on
// the window A ∪ B ∪ {0..15}.
Vertex split_finite(CompactFamily& k, const VertexSet& a, const VertexSet& b);

// A splitting point for m realizing tau with d_K(v, m) > 3.
Vertex split_far(CompactFamily& k, const VertexSet& m, const TypeFunction& tau);

// Window used by split_finite.
VertexSet split_finite_window(const VertexSet& a, const VertexSet& b);

}  // namespace rado
