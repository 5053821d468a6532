#include "rado/splitting.hpp"

#include <algorithm>

namespace rado {

namespace {

// A member of K ∪ K^-1.
struct Signed {
  std::size_t index;
  bool inverse;
};

Vertex apply(CompactFamily& k, Signed s, const Vertex& v) {
  return s.inverse ? k[s.index].preimage(v) : k[s.index].image(v);
}

Vertex apply_inverse(CompactFamily& k, Signed s, const Vertex& v) {
  return s.inverse ? k[s.index].image(v) : k[s.index].preimage(v);
}

// Members of K ∪ K^-1 grouped by their restriction to the window.
struct RestrictionClass {
  std::vector<std::pair<Vertex, Vertex>> restriction;
  std::vector<Signed> members;
};

std::vector<RestrictionClass> restriction_classes(CompactFamily& k, const VertexSet& window) {
  std::vector<RestrictionClass> classes;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (bool inverse : {false, true}) {
      const Signed s{i, inverse};
      std::vector<std::pair<Vertex, Vertex>> r;
      for (const auto& w : window) r.emplace_back(w, apply(k, s, w));
      auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.restriction == r; });
      if (it == classes.end()) classes.push_back({std::move(r), {s}});
      else it->members.push_back(s);
    }
  return classes;
}

// Core of both forms. `tau` is final on its domain; `window` decides which
// members count as different; the result exceeds `bound`.
Vertex split_impl(CompactFamily& k, const VertexSet& window, TypeFunction tau, Vertex bound) {
  if (!tau.empty()) bound = std::max(bound, tau.entries().rbegin()->first);
  const auto classes = restriction_classes(k, window);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t d = c + 1; d < classes.size(); ++d) {
      const auto& p = classes[c].restriction;
      const auto& q = classes[d].restriction;
      std::size_t at = 0;
      while (p[at].second == q[at].second) ++at;
      // w1 is adjacent to p(w0), not to q(w0), and all its preimages under
      // both classes lie above the bound. Then any v adjacent to every
      // L^-1(w1) and to no L'^-1(w1) has ℓ(v) R w1 ¬R ℓ'(v).
      const TypeFunction type{{p[at].second, true}, {q[at].second, false}};
      VertexSet rejected;
      VertexSet ones, zeros;
      for (;;) {
        const Vertex w1 = realize(type, rejected, bound);
        ones.clear();
        zeros.clear();
        for (const auto& s : classes[c].members) ones.insert(apply_inverse(k, s, w1));
        for (const auto& s : classes[d].members) zeros.insert(apply_inverse(k, s, w1));
        const bool high = std::all_of(ones.begin(), ones.end(), [&](const Vertex& x) { return x > bound; }) &&
                          std::all_of(zeros.begin(), zeros.end(), [&](const Vertex& x) { return x > bound; });
        if (high) break;
        rejected.insert(w1);
      }
      for (const auto& x : ones)
        if (zeros.count(x) || !tau.assign(x, true))
          throw Error(Errc::implementation_fault, "splitting witness sets overlap at " + x.brief(), {x});
      for (const auto& x : zeros)
        if (!tau.assign(x, false))
          throw Error(Errc::implementation_fault, "splitting witness sets overlap at " + x.brief(), {x});
      bound = std::max({bound, *ones.rbegin(), *zeros.rbegin()});
    }
  return realize(tau, {}, bound);
}

}  // namespace

Vertex split(CompactFamily& k, const SplitRequest& req) {
  TypeFunction tau = req.tau;
  for (const auto& w : req.m) tau.assign(w, false);
  // h ≠ h' on m forces h^-1 ≠ h'^-1 on K(m), so the window covers both.
  VertexSet window = family_image(k, req.m);
  window.insert(req.m.begin(), req.m.end());
  return split_impl(k, window, std::move(tau), req.exclusion_bound);
}

VertexSet split_finite_window(const VertexSet& a, const VertexSet& b) {
  VertexSet window(a.begin(), a.end());
  window.insert(b.begin(), b.end());
  for (std::uint64_t i = 0; i < 16; ++i) window.insert(Vertex{i});
  return window;
}

Vertex split_finite(CompactFamily& k, const VertexSet& a, const VertexSet& b) {
  TypeFunction tau;
  for (const auto& x : a) tau.assign(x, true);
  for (const auto& x : b)
    if (!tau.assign(x, false)) throw Error(Errc::not_disjoint, "A and B share " + x.brief(), {x});
  // The window only decides which members get separated; the bound stays at
  // A ∪ B so that a singleton family gives the plain realizer.
  return split_impl(k, split_finite_window(a, b), std::move(tau), Vertex{0});
}

Vertex split_far(CompactFamily& k, const VertexSet& m, const TypeFunction& tau) {
  const VertexSet near = ball(k, m, 3);
  const Vertex bound = near.empty() ? Vertex{0} : *near.rbegin();
  return split(k, SplitRequest{m, tau, bound});
}

}  // namespace rado
