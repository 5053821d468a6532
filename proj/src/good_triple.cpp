#include "rado/good_triple.hpp"

#include <algorithm>
#include <map>

#include "rado/splitting.hpp"

namespace rado {

json CheckReport::to_json() const {
  if (ok) return json{{"ok", true}};
  json w = json::array();
  for (const auto& v : witness) w.push_back(v);
  return json{{"ok", false}, {"condition", condition}, {"detail", detail}, {"witness", w}, {"members", members}};
}

GoodTriple::GoodTriple(CompactFamily family, AutomorphismOracle target)
    : family_(std::move(family)), target_(std::move(target)), phi_(family_.size()) {}

GoodTriple GoodTriple::init(CompactFamily family, AutomorphismOracle target) {
  if (!target.constructed()) throw Error(Errc::not_constructed, "the target must be an fp or c0 oracle");
  if (!target.declared_finite_orbits().empty())
    throw Error(Errc::finite_orbits_unsupported, "the target declares finite orbits");
  if (target.pattern_edge(1))
    throw Error(Errc::target_not_star0, "the target pattern puts v R f(v); only (∗)₀ targets are supported");
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!family[i].declared_finite_orbits().empty())
      throw Error(Errc::finite_orbits_unsupported, "family member " + std::to_string(i) + " declares finite orbits",
                  {family[i].declared_finite_orbits().begin(), family[i].declared_finite_orbits().end()});
  return GoodTriple(std::move(family), std::move(target));
}

// --- derived data ------------------------------------------------------------

VertexSet GoodTriple::m_star() { return rado::m_star(family_, m_); }

std::vector<std::vector<std::size_t>> GoodTriple::classes() {
  const VertexSet ms = m_star();
  std::vector<std::pair<PartialAutomorphism, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < family_.size(); ++i) {
    PartialAutomorphism fp = restriction_fingerprint(family_[i], ms);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == fp; });
    if (it == groups.end()) groups.push_back({std::move(fp), {i}});
    else it->second.push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& g : groups) out.push_back(std::move(g.second));
  return out;
}

std::vector<std::size_t> GoodTriple::class_of(std::size_t member) {
  for (auto& c : classes())
    if (std::find(c.begin(), c.end(), member) != c.end()) return c;
  return {member};
}

bool GoodTriple::covers_orbit(std::size_t member, const Vertex& z) {
  target_.touch(z);
  const OrbitId oz = target_.orbit_id(z);
  for (const auto& [w, y] : phi_.at(member).pairs()) {
    target_.touch(y);
    if (target_.orbit_id(y) == oz) return true;
  }
  return false;
}

PartialAutomorphism GoodTriple::composed(std::size_t member) {
  VertexPairs pairs;
  for (const auto& [w, gw] : g_.pairs()) pairs.emplace_back(w, family_[member].image(gw));
  return PartialAutomorphism::unchecked(pairs);
}

// --- detectors -----------------------------------------------------------------

// (B1) reads: x = b(x, h∘g), x' = b(x', h'∘g), y = e(y, h∘g) = e(y, h'∘g).
// With (B2) x' = h'(h^-1(x)), and x = b(x, h∘g) iff h^-1(x) ∉ ran(g), so the
// search runs over x ∈ dom(φ_h) and derives x'. The endpoint clauses are
// still evaluated with e and b on the composed maps.
std::vector<BadSituation> GoodTriple::find_bad() {
  std::vector<BadSituation> out;
  std::vector<PartialAutomorphism> comp;
  for (std::size_t i = 0; i < family_.size(); ++i) comp.push_back(composed(i));
  for (std::size_t i = 0; i < family_.size(); ++i)
    for (std::size_t j = 0; j < family_.size(); ++j) {
      const auto& pi = phi_[i];
      const auto& pj = phi_[j];
      std::vector<Vertex> ys;
      for (const auto& [y, unused] : pi.pairs())
        if (pj.in_domain(y) && forward_end(y, comp[i]) == y && forward_end(y, comp[j]) == y) ys.push_back(y);
      if (ys.empty()) continue;
      for (const auto& [x, px] : pi.pairs()) {
        if (backward_end(x, comp[i]) != x) continue;
        const Vertex x2 = family_[j].image(family_[i].preimage(x));
        if (!pj.in_domain(x2) || backward_end(x2, comp[j]) != x2) continue;
        const Vertex px2 = *pj.apply(x2);
        for (const auto& y : ys) {
          const bool lhs = adjacent(px, target_.image(*pi.apply(y)));
          const bool rhs = adjacent(px2, target_.image(*pj.apply(y)));
          if (lhs != rhs) out.push_back({i, j, x, x2, y});
        }
      }
    }
  return out;
}

std::vector<UglySituation> GoodTriple::find_ugly() {
  std::vector<UglySituation> out;
  std::vector<PartialAutomorphism> comp;
  for (std::size_t i = 0; i < family_.size(); ++i) comp.push_back(composed(i));
  for (std::size_t i = 0; i < family_.size(); ++i)
    for (std::size_t j = 0; j < family_.size(); ++j) {
      const auto& pi = phi_[i];
      for (const auto& [x, px] : pi.pairs()) {
        if (backward_end(x, comp[i]) != x) continue;
        // (x, y, y) with (B2): y = h'(h^-1(x)).
        const Vertex y = family_[j].image(family_[i].preimage(x));
        if (backward_end(y, comp[j]) != y) continue;
        if (forward_end(y, comp[i]) != y || forward_end(y, comp[j]) != y) continue;
        if (phi_[j].in_domain(y) || !pi.in_domain(y)) continue;
        if (adjacent(px, target_.image(*pi.apply(y)))) out.push_back({i, j, x, y});
      }
    }
  return out;
}

// --- check -----------------------------------------------------------------------

CheckReport GoodTriple::check() {
  auto fail = [](std::string cond, std::string detail, std::vector<Vertex> witness, std::vector<std::size_t> members) {
    return CheckReport{false, std::move(cond), std::move(detail), std::move(witness), std::move(members)};
  };
  const std::size_t n = family_.size();

  // (i)
  if (auto err = g_.violation()) return fail("(i)", std::string("g: ") + err->what(), err->witness(), {});
  for (std::size_t i = 0; i < n; ++i)
    if (auto err = phi_[i].violation()) return fail("(i)", std::string("phi: ") + err->what(), err->witness(), {i});

  // (ii)
  std::vector<PartialAutomorphism> comp;
  for (std::size_t i = 0; i < n; ++i) comp.push_back(composed(i));
  for (const auto& v : rd(g_))
    if (!m_.count(v)) return fail("(ii)", "rd(g) not inside M", {v}, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : rd(comp[i]))
      if (!phi_[i].in_domain(v)) return fail("(ii)", "rd(h∘g) not inside dom(phi)", {v}, {i});
    for (const auto& [v, unused] : phi_[i].pairs())
      if (!m_.count(v)) return fail("(ii)", "dom(phi) not inside M", {v}, {i});
  }

  // (iii) holds vacuously with no finite orbits.

  // (iv)
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [w, hgw] : comp[i].pairs()) {
      auto lhs = phi_[i].apply(hgw);
      auto pw = phi_[i].apply(w);
      if (lhs && pw && *lhs != target_.image(*pw))
        return fail("(iv)", "phi(h(g(w))) differs from f(phi(w))", {w}, {i});
    }

  // (vii) before (v): orbits of h∘g must be chains.
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& path : orbit_paths(comp[i]))
      if (path.cycle) return fail("(vii)", "h∘g has a cycle", path.points, {i});

  // (v)
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Vertex, std::size_t> chain_of;
    const auto paths = orbit_paths(comp[i]);
    for (std::size_t p = 0; p < paths.size(); ++p)
      for (const auto& v : paths[p].points) chain_of[v] = p;
    std::map<OrbitId, std::pair<Vertex, std::size_t>> seen;  // f-orbit -> (w, chain key)
    std::size_t fresh = paths.size();
    for (const auto& [w, pw] : phi_[i].pairs()) {
      auto it = chain_of.find(w);
      const std::size_t key = it == chain_of.end() ? fresh++ : it->second;
      target_.touch(pw);
      auto [pos, inserted] = seen.emplace(target_.orbit_id(pw), std::make_pair(w, key));
      if (!inserted && pos->second.second != key)
        return fail("(v)", "different h∘g orbits share an f-orbit", {pos->second.first, w}, {i});
    }
  }

  // (vi)
  {
    const VertexSet ms = m_star();
    std::vector<PartialAutomorphism> fps;
    for (std::size_t i = 0; i < n; ++i) fps.push_back(restriction_fingerprint(family_[i], ms));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (fps[i] == fps[j] && !(phi_[i] == phi_[j]))
          return fail("(vi)", "equal restrictions to M* but different phi", {}, {i, j});
  }

  // (viii)
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [w, pw] : phi_[i].pairs()) {
      if (!adjacent(target_.image(pw), pw)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (family_[j].preimage(w) == family_[i].preimage(w) && !phi_[j].in_domain(w))
          return fail("(viii)", "f(phi(w)) R phi(w) but w missing from a matching phi", {w}, {i, j});
    }

  // (ix), (x)
  if (auto ugly = find_ugly(); !ugly.empty())
    return fail("(ix)", "ugly situation", {ugly[0].x, ugly[0].y}, {ugly[0].h, ugly[0].h2});
  if (auto bad = find_bad(); !bad.empty())
    return fail("(x)", "bad situation", {bad[0].x, bad[0].x2, bad[0].y}, {bad[0].h, bad[0].h2});
  return CheckReport{};
}

// --- extension steps ---------------------------------------------------------------

void GoodTriple::add_to_m(const VertexSet& extra) { m_.insert(extra.begin(), extra.end()); }

Vertex GoodTriple::extend_domain_g(const Vertex& v) {
  if (g_.in_domain(v)) throw Error(Errc::already_defined, "g is already defined at " + v.brief(), {v});
  const std::size_t n = family_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!phi_[i].in_domain(v))
      throw Error(Errc::precondition_phi_missing, "phi of member " + std::to_string(i) + " misses " + v.brief(), {v});

  // τ_g(w) = [g^-1(w) R v] on ran(g); τ_h(w) = [φ_h(h(w)) R f(φ_h(v))].
  TypeFunction tau;
  for (const auto& [a, b] : g_.pairs()) tau.assign(b, adjacent(a, v));
  std::vector<Vertex> fv(n);
  for (std::size_t i = 0; i < n; ++i) {
    fv[i] = target_.image(*phi_[i].apply(v));
    for (const auto& [x, px] : phi_[i].pairs()) {
      const Vertex w = family_[i].preimage(x);
      if (!tau.assign(w, adjacent(px, fv[i])))
        throw Error(Errc::incompatible_tau, "forward type disagrees at " + w.brief(), {w});
    }
  }
  const Vertex vbar = split_far(family_, m_star(), tau);
  g_ = g_.extended(v, vbar);
  m_.insert(vbar);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex hv = family_[i].image(vbar);
    phi_[i] = phi_[i].extended(hv, fv[i]);
    m_.insert(hv);
  }
  return vbar;
}

Vertex GoodTriple::extend_range_g(const Vertex& v) {
  if (!m_.count(v)) throw Error(Errc::invalid_argument, "vertex " + v.brief() + " is not in M", {v});
  if (g_.in_range(v)) throw Error(Errc::already_defined, "g^-1 is already defined at " + v.brief(), {v});
  const std::size_t n = family_.size();
  std::vector<Vertex> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto phv = phi_[i].apply(family_[i].image(v));
    if (!phv)
      throw Error(Errc::precondition_phi_missing, "phi of member " + std::to_string(i) + " misses h(" + v.brief() + ")", {v});
    t[i] = target_.preimage(*phv);
  }

  // τ_g(w) = [g(w) R v] on dom(g); τ_h(w) = [φ_h(w) R f^-1(φ_h(h(v)))].
  TypeFunction tau;
  for (const auto& [a, b] : g_.pairs()) tau.assign(a, adjacent(b, v));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [w, pw] : phi_[i].pairs())
      if (!tau.assign(w, adjacent(pw, t[i])))
        throw Error(Errc::incompatible_tau, "backward type disagrees at " + w.brief(), {w});
  const Vertex vbar = split_far(family_, m_star(), tau);
  g_ = g_.extended(vbar, v);
  m_.insert(vbar);
  for (std::size_t i = 0; i < n; ++i) phi_[i] = phi_[i].extended(vbar, t[i]);
  return vbar;
}

Vertex GoodTriple::extend_phi(std::size_t member, const Vertex& v) {
  if (member >= family_.size()) throw Error(Errc::invalid_argument, "no family member " + std::to_string(member));
  if (!m_.count(v)) throw Error(Errc::invalid_argument, "vertex " + v.brief() + " is not in M", {v});
  const auto& ph = phi_[member];
  if (ph.in_domain(v)) throw Error(Errc::already_defined, "phi is already defined at " + v.brief(), {v});
  AutomorphismOracle& h = family_[member];

  TypeFunction tau;
  auto require = [&](const Vertex& w, bool value, const char* clause) {
    if (!tau.assign(w, value))
      throw Error(Errc::implementation_fault, std::string("requirements on z conflict at ") + clause, {w});
  };

  // (2) z R φ_h(w) iff v R w.
  for (const auto& [w, pw] : ph.pairs()) require(pw, adjacent(v, w), "(2)");

  // v = e(v, h∘g) = e(v, h'∘g) iff v ∉ dom(g), since h∘g has no cycles.
  const bool v_is_end = !g_.in_domain(v);
  const Vertex hv_pre = h.preimage(v);
  for (std::size_t j = 0; j < family_.size(); ++j) {
    const auto& pj = phi_[j];
    AutomorphismOracle& hj = family_[j];

    // (3): (h, h', x, x', v) satisfies (B1), (B2).
    if (v_is_end) {
      for (const auto& [x, px] : ph.pairs()) {
        const Vertex u = h.preimage(x);
        if (g_.in_range(u)) continue;  // x is not b(x, h∘g)
        const Vertex x2 = hj.image(u);
        const Vertex fpre = target_.preimage(px);
        if (pj.in_domain(x2) && pj.in_domain(v))
          require(fpre, adjacent(*pj.apply(x2), target_.image(*pj.apply(v))), "(z.3.B)");
        if (x2 == v && !pj.in_domain(v)) require(fpre, false, "(z.3.U)");
      }
    }

    // (4): (h, h', v, x', y) satisfies (B1), (B2).
    if (!g_.in_range(hv_pre)) {
      const Vertex x2 = hj.image(hv_pre);
      for (const auto& [y, py] : ph.pairs()) {
        if (g_.in_domain(y)) continue;  // y is not an end
        const Vertex fpy = target_.image(py);
        if (pj.in_domain(x2) && pj.in_domain(y))
          require(fpy, adjacent(*pj.apply(x2), target_.image(*pj.apply(y))), "(z.4.B)");
        if (y == x2 && !pj.in_domain(y)) require(fpy, false, "(z.4.U)");
      }
    }
  }

  // (1) comes from the witness itself: fresh f-orbit and z ¬R f(z).
  const Vertex z = target_.star_witness(tau, StarVariant::no_edge);
  for (std::size_t j : class_of(member)) phi_[j] = phi_[j].extended(v, z);
  return z;
}

void GoodTriple::extend_phi_all(const Vertex& v) {
  for (const auto& c : classes())
    if (!phi_[c.front()].in_domain(v)) extend_phi(c.front(), v);
}

std::vector<Vertex> GoodTriple::extend_phi_range(const Vertex& z) {
  target_.orbit_id(z);  // must be touched
  const VertexSet ms = m_star();
  std::vector<std::pair<std::vector<std::size_t>, Vertex>> picks;
  VertexSet taken;
  for (const auto& c : classes()) {
    if (covers_orbit(c.front(), z)) continue;
    TypeFunction tau;
    for (const auto& [w, pw] : phi_[c.front()].pairs()) tau.assign(w, adjacent(pw, z));
    VertexSet window = ms;
    window.insert(taken.begin(), taken.end());
    const Vertex vc = split_far(family_, window, tau);
    taken.insert(vc);
    picks.emplace_back(c, vc);
  }
  std::vector<Vertex> out;
  for (const auto& [c, vc] : picks) {
    for (std::size_t j : c) phi_[j] = phi_[j].extended(vc, z);
    m_.insert(vc);
    out.push_back(vc);
  }
  return out;
}

// --- snapshots ------------------------------------------------------------------------

json GoodTriple::snapshot() {
  VertexTableWriter table;
  const VertexSet ms = m_star();
  // Members are grouped by identical φ so that a broken (vi) stays visible.
  json phi = json::array();
  std::vector<bool> done(phi_.size(), false);
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < phi_.size(); ++j)
      if (!done[j] && phi_[j] == phi_[i]) {
        members.push_back(j);
        done[j] = true;
      }
    phi.push_back({{"members", members},
                   {"fingerprint", restriction_fingerprint(family_[i], ms)},
                   {"map", phi_[i]}});
  }
  json snap{{"g", g_},
            {"M", vertex_set_json(m_)},
            {"phi", std::move(phi)},
            {"family_ref", family_.log()},
            {"target_ref", target_.log()}};
  table.attach(snap);
  return snap;
}

GoodTriple GoodTriple::from_snapshot(const json& snap) {
  if (!snap.is_object()) throw Error(Errc::parse_error, "snapshot must be an object");
  VertexTableReader table(snap);
  for (const char* key : {"g", "M", "phi", "family_ref", "target_ref"})
    if (!snap.contains(key)) throw Error(Errc::parse_error, std::string("snapshot lacks \"") + key + "\"");
  GoodTriple t(CompactFamily::replay(snap.at("family_ref")), AutomorphismOracle::replay(snap.at("target_ref")));
  t.g_ = snap.at("g").get<PartialAutomorphism>();
  t.m_ = vertex_set_from_json(snap.at("M"));
  for (const auto& entry : snap.at("phi")) {
    const auto map = entry.at("map").get<PartialAutomorphism>();
    for (const auto& idx : entry.at("members")) {
      const auto i = idx.get<std::size_t>();
      if (i >= t.phi_.size()) throw Error(Errc::parse_error, "snapshot names member " + std::to_string(i));
      t.phi_[i] = map;
    }
  }
  return t;
}

}  // namespace rado
