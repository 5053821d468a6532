#include <set>

#include "rado/translator.hpp"

namespace rado {

json Verdict::to_json() const { return {{"ok", ok}, {"reason", reason}, {"points", points}}; }

namespace {

json phi_groups(GoodTriple& t) {
  json out = json::array();
  const std::size_t n = t.family().size();
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < n; ++j)
      if (!done[j] && t.phi(j) == t.phi(i)) {
        members.push_back(j);
        done[j] = true;
      }
    out.push_back({{"members", members}, {"map", t.phi(i)}});
  }
  return out;
}

struct Reject {
  std::string reason;
};

Vertex need(const std::optional<Vertex>& v, const std::string& what) {
  if (!v) throw Reject{what};
  return *v;
}

void same(const Vertex& claimed, const Vertex& actual, const std::string& what) {
  if (claimed != actual) throw Reject{what + ": certificate says " + claimed.brief() + ", recomputed " + actual.brief()};
}

Verdict verify_translation(const json& c) {
  CompactFamily family = CompactFamily::replay(c.at("family_ref"));
  AutomorphismOracle f = AutomorphismOracle::replay(c.at("f_ref"));
  const auto g = c.at("g").get<PartialAutomorphism>();
  if (auto err = g.violation()) throw Reject{std::string("g is not a partial automorphism: ") + err->what()};

  std::vector<std::optional<PartialAutomorphism>> phi(family.size());
  for (const auto& entry : c.at("phi")) {
    const auto map = entry.at("map").get<PartialAutomorphism>();
    if (auto err = map.violation()) throw Reject{std::string("phi is not a partial automorphism: ") + err->what()};
    for (const auto& m : entry.at("members")) {
      const auto i = m.get<std::size_t>();
      if (i >= phi.size() || phi[i]) throw Reject{"phi names member " + std::to_string(i) + " twice or out of range"};
      phi[i] = map;
    }
  }
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (!phi[i]) throw Reject{"phi is missing member " + std::to_string(i)};

  std::set<std::pair<std::size_t, Vertex>> seen;
  for (const auto& p : c.at("checked_points")) {
    const auto i = p.at("member").get<std::size_t>();
    if (i >= family.size()) throw Reject{"checked point names member " + std::to_string(i)};
    const Vertex v = p.at("v").get<Vertex>();
    if (!seen.emplace(i, v).second) throw Reject{"duplicate checked point " + v.brief()};
    const Vertex gv = need(g.apply(v), "g undefined at " + v.brief());
    same(p.at("g_v").get<Vertex>(), gv, "g(v)");
    const Vertex hgv = family[i].image(gv);
    same(p.at("h_g_v").get<Vertex>(), hgv, "h(g(v))");
    const Vertex pv = need(phi[i]->apply(v), "phi undefined at " + v.brief());
    same(p.at("phi_v").get<Vertex>(), pv, "phi(v)");
    const Vertex phgv = need(phi[i]->apply(hgv), "phi undefined at " + hgv.brief());
    same(p.at("phi_h_g_v").get<Vertex>(), phgv, "phi(h(g(v)))");
    const Vertex fpv = f.image(pv);
    same(p.at("f_phi_v").get<Vertex>(), fpv, "f(phi(v))");
    if (phgv != fpv) throw Reject{"phi(h(g(v))) != f(phi(v)) at " + v.brief()};
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const auto& [v, gv] : g.pairs())
      if (!seen.count({i, v})) throw Reject{"no checked point for member " + std::to_string(i) + " at " + v.brief()};
  return Verdict{true, "", seen.size()};
}

Verdict verify_c0(const json& c) {
  AutomorphismOracle f = AutomorphismOracle::replay(c.at("f_ref"));
  AutomorphismOracle f2 = AutomorphismOracle::replay(c.at("h_ref"));
  const auto phi = c.at("phi").get<PartialAutomorphism>();
  if (auto err = phi.violation()) throw Reject{std::string("phi is not a partial automorphism: ") + err->what()};
  std::set<Vertex> seen;
  for (const auto& p : c.at("checked_points")) {
    const Vertex v = p.at("v").get<Vertex>();
    if (!seen.insert(v).second) throw Reject{"duplicate checked point " + v.brief()};
    const Vertex fv = need(f.known_image(v), "f is not built at " + v.brief());
    same(p.at("f_v").get<Vertex>(), fv, "f(v)");
    const Vertex pv = need(phi.apply(v), "phi undefined at " + v.brief());
    same(p.at("phi_v").get<Vertex>(), pv, "phi(v)");
    const Vertex pfv = need(phi.apply(fv), "phi undefined at " + fv.brief());
    same(p.at("phi_f_v").get<Vertex>(), pfv, "phi(f(v))");
    const Vertex f2pv = need(f2.known_image(pv), "f' is not built at " + pv.brief());
    same(p.at("f2_phi_v").get<Vertex>(), f2pv, "f'(phi(v))");
    if (pfv != f2pv) throw Reject{"phi(f(v)) != f'(phi(v)) at " + v.brief()};
  }
  for (const auto& [v, pv] : phi.pairs()) {
    auto fv = f.known_image(v);
    if (fv && phi.in_domain(*fv) && !seen.count(v)) throw Reject{"no checked point at " + v.brief()};
  }
  return Verdict{true, "", seen.size()};
}

}  // namespace

json translation_certificate(TranslationResult& result, const std::string& mode) {
  VertexTableWriter table;
  GoodTriple& t = result.triple();
  json points = json::array();
  for (std::size_t i = 0; i < t.family().size(); ++i)
    for (const auto& [v, gv] : t.g().pairs()) {
      const Vertex hgv = t.family()[i].image(gv);
      const Vertex pv = *t.phi(i).apply(v);
      auto phgv = t.phi(i).apply(hgv);
      if (!phgv) throw Error(Errc::implementation_fault, "phi misses h(g(v)) for v = " + v.brief(), {v});
      points.push_back({{"member", i},
                        {"v", v},
                        {"g_v", gv},
                        {"h_g_v", hgv},
                        {"phi_v", pv},
                        {"phi_h_g_v", *phgv},
                        {"f_phi_v", t.target().image(pv)}});
    }
  // Logs last, so that they include every query made above.
  json c{{"kind", "conjugation"},
         {"mode", mode},
         {"g", t.g()},
         {"phi", phi_groups(t)},
         {"checked_points", std::move(points)},
         {"family_ref", t.family().log()},
         {"f_ref", t.target().log()}};
  if (mode == "truss" && t.family().size() == 2) c["h_ref"] = t.family()[1].log();
  table.attach(c);
  return c;
}

json c0_certificate(AutomorphismOracle& f, AutomorphismOracle& f2, const PartialAutomorphism& phi) {
  VertexTableWriter table;
  json points = json::array();
  for (const auto& [v, pv] : phi.pairs()) {
    auto fv = f.known_image(v);
    if (!fv || !phi.in_domain(*fv)) continue;
    points.push_back({{"v", v},
                      {"f_v", *fv},
                      {"phi_v", pv},
                      {"phi_f_v", *phi.apply(*fv)},
                      {"f2_phi_v", f2.image(pv)}});
  }
  json c{{"kind", "conjugation"},
         {"mode", "c0"},
         {"phi", phi},
         {"checked_points", std::move(points)},
         {"f_ref", f.log()},
         {"h_ref", f2.log()}};
  table.attach(c);
  return c;
}

Verdict verify_certificate(const json& c) {
  try {
    if (!c.is_object() || c.value("kind", "") != "conjugation") return {false, "not a conjugation certificate", 0};
    const std::string mode = c.value("mode", "");
    VertexTableReader table(c);
    if (mode == "translate" || mode == "truss") {
      Verdict v = verify_translation(c);
      if (mode == "truss") {
        const json& fam = c.at("family_ref");
        if (fam.size() != 2 || fam[0].at("kind") != "identity") return {false, "truss family must be {id, h}", 0};
        if (c.contains("h_ref") && c.at("h_ref") != fam[1]) return {false, "h_ref differs from the family member", 0};
        if (c.at("f_ref").at("kind") != "c0") return {false, "truss target is not a c0 oracle", 0};
      }
      return v;
    }
    if (mode == "c0") return verify_c0(c);
    return {false, "unknown certificate mode '" + mode + "'", 0};
  } catch (const Reject& r) {
    return {false, r.reason, 0};
  } catch (const Error& e) {
    return {false, std::string(errc_name(e.code())) + ": " + e.what(), 0};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what(), 0};
  }
}

}  // namespace rado
