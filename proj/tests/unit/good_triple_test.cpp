#include <gtest/gtest.h>

#include "brute.hpp"
#include "rado/translator.hpp"

using namespace rado;

namespace {

CompactFamily fam(std::vector<AutomorphismOracle> ms) { return CompactFamily(std::move(ms)); }

CompactFamily id_and(AutomorphismOracle h) {
  std::vector<AutomorphismOracle> ms;
  ms.push_back(AutomorphismOracle::identity());
  ms.push_back(std::move(h));
  return fam(std::move(ms));
}

AutomorphismOracle shift01() { return AutomorphismOracle::seeded(PartialAutomorphism::check({{0, 1}})); }

}  // namespace

TEST(GoodTriple, InitPassesAndRejectsFiniteOrbits) {
  auto t = GoodTriple::init(id_and(shift01()), build_c0(1, 2));
  EXPECT_TRUE(t.check().ok);
  EXPECT_TRUE(t.find_bad().empty());
  EXPECT_TRUE(t.find_ugly().empty());
  EXPECT_TRUE(brute::evaluate(t).empty());

  try {
    GoodTriple::init(id_and(AutomorphismOracle::seeded(PartialAutomorphism::check({{0, 1}, {1, 0}}))), build_c0(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::finite_orbits_unsupported);
  }
  EXPECT_NO_THROW(GoodTriple::init(id_and(shift01()), build_fp({true}, 3, 2)));
  try {
    GoodTriple::init(id_and(shift01()), build_fp({false}, 3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::target_not_star0);
  }
}

TEST(GoodTriple, ExtensionStepsKeepItGood) {
  auto t = GoodTriple::init(id_and(shift01()), build_c0(4, 2));
  t.add_to_m({0});
  t.extend_phi_all(0);
  for (std::size_t i = 0; i < 2; ++i) {
    ASSERT_TRUE(t.phi(i).in_domain(0));
    const Vertex z = *t.phi(i).apply(0);
    EXPECT_FALSE(adjacent(z, t.target().image(z)));
  }
  EXPECT_TRUE(t.check().ok);
  t.extend_phi_all(0);  // idempotent

  const VertexSet k0 = family_image(t.family(), {0});
  t.add_to_m(k0);
  for (const auto& w : k0) t.extend_phi_all(w);
  const Vertex vbar = t.extend_domain_g(0);
  EXPECT_EQ(t.g().apply(0), vbar);
  auto report = t.check();
  EXPECT_TRUE(report.ok) << report.condition << " " << report.detail;
  EXPECT_TRUE(brute::evaluate(t).empty());

  const Vertex pre = t.extend_range_g(0);
  EXPECT_EQ(t.g().apply(pre), Vertex(0));
  report = t.check();
  EXPECT_TRUE(report.ok) << report.condition << " " << report.detail;

  const Vertex z = t.target().orbit_representatives().front();
  t.extend_phi_range(z);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(t.covers_orbit(i, z));
  EXPECT_TRUE(t.check().ok);
  EXPECT_TRUE(brute::evaluate(t).empty());
}

TEST(GoodTriple, ExtendPhiGuards) {
  std::vector<AutomorphismOracle> same;
  same.push_back(AutomorphismOracle::identity());
  same.push_back(AutomorphismOracle::identity());
  auto t = GoodTriple::init(fam(std::move(same)), build_c0(2, 2));
  t.add_to_m({0});
  t.extend_phi(0, 0);
  EXPECT_TRUE(t.phi(1).in_domain(0));  // same class
  try {
    t.extend_phi(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::already_defined);
  }
  try {
    t.extend_domain_g(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::precondition_phi_missing);
  }
}

TEST(GoodTriple, PlantedConjugationFailure) {
  std::vector<AutomorphismOracle> one;
  one.push_back(AutomorphismOracle::identity());
  auto t = GoodTriple::init(fam(std::move(one)), build_c0(3, 2));
  const Vertex a = t.target().touched().front();
  t.set_g_unchecked(PartialAutomorphism::check({{0, 0}}));
  t.set_phi_unchecked(0, PartialAutomorphism::check({{0, a}}));
  t.set_m_unchecked({0});
  const auto r = t.check();
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.condition, "(iv)");
  EXPECT_EQ(r.witness, std::vector<Vertex>{0});
  EXPECT_TRUE(brute::evaluate(t).count("(iv)"));
}

TEST(GoodTriple, PlantedBadSituationIsFound) {
  std::vector<AutomorphismOracle> two;
  two.push_back(AutomorphismOracle::identity());
  two.push_back(AutomorphismOracle::identity());
  auto t = GoodTriple::init(fam(std::move(two)), build_c0(6, 3));
  auto& f = t.target();
  auto pts = f.touched();
  for (std::uint64_t i = 2; i < 24; ++i) pts.push_back(i);
  // φ_0 = {0↦a, 1↦c}, φ_1 = {0↦a2, 1↦c2}, disagreeing on a R f(c).
  bool planted = false;
  for (const auto& a : pts)
    for (const auto& c : pts)
      for (const auto& a2 : pts)
        for (const auto& c2 : pts) {
          if (planted || a == c || a2 == c2 || !adjacent(a, c) || !adjacent(a2, c2)) continue;
          if (adjacent(a, f.image(c)) == adjacent(a2, f.image(c2))) continue;
          t.set_phi_unchecked(0, PartialAutomorphism::check({{0, a}, {1, c}}));
          t.set_phi_unchecked(1, PartialAutomorphism::check({{0, a2}, {1, c2}}));
          planted = true;
        }
  ASSERT_TRUE(planted);
  t.set_m_unchecked({0, 1});
  const auto bad = t.find_bad();
  ASSERT_FALSE(bad.empty());
  bool found = false;
  for (const auto& b : bad) found = found || (b.h == 0 && b.h2 == 1 && b.x == Vertex(0) && b.x2 == Vertex(0) && b.y == Vertex(1));
  EXPECT_TRUE(found);
  EXPECT_TRUE(brute::evaluate(t).count("(x)"));
  EXPECT_FALSE(t.check().ok);
}

TEST(GoodTriple, PlantedUglySituationIsFound) {
  auto t = GoodTriple::init(id_and(shift01()), build_c0(7, 3));
  auto& f = t.target();
  const auto pts = f.touched();
  bool planted = false;
  for (const auto& a : pts)
    for (const auto& c : pts) {
      if (planted || a == c || !adjacent(a, c) || !adjacent(a, f.image(c))) continue;
      t.set_phi_unchecked(0, PartialAutomorphism::check({{0, a}, {1, c}}));
      planted = true;
    }
  ASSERT_TRUE(planted);
  t.set_m_unchecked({0, 1});
  const auto ugly = t.find_ugly();
  ASSERT_FALSE(ugly.empty());
  EXPECT_EQ(ugly[0].h, 0u);
  EXPECT_EQ(ugly[0].h2, 1u);
  EXPECT_EQ(ugly[0].x, Vertex(0));
  EXPECT_EQ(ugly[0].y, Vertex(1));
  EXPECT_TRUE(brute::evaluate(t).count("(ix)"));
}

TEST(GoodTriple, SnapshotRoundTrip) {
  auto r = translate(id_and(shift01()), build_c0(9, 2), 4);
  const json snap = r.triple().snapshot();
  for (const char* key : {"g", "M", "phi", "family_ref", "target_ref"}) EXPECT_TRUE(snap.contains(key));
  EXPECT_TRUE(snap["phi"][0].contains("fingerprint"));
  auto t = GoodTriple::from_snapshot(json::parse(snap.dump()));
  EXPECT_EQ(t.g(), r.triple().g());
  EXPECT_EQ(t.m(), r.triple().m());
  EXPECT_TRUE(t.check().ok);
  EXPECT_TRUE(brute::evaluate(t).empty());
}

TEST(Translate, ScheduleAndIdentity) {
  std::vector<AutomorphismOracle> one;
  one.push_back(AutomorphismOracle::identity());
  auto r = translate(fam(std::move(one)), build_c0(1, 2), 8);
  EXPECT_EQ(r.steps_run(), 8u);
  EXPECT_GE(r.checks_run(), 8u);
  for (const auto& round : r.rounds()) {
    if (round.round % 2 == 0) EXPECT_GE(round.vertices_covered, round.round / 2);
    else EXPECT_GE(round.representatives_covered, (round.round + 1) / 2);
  }
  auto& t = r.triple();
  for (const auto& [v, gv] : t.g().pairs())
    EXPECT_EQ(t.phi(0).apply(t.family()[0].image(gv)), t.target().image(*t.phi(0).apply(v)));
  EXPECT_TRUE(t.check().ok);
}

TEST(Translate, ZeroStepsAndLazyViews) {
  auto r = translate(id_and(shift01()), build_c0(2, 2), 0);
  EXPECT_TRUE(r.triple().g().empty());
  EXPECT_TRUE(r.triple().check().ok);
  const Vertex g7 = r.g(7);
  EXPECT_EQ(r.g_inverse(g7), Vertex(7));
  const Vertex pre = r.g_inverse(3);
  EXPECT_EQ(r.g(pre), Vertex(3));
  r.phi(1, 11);
  EXPECT_TRUE(r.triple().check().ok);
  for (const auto& e : r.trace()) EXPECT_TRUE(e.check_passed);
}

TEST(ConjugateC0, DepthZeroAndIdentity) {
  auto f = build_c0(1, 2), f2 = build_c0(2, 2);
  EXPECT_TRUE(conjugate_c0(f, f2, 0).empty());
  const auto phi = conjugate_c0(f, f2, 6);
  EXPECT_TRUE(phi.valid());
  std::size_t checked = 0;
  for (const auto& [v, pv] : phi.pairs()) {
    auto fv = f.known_image(v);
    if (!fv || !phi.in_domain(*fv)) continue;
    EXPECT_EQ(phi.apply(*fv), f2.image(pv));
    ++checked;
  }
  EXPECT_GE(checked, 6u);

  auto same_a = build_c0(5, 2), same_b = build_c0(5, 2);
  const auto psi = conjugate_c0(same_a, same_b, 3);
  EXPECT_TRUE(psi.valid());

  auto fp = build_fp({true}, 1, 2);
  try {
    conjugate_c0(fp, f2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_c0_built);
  }
}

TEST(Certificates, TrussVerifiesAndRejectsTampering) {
  auto r = truss_factor(shift01(), 8, 3);
  const Verdict ok = verify_certificate(r.certificate);
  EXPECT_TRUE(ok.ok) << ok.reason;
  EXPECT_EQ(ok.points, 2 * r.translation.triple().g().size());

  json bad = r.certificate;
  bad["checked_points"].erase(0);
  EXPECT_FALSE(verify_certificate(bad).ok);

  try {
    truss_factor(AutomorphismOracle::seeded(PartialAutomorphism::check({{0, 1}, {1, 0}})), 4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::finite_orbits_unsupported);
  }

  auto id = truss_factor(AutomorphismOracle::identity(), 6, 1);
  EXPECT_EQ(id.translation.triple().classes().size(), 1u);
  EXPECT_TRUE(verify_certificate(id.certificate).ok);
}

TEST(Certificates, C0CertificateVerifies) {
  auto f = build_c0(3, 2), f2 = build_c0(4, 2);
  const auto phi = conjugate_c0(f, f2, 4);
  const json c = c0_certificate(f, f2, phi);
  const Verdict v = verify_certificate(json::parse(c.dump()));
  EXPECT_TRUE(v.ok) << v.reason;
  json bad = c;
  bad["checked_points"][0]["phi_v"] = 12345;
  EXPECT_FALSE(verify_certificate(bad).ok);
}
