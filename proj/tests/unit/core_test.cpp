#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "rado/json_io.hpp"
#include "rado/partial_automorphism.hpp"

using namespace rado;

TEST(Vertex, SmallAndLargeRoundTrip) {
  EXPECT_EQ(Vertex(5).to_string(), "5");
  const Vertex big = Vertex::power_of_two(64);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "{64}");
  EXPECT_EQ(Vertex::parse("18446744073709551616"), big);
  EXPECT_EQ(Vertex::parse("{64}"), big);
  EXPECT_EQ(Vertex::parse("{3,0}"), Vertex(9));
  EXPECT_EQ(Vertex::from_exponents({Vertex(63), Vertex(0)}).to_u64(), (std::uint64_t{1} << 63) + 1);
}

TEST(Vertex, OrderingMatchesNumbers) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() >> (rng() % 64), b = rng() >> (rng() % 64);
    EXPECT_EQ(Vertex(a) < Vertex(b), a < b);
  }
  const Vertex two64 = Vertex::power_of_two(64);
  const Vertex tower = Vertex::power_of_two(two64);
  EXPECT_LT(Vertex(~std::uint64_t{0}), two64);
  EXPECT_LT(two64, two64.successor());
  EXPECT_LT(two64.successor(), tower);
  EXPECT_TRUE(tower.bit(two64));
  EXPECT_FALSE(tower.bit(two64.successor()));
  EXPECT_EQ(Vertex(~std::uint64_t{0}).successor(), two64);
}

TEST(Vertex, DecimalParseOfLargeValues) {
  // 2^64 + 2^1 + 2^0
  EXPECT_EQ(Vertex::parse("18446744073709551619"), Vertex::from_exponents({Vertex(64), Vertex(1), Vertex(0)}));
  EXPECT_THROW(Vertex::parse("12a"), Error);
  EXPECT_THROW(Vertex::parse("{3,3"), Error);
}

TEST(Vertex, BriefElides) {
  Vertex v = 70;
  for (int i = 0; i < 6; ++i) v = Vertex::from_exponents({Vertex::power_of_two(v), v, Vertex(1)});
  EXPECT_LE(v.brief(40).size(), 43u);
  EXPECT_NE(v.brief(40).find("..."), std::string::npos);
}

TEST(Adjacency, Examples) {
  EXPECT_TRUE(adjacent(0, 1));
  EXPECT_FALSE(adjacent(0, 2));
  EXPECT_FALSE(adjacent(7, 7));
}

TEST(Adjacency, MatchesBitScanAndIsSymmetric) {
  for (std::uint64_t u = 0; u < 80; ++u)
    for (std::uint64_t v = 0; v < 300; ++v) {
      EXPECT_EQ(adjacent(u, v), brute::adj64(u, v));
      EXPECT_EQ(adjacent(u, v), adjacent(v, u));
    }
}

TEST(Realize, Examples) {
  EXPECT_EQ(realize({{0, true}, {1, false}, {2, true}}), Vertex(5));
  EXPECT_EQ(realize({}), Vertex(1));
  EXPECT_EQ(realize({{0, true}}, {1}), Vertex(3));
}

TEST(Realize, AgreesWithScan) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::map<std::uint64_t, bool> tau;
    TypeFunction t;
    const int k = static_cast<int>(rng() % 8);
    for (int i = 0; i < k; ++i) {
      const std::uint64_t w = rng() % 20;
      const bool b = rng() & 1U;
      if (tau.emplace(w, b).second) t.assign(w, b);
    }
    std::set<std::uint64_t> forbid;
    VertexSet f;
    for (int i = 0; i < static_cast<int>(rng() % 20); ++i) {
      const std::uint64_t x = rng() % 2048;
      forbid.insert(x);
      f.insert(x);
    }
    const std::uint64_t bound = rng() % 64;
    auto expect = brute::scan_realize(tau, forbid, bound);
    ASSERT_TRUE(expect);
    EXPECT_EQ(realize(t, f, bound), Vertex(*expect)) << trial;
  }
}

TEST(Realize, HugeDomainStillRealizes) {
  const Vertex big = Vertex::power_of_two(Vertex::power_of_two(70));
  TypeFunction tau{{big, true}, {0, false}, {5, true}};
  const Vertex v = realize(tau);
  EXPECT_GT(v, big);
  EXPECT_TRUE(adjacent(big, v));
  EXPECT_FALSE(adjacent(0, v));
  EXPECT_TRUE(adjacent(5, v));
  const Vertex w = realize(tau, {v});
  EXPECT_GT(w, v);
  EXPECT_TRUE(adjacent(big, w) && !adjacent(0, w) && adjacent(5, w));
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph({0, 1}).size(), 1u);
  EXPECT_TRUE(induced_subgraph({0, 2}).empty());
  EXPECT_TRUE(induced_subgraph({}).empty());
  EXPECT_NE(to_dot({0, 1}).find("\"0\" -- \"1\""), std::string::npos);
}

TEST(PartialAutomorphism, CheckExamples) {
  EXPECT_NO_THROW(PartialAutomorphism::check({{0, 1}, {1, 0}}));
  try {
    PartialAutomorphism::check({{0, 0}, {1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::edge_violation);
    EXPECT_EQ(e.witness(), (std::vector<Vertex>{0, 1}));
  }
  try {
    PartialAutomorphism::check({{0, 3}, {1, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_injective);
  }
  EXPECT_TRUE(PartialAutomorphism::check({}).empty());
}

TEST(PartialAutomorphism, CheckMatchesDefinition) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    VertexPairs pairs;
    std::map<std::uint64_t, std::uint64_t> m;
    for (int i = 0; i < static_cast<int>(rng() % 5); ++i) {
      const std::uint64_t a = rng() % 10, b = rng() % 10;
      if (m.emplace(a, b).second) pairs.emplace_back(a, b);
    }
    bool ok = true;
    std::set<std::uint64_t> ran;
    for (auto [a, b] : m) ok = ok && ran.insert(b).second;
    for (auto [a, b] : m)
      for (auto [c, d] : m) ok = ok && brute::adj64(a, c) == brute::adj64(b, d);
    EXPECT_EQ(PartialAutomorphism::unchecked(pairs).valid(), ok);
  }
}

TEST(PartialAutomorphism, LookupsAndEnds) {
  const auto g = PartialAutomorphism::check({{0, 1}});
  EXPECT_EQ(g.apply(0), Vertex(1));
  EXPECT_FALSE(g.apply(5));
  EXPECT_EQ(g.inverse_apply(1), Vertex(0));
  EXPECT_EQ(rd(g), (VertexSet{0, 1}));
  EXPECT_TRUE(rd({}).empty());
  EXPECT_EQ(forward_end(0, g), Vertex(1));
  EXPECT_EQ(forward_end(5, {}), Vertex(5));
  EXPECT_EQ(backward_end(1, g), Vertex(0));
  EXPECT_EQ(forward_end(forward_end(0, g), g), forward_end(0, g));
  const auto swap = PartialAutomorphism::check({{0, 1}, {1, 0}});
  try {
    forward_end(0, swap);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cycle_detected);
  }
}

TEST(PartialAutomorphism, OrbitPaths) {
  auto chain = orbit_paths(PartialAutomorphism::check({{0, 1}}));
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_FALSE(chain[0].cycle);
  EXPECT_EQ(chain[0].points, (std::vector<Vertex>{0, 1}));
  auto cyc = orbit_paths(PartialAutomorphism::check({{0, 1}, {1, 0}}));
  ASSERT_EQ(cyc.size(), 1u);
  EXPECT_TRUE(cyc[0].cycle);
  EXPECT_TRUE(orbit_paths({}).empty());

  // Random maps: each point of rd(g) appears exactly once and chains follow g.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint64_t> perm(12);
    for (std::uint64_t i = 0; i < 12; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexPairs pairs;
    for (std::uint64_t i = 0; i < 12; ++i)
      if (rng() % 3) pairs.emplace_back(i, perm[i]);
    const auto g = PartialAutomorphism::unchecked(pairs);
    std::multiset<Vertex> seen;
    for (const auto& p : orbit_paths(g)) {
      seen.insert(p.points.begin(), p.points.end());
      for (std::size_t k = 0; k + 1 < p.points.size(); ++k) EXPECT_EQ(g.apply(p.points[k]), p.points[k + 1]);
      if (p.cycle) EXPECT_EQ(g.apply(p.points.back()), p.points.front());
      else EXPECT_FALSE(g.apply(p.points.back()));
    }
    const VertexSet r = rd(g);
    EXPECT_EQ(seen.size(), r.size());
    EXPECT_EQ(VertexSet(seen.begin(), seen.end()), r);
  }
}

TEST(PartialAutomorphism, ComposePath) {
  const auto g = PartialAutomorphism::check({{0, 1}});
  const MapStep fwd = step(g, 1), back = step(g, -1);
  EXPECT_EQ(compose_path(0, std::vector<MapStep>{fwd}), Vertex(1));
  EXPECT_FALSE(compose_path(0, std::vector<MapStep>{fwd, fwd}));
  EXPECT_EQ(compose_path(1, std::vector<MapStep>{back}), Vertex(0));
}

TEST(Json, VertexTableRoundTrip) {
  const Vertex a = Vertex::power_of_two(Vertex::power_of_two(100));
  const Vertex b = Vertex::from_exponents({a, Vertex::power_of_two(100), Vertex(3)});
  json doc;
  {
    VertexTableWriter w;
    doc["xs"] = std::vector<Vertex>{a, b, 7, a};
    w.attach(doc);
  }
  EXPECT_TRUE(doc.contains("vertices"));
  EXPECT_EQ(doc["xs"][0], doc["xs"][3]);
  VertexTableReader r(doc);
  EXPECT_EQ(doc["xs"].get<std::vector<Vertex>>(), (std::vector<Vertex>{a, b, 7, a}));
  // Without a writer the brace form is used.
  EXPECT_EQ(json(b).get<Vertex>(), b);
  EXPECT_THROW(json("#99").get<Vertex>(), Error);
}
