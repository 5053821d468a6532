#include <gtest/gtest.h>

#include <random>

#include "rado/splitting.hpp"

using namespace rado;

namespace {

AutomorphismOracle swap01() { return AutomorphismOracle::seeded(PartialAutomorphism::check({{0, 1}, {1, 0}})); }

CompactFamily family_of(std::vector<AutomorphismOracle> ms) { return CompactFamily(std::move(ms)); }

// Members differing on m must be separated at v in both directions.
void expect_separates(CompactFamily& k, const VertexSet& m, const Vertex& v) {
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      if (restriction_fingerprint(k[i], m) == restriction_fingerprint(k[j], m)) continue;
      EXPECT_NE(k[i].image(v), k[j].image(v)) << i << "," << j;
      EXPECT_NE(k[i].preimage(v), k[j].preimage(v)) << i << "," << j;
    }
}

}  // namespace

TEST(SplitFinite, Examples) {
  std::vector<AutomorphismOracle> one;
  one.push_back(AutomorphismOracle::identity());
  auto k1 = family_of(std::move(one));
  EXPECT_EQ(split_finite(k1, {0}, {}), Vertex(1));

  std::vector<AutomorphismOracle> two;
  two.push_back(AutomorphismOracle::identity());
  two.push_back(swap01());
  auto k2 = family_of(std::move(two));
  const Vertex v = split_finite(k2, {}, {});
  EXPECT_NE(k2[1].image(v), v);

  std::vector<AutomorphismOracle> same;
  same.push_back(AutomorphismOracle::identity());
  same.push_back(AutomorphismOracle::identity());
  auto k3 = family_of(std::move(same));
  EXPECT_EQ(split_finite(k3, {0}, {1}), Vertex(5));

  try {
    split_finite(k3, {0}, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_disjoint);
  }
}

TEST(Split, SingletonFamilyIsPlainRealize) {
  std::vector<AutomorphismOracle> one;
  one.push_back(AutomorphismOracle::identity());
  auto k = family_of(std::move(one));
  EXPECT_EQ(split(k, {{0}, {{0, true}}, 0}), realize({{0, true}}, {}, 0));
  EXPECT_EQ(split(k, {{0}, {{0, true}}, 0}), Vertex(1));
  EXPECT_EQ(split(k, {{0, 1, 2}, {{0, true}, {2, true}}, 9}), realize({{0, true}, {1, false}, {2, true}}, {}, 9));
}

TEST(Split, SwapFamilyAllClauses) {
  std::vector<AutomorphismOracle> two;
  two.push_back(AutomorphismOracle::identity());
  two.push_back(swap01());
  auto k = family_of(std::move(two));
  const Vertex v = split(k, {{0, 1}, {{0, false}, {1, false}}, 1});
  EXPECT_GT(v, Vertex(1));
  EXPECT_FALSE(adjacent(0, v));
  EXPECT_FALSE(adjacent(1, v));
  EXPECT_NE(k[0].image(v), k[1].image(v));
  EXPECT_NE(k[0].preimage(v), k[1].preimage(v));
}

TEST(Split, EqualMembersAddNothing) {
  std::vector<AutomorphismOracle> two;
  two.push_back(AutomorphismOracle::identity());
  two.push_back(AutomorphismOracle::identity());
  auto k = family_of(std::move(two));
  EXPECT_EQ(split(k, {{3, 4}, {{3, true}}, 4}), realize({{3, true}, {4, false}}, {}, 4));
}

TEST(Split, RandomSoundness) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<AutomorphismOracle> ms;
    const std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
      switch (rng() % 4) {
        case 0: ms.push_back(AutomorphismOracle::identity()); break;
        case 1: ms.push_back(AutomorphismOracle::seeded(PartialAutomorphism::check({{0, 1}}), rng())); break;
        case 2: ms.push_back(build_c0(rng() % 100, 1)); break;
        default: ms.push_back(build_fp({true, false}, rng() % 100, 1)); break;
      }
    }
    auto k = family_of(std::move(ms));
    VertexSet m;
    TypeFunction tau;
    for (std::size_t i = 0; i < 1 + rng() % 5; ++i) {
      const Vertex x = rng() % 12;
      m.insert(x);
      if (rng() & 1U) tau.assign(x, rng() & 1U);
    }
    const Vertex bound = rng() % 16;
    const Vertex v = split(k, {m, tau, bound});
    EXPECT_GT(v, bound);
    for (const auto& x : m) EXPECT_EQ(adjacent(x, v), tau.get(x).value_or(false));
    expect_separates(k, m, v);

    const Vertex far = split_far(k, m, tau);
    for (const auto& x : m) {
      EXPECT_EQ(adjacent(x, far), tau.get(x).value_or(false));
      EXPECT_FALSE(dK(k, far, x, 4));
    }
    expect_separates(k, m, far);
  }
}

TEST(SplitFar, Examples) {
  std::vector<AutomorphismOracle> one;
  one.push_back(AutomorphismOracle::identity());
  auto k = family_of(std::move(one));
  const Vertex v = split_far(k, {0, 5}, {});
  EXPECT_FALSE(dK(k, v, 0, 4));

  std::vector<AutomorphismOracle> sw;
  sw.push_back(swap01());
  auto s = family_of(std::move(sw));
  const Vertex w = split_far(s, {0}, {});
  EXPECT_FALSE(dK(s, w, 0, 4));

  EXPECT_NO_THROW(split_far(s, {}, {}));
}
