#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rado/cli.hpp"
#include "rado/sampler.hpp"
#include "rado/translator.hpp"

using namespace rado;

TEST(Sampler, CoreIsValidAndChainsOnly) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto o = sample(seed, 6, false);
    EXPECT_TRUE(o.core().valid());
    const auto r = report(o, 10, seed);
    EXPECT_EQ(r.closed_cycle_count, 0u);
    EXPECT_EQ(r.orbit_chain_count, orbit_paths(o.core()).size());
    ASSERT_TRUE(r.witness_success_rate);
    EXPECT_GE(*r.witness_success_rate, 0.0);
    EXPECT_LE(*r.witness_success_rate, 1.0);
  }
}

TEST(Sampler, DeterministicAndReplayable) {
  auto a = sample(42, 5, true), b = sample(42, 5, true);
  EXPECT_EQ(a.core(), b.core());
  EXPECT_EQ(AutomorphismOracle::replay(a.log()).core(), a.core());
  std::size_t cycles = 0, chains = 0;
  for (const auto& p : orbit_paths(a.core())) (p.cycle ? cycles : chains) += 1;
  const auto r = report(a, 0);
  EXPECT_EQ(r.closed_cycle_count, cycles);
  EXPECT_EQ(r.orbit_chain_count, chains);
  EXPECT_FALSE(r.witness_success_rate);
  EXPECT_EQ(r.to_json()["witness_success_rate"], "n/a");
  EXPECT_EQ(r.to_json()["sampling_rule"], sampling_rule);
}

TEST(Sampler, IdentityReportUsesPlainRealize) {
  // No touched vertices: the trial type is ({0},{1}); realize gives 5,
  // which lies outside the singleton orbits of 0 and 1.
  const auto r = report(AutomorphismOracle::identity(), 3);
  ASSERT_TRUE(r.witness_success_rate);
  EXPECT_DOUBLE_EQ(*r.witness_success_rate, 1.0);
}

namespace {

struct Run {
  int code;
  json out;
  std::string raw;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  Run r{code, nullptr, out.str() + err.str()};
  const std::string text = out.str().empty() ? err.str() : out.str();
  if (!text.empty() && text[0] == '{') r.out = json::parse(text);
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rado_test_" + name)).string();
}

}  // namespace

TEST(Cli, Basics) {
  auto r = invoke({"adj", "0", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, json({{"adjacent", true}}));
  r = invoke({"realize", "--tau", "0:1,1:0,2:1"});
  EXPECT_EQ(r.out, json({{"vertex", 5}}));
  r = invoke({"realize", "--tau", "0:1", "--forbid", "1"});
  EXPECT_EQ(r.out, json({{"vertex", 3}}));
  r = invoke({"adj", "0", "1", "--bogus"});
  EXPECT_EQ(r.code, 2);
  r = invoke({});
  EXPECT_EQ(r.code, 2);
  r = invoke({"realize", "--tau", "0:2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out["error"]["code"], "ParseError");
  r = invoke({"export-dot", "--m", "0,1"});
  EXPECT_NE(r.out["dot"].get<std::string>().find("\"0\" -- \"1\""), std::string::npos);
}

TEST(Cli, BuildersSplitAndSample) {
  auto r = invoke({"build-fp", "--pattern", "011", "--depth", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["kind"], "fp");
  r = invoke({"build-c0", "--depth", "2", "--seed", "4"});
  EXPECT_EQ(r.out["kind"], "c0");
  r = invoke({"split", "--family", "id;pairs:0-1", "--m", "0,1", "--tau", "0:1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.contains("vertex"));
  r = invoke({"sample", "--seed", "2", "--depth", "4"});
  EXPECT_EQ(r.out["closed_cycle_count"], 0);
  EXPECT_EQ(r.out["sampling_rule"], sampling_rule);
}

TEST(Cli, GoodCheckNamesPlantedCondition) {
  std::vector<AutomorphismOracle> one;
  one.push_back(AutomorphismOracle::identity());
  auto t = GoodTriple::init(CompactFamily(std::move(one)), build_c0(3, 2));
  const Vertex a = t.target().touched().front();
  t.set_g_unchecked(PartialAutomorphism::check({{0, 0}}));
  t.set_phi_unchecked(0, PartialAutomorphism::check({{0, a}}));
  t.set_m_unchecked({0});
  const std::string path = temp_path("bad.json");
  std::ofstream(path) << t.snapshot().dump();
  auto r = invoke({"good-check", "--snapshot", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out["error"]["condition"], "(iv)");
}

TEST(Cli, TranslateTrussConjugateVerify) {
  const std::string snap = temp_path("snap.json"), cert = temp_path("cert.json"), trace = temp_path("trace.json");
  auto r = invoke({"--trace", trace, "translate", "--family", "id", "--family", "pairs:0-1", "--steps", "6",
                "--snapshot-out", snap, "--certificate-out", cert});
  ASSERT_EQ(r.code, 0) << r.raw;
  EXPECT_EQ(r.out["steps_run"], 6);
  EXPECT_TRUE(std::filesystem::exists(trace));
  EXPECT_EQ(invoke({"good-check", "--snapshot", snap}).code, 0);
  EXPECT_EQ(invoke({"verify", "--certificate", cert}).code, 0);

  r = invoke({"truss", "--h", "pairs:0-1", "--steps", "6", "--certificate-out", cert});
  ASSERT_EQ(r.code, 0) << r.raw;
  EXPECT_EQ(r.out["certificate"]["mode"], "truss");
  EXPECT_EQ(invoke({"verify", "--certificate", cert}).code, 0);

  r = invoke({"conjugate-c0", "--seed-a", "1", "--seed-b", "2", "--depth", "3", "--certificate-out", cert});
  ASSERT_EQ(r.code, 0) << r.raw;
  EXPECT_EQ(invoke({"verify", "--certificate", cert}).code, 0);

  std::ofstream(cert) << "{\"kind\":\"conjugation\",\"mode\":\"c0\"}";
  r = invoke({"verify", "--certificate", cert});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out["error"]["code"], "CertificateRejected");

  r = invoke({"truss", "--h", "pairs:0-1,1-0", "--steps", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out["error"]["code"], "FiniteOrbitsUnsupported");
}
