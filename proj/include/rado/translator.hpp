// The translation loop that conjugates a finite family into the class of a
// target, the C₀ back-and-forth conjugator and the Truss-style factoring.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rado/good_triple.hpp"

namespace rado {

struct TraceEntry {
  std::size_t round = 0;  // 0 for lazy ingestion outside the schedule
  std::string op;
  Vertex input;
  std::optional<Vertex> output;
  bool check_passed = true;

  json to_json() const;
};

struct RoundSummary {
  std::size_t round = 0;
  std::string kind;  // "forth" (even rounds) or "range" (odd rounds)
  Vertex picked;
  std::size_t vertices_covered = 0;         // least k with v_k ∉ dom(g) ∩ ran(g)
  std::size_t representatives_covered = 0; // leading target orbits covered by every φ

  json to_json() const;
};

struct TranslateOptions {
  bool check_every_step = true;
};

class TranslationResult {
 public:
  TranslationResult(GoodTriple triple, TranslateOptions options);

  // Rounds are numbered from 1; odd rounds cover target orbits, even rounds
  // put the least missing vertex into dom(g) ∩ ran(g).
  void run_rounds(std::size_t count);

  // Oracle-like views; unbuilt values are constructed on demand.
  Vertex g(const Vertex& v);
  Vertex g_inverse(const Vertex& v);
  Vertex phi(std::size_t member, const Vertex& v);

  GoodTriple& triple() noexcept { return triple_; }
  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }
  const std::vector<RoundSummary>& rounds() const noexcept { return rounds_; }
  std::size_t steps_run() const noexcept { return rounds_.size(); }
  std::size_t checks_run() const noexcept { return checks_; }

  std::size_t vertices_covered() const;
  std::size_t representatives_covered();

  json trace_json() const;

 private:
  void even_round(std::size_t round);
  void odd_round(std::size_t round);
  void ingest(const Vertex& v, std::size_t round);
  void record(std::size_t round, std::string op, const Vertex& input, std::optional<Vertex> output);

  GoodTriple triple_;
  TranslateOptions options_;
  std::vector<TraceEntry> trace_;
  std::vector<RoundSummary> rounds_;
  std::size_t checks_ = 0;
};

TranslationResult translate(CompactFamily family, AutomorphismOracle target, std::size_t steps,
                            TranslateOptions options = {});

// φ with φ ∘ f = f' ∘ φ on built points, after `depth` forth and back
// rounds, materialized up to `depth` steps along each matched orbit.
PartialAutomorphism conjugate_c0(AutomorphismOracle& f, AutomorphismOracle& f2, std::size_t depth);

struct TrussResult {
  TranslationResult translation;
  json certificate;
};

// Runs translate({id, h}, c0 target): g and h∘g are then conjugate to the
// target on built data, so h = (h∘g)∘g^-1 factors through two C₀ elements.
TrussResult truss_factor(AutomorphismOracle h, std::size_t steps, std::uint64_t seed, std::size_t target_depth = 2);

// --- certificates ------------------------------------------------------------

// mode "translate" or "truss": one checked point per member and v ∈ dom(g).
json translation_certificate(TranslationResult& result, const std::string& mode);
json c0_certificate(AutomorphismOracle& f, AutomorphismOracle& f2, const PartialAutomorphism& phi);

struct Verdict {
  bool ok = false;
  std::string reason;
  std::size_t points = 0;

  json to_json() const;
};

// Replays the embedded oracle logs and recomputes every checked point.
Verdict verify_certificate(const json& certificate);

}  // namespace rado
