#include "rado/translator.hpp"

#include <map>

namespace rado {

json TraceEntry::to_json() const {
  json j{{"round", round}, {"op", op}, {"input", input}, {"check_passed", check_passed}};
  j["output"] = output ? json(*output) : json(nullptr);
  return j;
}

json RoundSummary::to_json() const {
  return {{"round", round},
          {"kind", kind},
          {"picked", picked},
          {"vertices_covered", vertices_covered},
          {"representatives_covered", representatives_covered}};
}

TranslationResult::TranslationResult(GoodTriple triple, TranslateOptions options)
    : triple_(std::move(triple)), options_(options) {}

void TranslationResult::record(std::size_t round, std::string op, const Vertex& input, std::optional<Vertex> output) {
  TraceEntry e{round, std::move(op), input, std::move(output), true};
  if (options_.check_every_step) {
    const CheckReport report = triple_.check();
    ++checks_;
    e.check_passed = report.ok;
    if (!report.ok) {
      trace_.push_back(e);
      throw Error(Errc::implementation_fault,
                  "triple is no longer good after " + e.op + " at " + input.brief() + ": " + report.condition + " " +
                      report.detail,
                  report.witness);
    }
  }
  trace_.push_back(std::move(e));
}

std::size_t TranslationResult::vertices_covered() const {
  const auto& g = triple_.g();
  std::uint64_t k = 0;
  while (g.in_domain(Vertex(k)) && g.in_range(Vertex(k))) ++k;
  return static_cast<std::size_t>(k);
}

std::size_t TranslationResult::representatives_covered() {
  const auto reps = triple_.target().orbit_representatives();
  const std::size_t n = triple_.family().size();
  std::size_t k = 0;
  for (; k < reps.size(); ++k) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) all = triple_.covers_orbit(i, reps[k]);
    if (!all) break;
  }
  return k;
}

// {v} ∪ K(v) into M, φ onto all of it, then v into dom(g) and ran(g).
void TranslationResult::ingest(const Vertex& v, std::size_t round) {
  const VertexSet kv = family_image(triple_.family(), {v});
  VertexSet add = kv;
  add.insert(v);
  triple_.add_to_m(add);
  record(round, "add_to_m", v, std::nullopt);

  std::vector<Vertex> order{v};
  for (const auto& w : kv)
    if (w != v) order.push_back(w);
  for (const auto& w : order) {
    for (const auto& c : triple_.classes()) {
      if (triple_.phi(c.front()).in_domain(w)) continue;
      const Vertex z = triple_.extend_phi(c.front(), w);
      record(round, "extend_phi", w, z);
    }
  }
  if (!triple_.g().in_domain(v)) record(round, "extend_domain_g", v, triple_.extend_domain_g(v));
  if (!triple_.g().in_range(v)) record(round, "extend_range_g", v, triple_.extend_range_g(v));
}

void TranslationResult::even_round(std::size_t round) {
  const Vertex v(vertices_covered());
  ingest(v, round);
  rounds_.push_back({round, "forth", v, vertices_covered(), representatives_covered()});
}

void TranslationResult::odd_round(std::size_t round) {
  AutomorphismOracle& f = triple_.target();
  const auto reps = f.orbit_representatives();
  std::size_t k = representatives_covered();
  Vertex z;
  if (k < reps.size()) {
    z = reps[k];
  } else {
    // Every built orbit is covered: open the next one.
    std::uint64_t n = 0;
    while (f.is_touched(Vertex(n))) ++n;
    z = Vertex(n);
    f.touch(z);
  }
  for (const auto& vc : triple_.extend_phi_range(z)) record(round, "extend_phi_range", z, vc);
  rounds_.push_back({round, "range", z, vertices_covered(), representatives_covered()});
}

void TranslationResult::run_rounds(std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t round = rounds_.size() + 1;
    if (round % 2 == 1)
      odd_round(round);
    else
      even_round(round);
  }
}

Vertex TranslationResult::g(const Vertex& v) {
  if (!triple_.g().in_domain(v)) ingest(v, 0);
  return *triple_.g().apply(v);
}

Vertex TranslationResult::g_inverse(const Vertex& v) {
  if (!triple_.g().in_range(v)) ingest(v, 0);
  return *triple_.g().inverse_apply(v);
}

Vertex TranslationResult::phi(std::size_t member, const Vertex& v) {
  if (member >= triple_.family().size()) throw Error(Errc::invalid_argument, "no family member " + std::to_string(member));
  if (!triple_.phi(member).in_domain(v)) {
    triple_.add_to_m({v});
    record(0, "add_to_m", v, std::nullopt);
    const Vertex z = triple_.extend_phi(member, v);
    record(0, "extend_phi", v, z);
  }
  return *triple_.phi(member).apply(v);
}

json TranslationResult::trace_json() const {
  VertexTableWriter table;
  json steps = json::array();
  for (const auto& e : trace_) steps.push_back(e.to_json());
  json rounds = json::array();
  for (const auto& r : rounds_) rounds.push_back(r.to_json());
  json j{{"steps", std::move(steps)}, {"rounds", std::move(rounds)}, {"checks_run", checks_}};
  table.attach(j);
  return j;
}

TranslationResult translate(CompactFamily family, AutomorphismOracle target, std::size_t steps,
                            TranslateOptions options) {
  TranslationResult result(GoodTriple::init(std::move(family), std::move(target)), options);
  result.run_rounds(steps);
  return result;
}

// --- C₀ conjugation ------------------------------------------------------------

namespace {

// φ(point(o1, p1 + n)) = point(o2, p2 + n) on the source and target sides.
struct Anchor {
  OrbitId o1;
  std::int64_t p1;
  OrbitId o2;
  std::int64_t p2;
};

// Matches the orbit of v in `src` with a fresh c0 witness in `dst`. `side`
// selects which anchor coordinates belong to `src`.
void match_orbit(AutomorphismOracle& src, AutomorphismOracle& dst, const Vertex& v, std::vector<Anchor>& anchors,
                 bool src_is_first, std::vector<std::pair<Vertex, Vertex>>& extra) {
  VertexSet a, b;
  std::vector<std::pair<Vertex, Vertex>> found;  // (src point, dst point)
  for (const auto& an : anchors) {
    const OrbitId os = src_is_first ? an.o1 : an.o2;
    const std::int64_t ps = src_is_first ? an.p1 : an.p2;
    const OrbitId od = src_is_first ? an.o2 : an.o1;
    const std::int64_t pd = src_is_first ? an.p2 : an.p1;
    const auto positions = src.neighbor_positions(v, os);
    if (positions.empty()) {
      b.insert(dst.orbit_point(od, pd));
      continue;
    }
    for (std::int64_t p : positions) {
      const Vertex w = src.orbit_point(os, p);
      const Vertex w2 = dst.orbit_point(od, pd + (p - ps));
      a.insert(w2);
      found.emplace_back(w, w2);
    }
  }
  const Vertex v2 = dst.c0_witness(a, b);
  const Anchor an = src_is_first
                        ? Anchor{src.orbit_id(v), src.orbit_position(v), dst.orbit_id(v2), dst.orbit_position(v2)}
                        : Anchor{dst.orbit_id(v2), dst.orbit_position(v2), src.orbit_id(v), src.orbit_position(v)};
  anchors.push_back(an);
  for (const auto& [w, w2] : found) extra.push_back(src_is_first ? std::pair{w, w2} : std::pair{w2, w});
}

Vertex least_unmatched(AutomorphismOracle& o, const std::vector<Anchor>& anchors, bool first) {
  for (std::uint64_t n = 0;; ++n) {
    const Vertex v(n);
    if (!o.is_touched(v)) return v;
    const OrbitId id = o.orbit_id(v);
    bool matched = false;
    for (const auto& an : anchors) matched = matched || (first ? an.o1 : an.o2) == id;
    if (!matched) return v;
  }
}

}  // namespace

PartialAutomorphism conjugate_c0(AutomorphismOracle& f, AutomorphismOracle& f2, std::size_t depth) {
  if (f.kind() != OracleKind::c0 || f2.kind() != OracleKind::c0)
    throw Error(Errc::not_c0_built, "conjugate_c0 needs two oracles built by build_c0");
  if (depth == 0) return {};

  std::vector<Anchor> anchors;
  std::vector<std::pair<Vertex, Vertex>> extra;
  for (std::size_t round = 0; round < depth; ++round) {
    const Vertex v = least_unmatched(f, anchors, true);
    if (!f.is_touched(v)) f.touch(v);
    match_orbit(f, f2, v, anchors, true, extra);

    const Vertex v2 = least_unmatched(f2, anchors, false);
    if (!f2.is_touched(v2)) f2.touch(v2);
    match_orbit(f2, f, v2, anchors, false, extra);
  }

  std::map<Vertex, Vertex> pairs;
  const auto span = static_cast<std::int64_t>(depth);
  for (const auto& an : anchors)
    for (std::int64_t n = -span; n <= span; ++n) pairs.emplace(f.orbit_point(an.o1, an.p1 + n), f2.orbit_point(an.o2, an.p2 + n));
  for (const auto& [w, w2] : extra) pairs.emplace(w, w2);
  return PartialAutomorphism::check({pairs.begin(), pairs.end()});
}

// --- Truss factoring ---------------------------------------------------------------

TrussResult truss_factor(AutomorphismOracle h, std::size_t steps, std::uint64_t seed, std::size_t target_depth) {
  if (!h.declared_finite_orbits().empty())
    throw Error(Errc::finite_orbits_unsupported, "h has finite orbits");
  std::vector<AutomorphismOracle> members;
  members.push_back(AutomorphismOracle::identity());
  members.push_back(std::move(h));
  TranslationResult t = translate(CompactFamily(std::move(members)), build_c0(seed, target_depth), steps);
  json cert = translation_certificate(t, "truss");
  return TrussResult{std::move(t), std::move(cert)};
}

}  // namespace rado
