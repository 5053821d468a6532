#include "rado/oracle.hpp"

#include <algorithm>
#include <set>

namespace rado {

std::string_view kind_name(OracleKind kind) noexcept {
  switch (kind) {
    case OracleKind::identity: return "identity";
    case OracleKind::seeded: return "seeded";
    case OracleKind::sampled: return "sampled";
    case OracleKind::fp: return "fp";
    case OracleKind::c0: return "c0";
  }
  return "identity";
}

std::string_view variant_name(StarVariant variant) noexcept {
  switch (variant) {
    case StarVariant::plain: return "star";
    case StarVariant::no_edge: return "star0";
    case StarVariant::edge: return "star1";
  }
  return "star";
}

StarVariant parse_variant(std::string_view name) {
  if (name == "star") return StarVariant::plain;
  if (name == "star0") return StarVariant::no_edge;
  if (name == "star1") return StarVariant::edge;
  throw Error(Errc::parse_error, "unknown witness variant '" + std::string(name) + "'");
}

std::vector<bool> parse_pattern(std::string_view bits) {
  if (bits.empty()) throw Error(Errc::invalid_argument, "pattern must be non-empty");
  std::vector<bool> out;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(Errc::parse_error, "pattern must be a 0/1 string");
    out.push_back(c == '1');
  }
  return out;
}

std::string pattern_string(const std::vector<bool>& pattern) {
  std::string s;
  for (bool b : pattern) s += b ? '1' : '0';
  return s;
}

AutomorphismOracle AutomorphismOracle::identity() { return AutomorphismOracle{}; }

AutomorphismOracle AutomorphismOracle::seeded(const PartialAutomorphism& seed_core, std::uint64_t seed) {
  if (auto err = seed_core.violation()) throw *err;
  AutomorphismOracle o;
  o.kind_ = OracleKind::seeded;
  o.seed_ = seed;
  o.seed_core_ = seed_core;
  for (const auto& [u, v] : seed_core.pairs()) o.add_pair(u, v);
  for (const auto& path : orbit_paths(seed_core))
    if (path.cycle) o.declared_finite_.insert(path.points.begin(), path.points.end());
  return o;
}

AutomorphismOracle AutomorphismOracle::fp(std::vector<bool> pattern, std::uint64_t seed) {
  if (pattern.empty()) throw Error(Errc::invalid_argument, "pattern must be non-empty");
  AutomorphismOracle o;
  o.kind_ = OracleKind::fp;
  o.seed_ = seed;
  o.pattern_ = std::move(pattern);
  o.rng_.seed(seed);
  return o;
}

AutomorphismOracle AutomorphismOracle::c0(std::uint64_t seed) {
  AutomorphismOracle o;
  o.kind_ = OracleKind::c0;
  o.seed_ = seed;
  o.pattern_ = {true};
  o.rng_.seed(seed);
  return o;
}

AutomorphismOracle build_fp(const std::vector<bool>& pattern, std::uint64_t seed, std::size_t depth) {
  AutomorphismOracle o = AutomorphismOracle::fp(pattern, seed);
  for (std::size_t i = 0; i < depth; ++i) o.run_stage();
  return o;
}

AutomorphismOracle build_c0(std::uint64_t seed, std::size_t depth) {
  AutomorphismOracle o = AutomorphismOracle::c0(seed);
  for (std::size_t i = 0; i < depth; ++i) o.run_stage();
  return o;
}

// --- bookkeeping -------------------------------------------------------------


void AutomorphismOracle::touch_raw(const Vertex& v) {
  if (!touched_set_.insert(v).second) return;
  touched_.push_back(v);
  if (!max_touched_ || *max_touched_ < v) max_touched_ = v;
}

void AutomorphismOracle::add_pair(const Vertex& u, const Vertex& v) {
  fwd_.emplace(u, v);
  bwd_.emplace(v, u);
  touch_raw(u);
  touch_raw(v);
}

Vertex AutomorphismOracle::top_bound() const { return max_touched_.value_or(Vertex{}); }

void AutomorphismOracle::require_constructed(const char* op) const {
  if (!constructed())
    throw Error(Errc::not_constructed, std::string(op) + " needs an fp or c0 oracle, got " + std::string(kind_name(kind_)));
}

std::optional<Vertex> AutomorphismOracle::known_image(const Vertex& v) const {
  if (kind_ == OracleKind::identity) return v;
  auto it = fwd_.find(v);
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> AutomorphismOracle::known_preimage(const Vertex& v) const {
  if (kind_ == OracleKind::identity) return v;
  auto it = bwd_.find(v);
  if (it == bwd_.end()) return std::nullopt;
  return it->second;
}

PartialAutomorphism AutomorphismOracle::core() const {
  return PartialAutomorphism::unchecked(VertexPairs(fwd_.begin(), fwd_.end()));
}

// --- queries -----------------------------------------------------------------

Vertex AutomorphismOracle::image(const Vertex& v) {
  if (auto known = known_image(v)) return *known;
  Vertex u = extend_forward(v);
  log_task({"image", v});
  return u;
}

Vertex AutomorphismOracle::preimage(const Vertex& v) {
  if (auto known = known_preimage(v)) return *known;
  Vertex u = extend_backward(v);
  log_task({"preimage", v});
  return u;
}

Vertex AutomorphismOracle::extend_forward(const Vertex& v) {
  if (!constructed()) return default_forth(v);
  if (!is_touched(v)) register_orbit(v);
  return grow_forward(where_.at(v).first);
}

Vertex AutomorphismOracle::extend_backward(const Vertex& v) {
  if (!constructed()) return default_back(v);
  if (!is_touched(v)) register_orbit(v);
  return grow_backward(where_.at(v).first);
}

// The new image u of v must satisfy adj(core(w), u) = adj(w, v) for every
// w in dom(core); everything else is free, and u lands above all touched
// vertices (and above v), so it is outside rd(core).
Vertex AutomorphismOracle::default_forth(const Vertex& v) {
  TypeFunction tau;
  for (const auto& [w, cw] : fwd_) tau.assign(cw, adjacent(w, v));
  Vertex u = realize(tau, {}, std::max(top_bound(), v));
  add_pair(v, u);
  return u;
}

Vertex AutomorphismOracle::default_back(const Vertex& v) {
  TypeFunction tau;
  for (const auto& [w, cw] : fwd_) tau.assign(w, adjacent(cw, v));
  Vertex u = realize(tau, {}, std::max(top_bound(), v));
  add_pair(u, v);
  return u;
}

// --- constructed oracles -------------------------------------------------------

bool AutomorphismOracle::pattern_edge(std::size_t n) const {
  if (pattern_.empty() || n == 0) return false;
  return !pattern_[(n - 1) % pattern_.size()];
}

OrbitId AutomorphismOracle::register_orbit(const Vertex& v) {
  const OrbitId id = orbits_.size();
  orbits_.push_back(Orbit{{v}, 0});
  prohibitions_.emplace_back();
  where_.emplace(v, std::make_pair(id, std::int64_t{0}));
  touch_raw(v);
  return id;
}

void AutomorphismOracle::enforce_prohibitions(TypeFunction& tau, OrbitId o) const {
  for (const auto& wit : prohibitions_[o]) {
    if (tau.get(wit).value_or(false))
      throw Error(Errc::implementation_fault,
                  "orbit extension forced an edge to prohibited witness " + wit.brief(), {wit});
    tau.assign(wit, false);
  }
}

// Next point u = f(e) at the end e of orbit o. Vertices in ran(core) have
// forced entries; chain starts are free, except that the start of o itself
// sits len steps before u and follows the pattern.
Vertex AutomorphismOracle::grow_forward(OrbitId o) {
  const Vertex e = orbits_[o].points.back();
  const Vertex s = orbits_[o].points.front();
  const std::size_t len = orbits_[o].points.size();
  TypeFunction tau;
  for (const auto& x : touched_) {
    if (auto it = bwd_.find(x); it != bwd_.end()) tau.assign(x, adjacent(it->second, e));
    else tau.assign(x, x == s && pattern_edge(len));
  }
  enforce_prohibitions(tau, o);
  Vertex u = realize(tau, {}, top_bound());
  add_pair(e, u);
  Orbit& orbit = orbits_[o];
  orbit.points.push_back(u);
  where_.emplace(u, std::make_pair(o, orbit.first + static_cast<std::int64_t>(len)));
  return u;
}

Vertex AutomorphismOracle::grow_backward(OrbitId o) {
  const Vertex s = orbits_[o].points.front();
  const Vertex e = orbits_[o].points.back();
  const std::size_t len = orbits_[o].points.size();
  TypeFunction tau;
  for (const auto& x : touched_) {
    if (auto it = fwd_.find(x); it != fwd_.end()) tau.assign(x, adjacent(it->second, s));
    else tau.assign(x, x == e && pattern_edge(len));
  }
  enforce_prohibitions(tau, o);
  Vertex u = realize(tau, {}, top_bound());
  add_pair(u, s);
  Orbit& orbit = orbits_[o];
  orbit.points.push_front(u);
  orbit.first -= 1;
  where_.emplace(u, std::make_pair(o, orbit.first));
  return u;
}

void AutomorphismOracle::touch(const Vertex& v) {
  require_constructed("touch");
  if (is_touched(v)) return;
  register_orbit(v);
  log_task({"touch", v});
}

OrbitId AutomorphismOracle::orbit_id(const Vertex& v) const {
  require_constructed("orbit_id");
  auto it = where_.find(v);
  if (it == where_.end()) throw Error(Errc::untouched_vertex, "vertex " + v.brief() + " is untouched", {v});
  return it->second.first;
}

std::int64_t AutomorphismOracle::orbit_position(const Vertex& v) const {
  require_constructed("orbit_position");
  auto it = where_.find(v);
  if (it == where_.end()) throw Error(Errc::untouched_vertex, "vertex " + v.brief() + " is untouched", {v});
  return it->second.second;
}

std::size_t AutomorphismOracle::orbit_count() const {
  require_constructed("orbit_count");
  return orbits_.size();
}

std::vector<Vertex> AutomorphismOracle::orbit_representatives() const {
  require_constructed("orbit_representatives");
  std::vector<Vertex> reps;
  reps.reserve(orbits_.size());
  for (const auto& o : orbits_) reps.push_back(o.points[static_cast<std::size_t>(-o.first)]);
  return reps;
}

std::vector<Vertex> AutomorphismOracle::orbit_points(OrbitId o) const {
  require_constructed("orbit_points");
  return {orbits_.at(o).points.begin(), orbits_.at(o).points.end()};
}

std::pair<std::int64_t, std::int64_t> AutomorphismOracle::orbit_span(OrbitId o) const {
  require_constructed("orbit_span");
  const Orbit& orbit = orbits_.at(o);
  return {orbit.first, orbit.first + static_cast<std::int64_t>(orbit.points.size()) - 1};
}

Vertex AutomorphismOracle::orbit_point(OrbitId o, std::int64_t position) {
  require_constructed("orbit_point");
  for (;;) {
    const auto [lo, hi] = orbit_span(o);
    if (position < lo) preimage(orbits_[o].points.front());
    else if (position > hi) image(orbits_[o].points.back());
    else return orbits_[o].points[static_cast<std::size_t>(position - lo)];
  }
}

const std::vector<Vertex>& AutomorphismOracle::prohibitions(OrbitId o) const {
  require_constructed("prohibitions");
  return prohibitions_.at(o);
}

std::vector<std::int64_t> AutomorphismOracle::neighbor_positions(const Vertex& v, OrbitId o) const {
  const OrbitId ov = orbit_id(v);
  const std::int64_t pv = orbit_position(v);
  const Orbit& a = orbits_[ov];
  const Orbit& b = orbits_.at(o);
  // Adjacency between two orbits is constant along each diagonal, and each
  // diagonal carrying an edge already has a built pair on it.
  std::set<std::int64_t> found;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    for (std::size_t j = 0; j < b.points.size(); ++j)
      if (adjacent(a.points[i], b.points[j])) {
        const std::int64_t pi = a.first + static_cast<std::int64_t>(i);
        const std::int64_t pj = b.first + static_cast<std::int64_t>(j);
        found.insert(pv + (pj - pi));
      }
  return {found.begin(), found.end()};
}

Vertex AutomorphismOracle::star_witness(const TypeFunction& tau, StarVariant variant) {
  Vertex v = star_witness_impl(tau, variant);
  log_task({"star", {}, tau, variant});
  return v;
}

Vertex AutomorphismOracle::star_witness_impl(const TypeFunction& tau_in, StarVariant variant) {
  require_constructed("star_witness");
  if (variant != StarVariant::plain && pattern_edge(1) != (variant == StarVariant::edge))
    throw Error(Errc::variant_conflict, "the orbit pattern fixes v " + std::string(pattern_edge(1) ? "R" : "¬R") +
                                            " f(v), which contradicts " + std::string(variant_name(variant)));
  TypeFunction tau = tau_in;
  for (const auto& x : touched_) tau.assign(x, false);  // keeps explicit entries
  Vertex v = realize(tau, {}, top_bound());
  const OrbitId o = register_orbit(v);
  if (variant != StarVariant::plain) grow_forward(o);
  return v;
}

Vertex AutomorphismOracle::c0_witness(const VertexSet& a, const VertexSet& b) {
  Vertex v = c0_witness_impl(a, b);
  log_task({"c0wit", {}, {}, StarVariant::plain, a, b});
  return v;
}

Vertex AutomorphismOracle::c0_witness_impl(const VertexSet& a, const VertexSet& b) {
  if (kind_ != OracleKind::c0) throw Error(Errc::not_c0_built, "c0_witness needs a c0 oracle");
  for (const auto& x : a)
    if (b.count(x)) throw Error(Errc::not_disjoint, "A and B share " + x.brief(), {x});
  std::set<OrbitId> orbits;
  for (const auto* side : {&a, &b})
    for (const auto& x : *side) {
      if (!is_touched(x)) register_orbit(x);
      orbits.insert(where_.at(x).first);
    }
  TypeFunction tau;
  for (const auto& x : a) tau.assign(x, true);
  for (const auto& x : touched_) tau.assign(x, false);
  Vertex v = realize(tau, {}, top_bound());
  register_orbit(v);
  for (OrbitId o : orbits) prohibitions_[o].push_back(v);
  return v;
}

void AutomorphismOracle::run_stage() {
  stage_impl();
  log_task({"stage"});
}

// One round-robin stage: grow every orbit one step each way, then serve
// the next type of a fair enumeration and one random type.
void AutomorphismOracle::stage_impl() {
  require_constructed("run_stage");
  if (orbits_.empty() && !is_touched(Vertex{0})) register_orbit(Vertex{0});
  const std::size_t n = orbits_.size();
  for (OrbitId o = 0; o < n; ++o) {
    grow_forward(o);
    grow_backward(o);
  }

  auto serve = [&](const VertexSet& a, const VertexSet& b) {
    if (kind_ == OracleKind::c0) {
      c0_witness_impl(a, b);
    } else {
      TypeFunction tau;
      for (const auto& x : a) tau.assign(x, true);
      for (const auto& x : b) tau.assign(x, false);
      star_witness_impl(tau, StarVariant::plain);
    }
  };

  // Type number stages_+1 in base 3 over touched vertices in creation
  // order: digit 2 puts the vertex in A, digit 1 in B.
  {
    VertexSet a, b;
    std::uint64_t code = stages_ + 1;
    for (std::size_t i = 0; code != 0 && i < touched_.size(); ++i, code /= 3) {
      if (code % 3 == 2) a.insert(touched_[i]);
      else if (code % 3 == 1) b.insert(touched_[i]);
    }
    serve(a, b);
  }
  {
    VertexSet a, b;
    const std::size_t k = rng_() % 4;
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex& x = touched_[rng_() % touched_.size()];
      const bool to_a = (rng_() & 1U) != 0;
      if (a.count(x) || b.count(x)) continue;
      (to_a ? a : b).insert(x);
    }
    serve(a, b);
  }
  ++stages_;
}

// --- logs ------------------------------------------------------------------------

json AutomorphismOracle::log() const {
  VertexTableWriter table;
  json pattern = json::array();
  for (bool bit : pattern_) pattern.push_back(bit ? 1 : 0);
  json tasks = json::array();
  for (const auto& t : tasks_) {
    json j{{"op", t.op}};
    if (t.op == "image" || t.op == "preimage" || t.op == "touch") j["v"] = t.v;
    if (t.op == "star") {
      j["tau"] = t.tau;
      j["variant"] = variant_name(t.variant);
    }
    if (t.op == "c0wit") {
      j["a"] = vertex_set_json(t.a);
      j["b"] = vertex_set_json(t.b);
    }
    tasks.push_back(std::move(j));
  }
  json j{{"kind", kind_name(kind_)},
         {"seed", seed_},
         {"pattern", std::move(pattern)},
         {"core", json(core())["pairs"]},
         {"tasks", std::move(tasks)}};
  if (kind_ == OracleKind::seeded) j["seed_core"] = seed_core_;
  if (sample_params_) j["sample"] = {{"depth", sample_params_->first}, {"allow_cycles", sample_params_->second}};
  table.attach(j);
  return j;
}

AutomorphismOracle AutomorphismOracle::replay(const json& log) {
  if (!log.is_object() || !log.contains("kind")) throw Error(Errc::parse_error, "oracle log needs a \"kind\"");
  VertexTableReader table(log);
  const std::string kind = log.at("kind").get<std::string>();
  const std::uint64_t seed = log.value("seed", std::uint64_t{0});
  AutomorphismOracle o;
  if (kind == "identity") {
    o = identity();
  } else if (kind == "seeded") {
    o = seeded(log.at("seed_core").get<PartialAutomorphism>(), seed);
  } else if (kind == "sampled") {
    const json& p = log.at("sample");
    o = sampled(seed, p.at("depth").get<std::size_t>(), p.at("allow_cycles").get<bool>());
  } else if (kind == "fp" || kind == "c0") {
    std::vector<bool> pattern;
    for (const auto& bit : log.at("pattern")) pattern.push_back(bit.get<int>() != 0);
    o = kind == "fp" ? fp(pattern, seed) : c0(seed);
  } else {
    throw Error(Errc::parse_error, "unknown oracle kind '" + kind + "'");
  }
  for (const auto& task : log.value("tasks", json::array())) {
    const std::string op = task.at("op").get<std::string>();
    if (op == "image") o.image(task.at("v").get<Vertex>());
    else if (op == "preimage") o.preimage(task.at("v").get<Vertex>());
    else if (op == "touch") o.touch(task.at("v").get<Vertex>());
    else if (op == "stage") o.run_stage();
    else if (op == "star") o.star_witness(task.at("tau").get<TypeFunction>(), parse_variant(task.at("variant").get<std::string>()));
    else if (op == "c0wit") o.c0_witness(vertex_set_from_json(task.at("a")), vertex_set_from_json(task.at("b")));
    else throw Error(Errc::parse_error, "unknown oracle task '" + op + "'");
  }
  if (log.contains("core")) {
    PartialAutomorphism expected = json{{"pairs", log.at("core")}}.get<PartialAutomorphism>();
    if (!(expected == o.core())) throw Error(Errc::replay_mismatch, "replayed core differs from the logged core");
  }
  return o;
}

PartialAutomorphism restriction_fingerprint(AutomorphismOracle& o, const VertexSet& m) {
  VertexPairs pairs;
  for (const auto& v : m) pairs.emplace_back(v, o.image(v));
  return PartialAutomorphism::unchecked(pairs);
}

MapStep step(AutomorphismOracle& o, int exponent) {
  return MapStep{[&o](const Vertex& v) -> std::optional<Vertex> { return o.image(v); },
                 [&o](const Vertex& v) -> std::optional<Vertex> { return o.preimage(v); }, exponent};
}

}  // namespace rado
