#include "rado/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rado/sampler.hpp"
#include "rado/splitting.hpp"
#include "rado/translator.hpp"

namespace rado::cli {

namespace {

constexpr std::size_t default_spec_depth = 2;

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::parse_error, std::string("bad ") + what + " '" + s + "'");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << j.dump(2) << '\n';
}

CompactFamily parse_family(const std::vector<std::string>& specs, std::uint64_t seed) {
  std::vector<AutomorphismOracle> members;
  for (const auto& s : specs)
    for (const auto& part : split_top(s, ';')) members.push_back(parse_oracle(part, seed));
  return CompactFamily(std::move(members));
}

VertexSet to_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

void print_pretty(std::ostream& out, const json& j) {
  if (!j.is_object()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    out << k << std::string(width - k.size() + 2, ' ');
    if (v.is_string()) out << v.get<std::string>() << '\n';
    else if (v.is_primitive()) out << v.dump() << '\n';
    else out << v.dump() << '\n';
  }
}

json error_json(const Error& e) {
  json w = json::array();
  for (const auto& v : e.witness()) w.push_back(v);
  return {{"error", {{"code", errc_name(e.code())}, {"message", e.what()}, {"witness", w}}}};
}

}  // namespace

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  for (const auto& part : split_top(text, ',')) {
    if (part.empty()) continue;
    out.push_back(Vertex::parse(part));
  }
  return out;
}

TypeFunction parse_tau(const std::string& text) {
  TypeFunction tau;
  for (const auto& part : split_top(text, ',')) {
    if (part.empty()) continue;
    const auto colon = part.rfind(':');
    if (colon == std::string::npos) throw Error(Errc::parse_error, "tau entry '" + part + "' needs k:v");
    const Vertex k = Vertex::parse(part.substr(0, colon));
    const std::string bit = part.substr(colon + 1);
    if (bit != "0" && bit != "1") throw Error(Errc::parse_error, "tau value '" + bit + "' must be 0 or 1");
    if (!tau.assign(k, bit == "1")) throw Error(Errc::parse_error, "tau assigns " + k.brief() + " twice");
  }
  return tau;
}

AutomorphismOracle parse_oracle(const std::string& spec, std::uint64_t seed) {
  if (spec == "id") return AutomorphismOracle::identity();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(Errc::parse_error, "unknown oracle spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  const auto fields = split_top(rest, ':');
  if (kind == "pairs") {
    VertexPairs pairs;
    for (const auto& p : split_top(rest, ',')) {
      const auto parts = split_top(p, '-');
      if (parts.size() != 2) throw Error(Errc::parse_error, "pair '" + p + "' needs u-v");
      pairs.emplace_back(Vertex::parse(parts[0]), Vertex::parse(parts[1]));
    }
    return AutomorphismOracle::seeded(PartialAutomorphism::check(pairs), seed);
  }
  if (kind == "fp") {
    const std::size_t depth = fields.size() > 1 ? parse_u64(fields[1], "depth") : default_spec_depth;
    return build_fp(parse_pattern(fields.at(0)), seed, depth);
  }
  if (kind == "c0") {
    const std::size_t depth = fields.size() > 1 ? parse_u64(fields[1], "depth") : default_spec_depth;
    return build_c0(parse_u64(fields.at(0), "seed"), depth);
  }
  if (kind == "sample") {
    if (fields.size() < 2) throw Error(Errc::parse_error, "sample spec needs sample:<seed>:<depth>");
    const bool cycles = fields.size() > 2 && fields[2] == "cycles";
    return sample(parse_u64(fields[0], "seed"), parse_u64(fields[1], "depth"), cycles);
  }
  throw Error(Errc::parse_error, "unknown oracle kind '" + kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphisms of the random graph: builders, conjugators and certificate checks", "rado"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  bool json_flag = false, pretty = false;
  std::string trace_file;
  app.add_option("--seed", seed, "Seed for every random choice");
  app.add_flag("--json", json_flag, "Machine output (the default)");
  app.add_flag("--pretty", pretty, "Human-readable output");
  app.add_option("--trace", trace_file, "Write a trace or oracle log to this file");

  std::string s_u, s_v;
  auto* adj = app.add_subcommand("adj", "Adjacency of two vertices");
  adj->add_option("u", s_u)->required();
  adj->add_option("v", s_v)->required();

  std::string tau_s, forbid_s, bound_s = "0";
  auto* rz = app.add_subcommand("realize", "Least realizer of a type above a bound");
  rz->add_option("--tau", tau_s, "k:v,...");
  rz->add_option("--forbid", forbid_s, "Vertices to skip");
  rz->add_option("--bound", bound_s, "Exclusion bound");

  std::vector<std::string> family_s;
  std::string m_s;
  auto* sp = app.add_subcommand("split", "Splitting point for a family");
  sp->add_option("--family", family_s, "Oracle specs, repeatable or ';'-separated")->required();
  sp->add_option("--m", m_s, "Window M");
  sp->add_option("--tau", tau_s, "k:v,... on M");
  sp->add_option("--bound", bound_s, "Exclusion bound");

  std::string pattern_s;
  std::size_t depth = 0;
  auto* bfp = app.add_subcommand("build-fp", "Build an f_p oracle");
  bfp->add_option("--pattern", pattern_s, "p(1)p(2)... as bits")->required();
  bfp->add_option("--depth", depth, "Build stages")->required();

  auto* bc0 = app.add_subcommand("build-c0", "Build a C0 oracle");
  bc0->add_option("--depth", depth, "Build stages")->required();

  std::string snapshot_s;
  auto* gc = app.add_subcommand("good-check", "Check a good-triple snapshot");
  gc->add_option("--snapshot", snapshot_s, "Snapshot JSON file")->required();

  std::size_t steps = 0, target_depth = 2;
  std::string target_s, snapshot_out, cert_out;
  auto* tr = app.add_subcommand("translate", "Translate a family into the class of a target");
  tr->add_option("--family", family_s, "Oracle specs, repeatable or ';'-separated")->required();
  tr->add_option("--steps", steps, "Rounds")->required();
  tr->add_option("--target", target_s, "Target spec (default c0:<seed>)");
  tr->add_option("--target-depth", target_depth, "Build stages of the default target");
  tr->add_option("--snapshot-out", snapshot_out, "Write the final good triple here");
  tr->add_option("--certificate-out", cert_out, "Write the certificate here");

  std::uint64_t seed_a = 0, seed_b = 1;
  std::size_t build_depth = 2;
  auto* cc = app.add_subcommand("conjugate-c0", "Conjugate two C0 oracles");
  cc->add_option("--seed-a", seed_a, "Seed of f")->required();
  cc->add_option("--seed-b", seed_b, "Seed of f'")->required();
  cc->add_option("--depth", depth, "Back-and-forth rounds")->required();
  cc->add_option("--build-depth", build_depth, "Build stages of both oracles");
  cc->add_option("--certificate-out", cert_out, "Write the certificate here");

  std::string h_s;
  auto* ts = app.add_subcommand("truss", "Factor h through two C0 elements");
  ts->set_help_flag("--help", "Print this help message and exit");
  ts->add_option("--h", h_s, "Oracle spec of h")->required();
  ts->add_option("--steps", steps, "Rounds")->required();
  ts->add_option("--target-depth", target_depth, "Build stages of the C0 target");
  ts->add_option("--certificate-out", cert_out, "Write the certificate here");

  bool allow_cycles = false;
  std::size_t trials = 100, cap = 8;
  auto* sm = app.add_subcommand("sample", "Random back-and-forth automorphism");
  sm->add_option("--depth", depth, "Back-and-forth steps")->required();
  sm->add_flag("--allow-cycles", allow_cycles, "Permit closing cycles");
  sm->add_option("--trials", trials, "Witness-search trials");
  sm->add_option("--cap", cap, "Realizers tried per trial");
  sm->add_option("--seed", seed, "Sampling seed");

  std::string cert_s;
  auto* vf = app.add_subcommand("verify", "Verify a certificate");
  vf->add_option("--certificate", cert_s, "Certificate JSON file")->required();

  std::string dot_out;
  auto* ed = app.add_subcommand("export-dot", "Induced subgraph as DOT");
  ed->add_option("--m", m_s, "Vertices")->required();
  ed->add_option("--out", dot_out, "DOT file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", {{"code", "Usage"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }
  (void)json_flag;

  VertexTableWriter table;
  auto emit = [&](json j) {
    table.attach(j);
    if (pretty) print_pretty(out, j);
    else out << j.dump() << '\n';
  };
  auto trace = [&](const json& j) {
    if (!trace_file.empty()) write_json_file(trace_file, j);
  };

  try {
    if (*adj) {
      emit({{"adjacent", adjacent(Vertex::parse(s_u), Vertex::parse(s_v))}});
    } else if (*rz) {
      emit({{"vertex", realize(parse_tau(tau_s), to_set(parse_vertex_list(forbid_s)), Vertex::parse(bound_s))}});
    } else if (*sp) {
      CompactFamily k = parse_family(family_s, seed);
      const Vertex v = split(k, SplitRequest{to_set(parse_vertex_list(m_s)), parse_tau(tau_s), Vertex::parse(bound_s)});
      trace(k.log());
      emit({{"vertex", v}});
    } else if (*bfp || *bc0) {
      AutomorphismOracle o = *bfp ? build_fp(parse_pattern(pattern_s), seed, depth) : build_c0(seed, depth);
      trace(o.log());
      emit({{"kind", kind_name(o.kind())},
            {"seed", seed},
            {"depth", depth},
            {"orbits", o.orbit_count()},
            {"core_size", o.core_size()},
            {"core", o.core()}});
    } else if (*gc) {
      GoodTriple t = GoodTriple::from_snapshot(read_json_file(snapshot_s));
      const CheckReport r = t.check();
      if (!r.ok) {
        json e = r.to_json();
        e["code"] = "GoodTripleViolation";
        emit({{"error", e}});
        return 1;
      }
      emit({{"ok", true}, {"classes", t.classes()}});
    } else if (*tr) {
      AutomorphismOracle target = target_s.empty() ? build_c0(seed, target_depth) : parse_oracle(target_s, seed);
      TranslationResult t = translate(parse_family(family_s, seed), std::move(target), steps);
      const json cert = translation_certificate(t, "translate");
      trace(t.trace_json());
      if (!snapshot_out.empty()) write_json_file(snapshot_out, t.triple().snapshot());
      if (!cert_out.empty()) write_json_file(cert_out, cert);
      emit({{"steps_run", t.steps_run()},
            {"checks_run", t.checks_run()},
            {"vertices_covered", t.vertices_covered()},
            {"representatives_covered", t.representatives_covered()},
            {"g", t.triple().g()},
            {"certificate", cert}});
    } else if (*cc) {
      AutomorphismOracle f = build_c0(seed_a, build_depth);
      AutomorphismOracle f2 = build_c0(seed_b, build_depth);
      const PartialAutomorphism phi = conjugate_c0(f, f2, depth);
      const json cert = c0_certificate(f, f2, phi);
      if (!cert_out.empty()) write_json_file(cert_out, cert);
      trace({{"f", f.log()}, {"f2", f2.log()}});
      emit({{"phi", phi}, {"certificate", cert}});
    } else if (*ts) {
      TrussResult r = truss_factor(parse_oracle(h_s, seed), steps, seed, target_depth);
      trace(r.translation.trace_json());
      if (!cert_out.empty()) write_json_file(cert_out, r.certificate);
      emit({{"steps_run", r.translation.steps_run()},
            {"checks_run", r.translation.checks_run()},
            {"certificate", r.certificate}});
    } else if (*sm) {
      AutomorphismOracle o = sample(seed, depth, allow_cycles);
      trace(o.log());
      json j = report(o, trials, seed, cap).to_json();
      j["core"] = o.core();
      emit(j);
    } else if (*vf) {
      const Verdict v = verify_certificate(read_json_file(cert_s));
      if (!v.ok) {
        emit({{"error", {{"code", "CertificateRejected"}, {"reason", v.reason}}}});
        return 1;
      }
      emit({{"ok", true}, {"points", v.points}});
    } else if (*ed) {
      const std::string dot = to_dot(to_set(parse_vertex_list(m_s)));
      if (!dot_out.empty()) {
        std::ofstream f(dot_out);
        if (!f) throw Error(Errc::parse_error, "cannot write " + dot_out);
        f << dot;
      }
      emit({{"dot", dot}});
    }
  } catch (const Error& e) {
    emit(error_json(e));
    return 1;
  }
  return 0;
}

}  // namespace rado::cli
