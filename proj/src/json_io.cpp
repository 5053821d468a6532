#include "rado/json_io.hpp"

#include "rado/errors.hpp"

namespace rado {

namespace {
thread_local VertexTableWriter* active_writer = nullptr;
thread_local VertexTableReader* active_reader = nullptr;
}  // namespace

VertexTableWriter::VertexTableWriter() : previous_(active_writer) { active_writer = this; }
VertexTableWriter::~VertexTableWriter() { active_writer = previous_; }

std::string VertexTableWriter::ref(const Vertex& v) {
  if (auto it = ids_.find(v); it != ids_.end()) return "#" + std::to_string(it->second);
  json row = json::array();
  for (const auto& e : v.exponents()) {
    if (auto small = e.to_u64()) row.push_back(*small);
    else row.push_back(ref(e));
  }
  const std::size_t id = rows_.size();
  rows_.push_back(std::move(row));
  ids_.emplace(v, id);
  return "#" + std::to_string(id);
}

void VertexTableWriter::attach(json& document) const {
  if (!empty()) document["vertices"] = rows_;
}

VertexTableReader::VertexTableReader(const json& document) : previous_(active_reader) {
  active_reader = this;
  if (!document.is_object() || !document.contains("vertices")) return;
  for (const auto& row : document.at("vertices")) {
    if (!row.is_array() || row.empty()) throw Error(Errc::parse_error, "vertex table rows must be non-empty arrays");
    std::vector<Vertex> exps;
    for (const auto& e : row) {
      if (e.is_string()) {
        const auto text = e.get<std::string>();
        if (text.empty() || text[0] != '#') throw Error(Errc::parse_error, "vertex table entry '" + text + "'");
        exps.push_back(resolve(text));
      } else {
        exps.push_back(e.get<std::uint64_t>());
      }
    }
    Vertex v = Vertex::from_exponents(exps);
    if (v.is_small()) throw Error(Errc::parse_error, "vertex table row below 2^64");
    rows_.push_back(v);
  }
}

VertexTableReader::~VertexTableReader() { active_reader = previous_; }

Vertex VertexTableReader::resolve(std::string_view ref) const {
  std::size_t id = 0;
  if (ref.size() < 2 || ref[0] != '#') throw Error(Errc::parse_error, "bad vertex reference '" + std::string(ref) + "'");
  for (char c : ref.substr(1)) {
    if (c < '0' || c > '9') throw Error(Errc::parse_error, "bad vertex reference '" + std::string(ref) + "'");
    id = id * 10 + static_cast<std::size_t>(c - '0');
    if (id > rows_.size()) break;
  }
  if (id >= rows_.size()) throw Error(Errc::parse_error, "dangling vertex reference '" + std::string(ref) + "'");
  return rows_[id];
}

void to_json(json& j, const Vertex& v) {
  if (auto small = v.to_u64()) j = *small;
  else if (active_writer) j = active_writer->ref(v);
  else j = v.to_string();
}

void from_json(const json& j, Vertex& v) {
  if (j.is_number_unsigned()) v = Vertex{j.get<std::uint64_t>()};
  else if (j.is_number_integer() && j.get<std::int64_t>() >= 0) v = Vertex{static_cast<std::uint64_t>(j.get<std::int64_t>())};
  else if (j.is_string() && j.get_ref<const std::string&>().starts_with("#")) {
    if (!active_reader) throw Error(Errc::parse_error, "vertex reference outside a document with a vertex table");
    v = active_reader->resolve(j.get_ref<const std::string&>());
  } else if (j.is_string()) v = Vertex::parse(j.get<std::string>());
  else throw Error(Errc::parse_error, "vertex must be a natural number or a string, got " + j.dump());
}

void to_json(json& j, const PartialAutomorphism& g) {
  json pairs = json::array();
  for (const auto& [u, v] : g.pairs()) pairs.push_back(json::array({u, v}));
  j = json{{"pairs", std::move(pairs)}};
}

void from_json(const json& j, PartialAutomorphism& g) {
  if (!j.is_object() || !j.contains("pairs") || !j.at("pairs").is_array())
    throw Error(Errc::parse_error, "expected {\"pairs\": [...]}");
  VertexPairs pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw Error(Errc::parse_error, "pair must be [u,v]: " + p.dump());
    pairs.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
  }
  g = PartialAutomorphism::unchecked(pairs);
}

void to_json(json& j, const TypeFunction& tau) {
  j = json::array();
  for (const auto& [w, b] : tau) j.push_back(json::array({w, b ? 1 : 0}));
}

void from_json(const json& j, TypeFunction& tau) {
  tau = TypeFunction{};
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error(Errc::parse_error, "type entry must be [w,bit]: " + e.dump());
    const bool bit = e[1].is_boolean() ? e[1].get<bool>() : e[1].get<int>() != 0;
    if (!tau.assign(e[0].get<Vertex>(), bit)) throw Error(Errc::parse_error, "conflicting type entry " + e.dump());
  }
}

json vertex_set_json(const VertexSet& s) {
  json j = json::array();
  for (const auto& v : s) j.push_back(v);
  return j;
}

VertexSet vertex_set_from_json(const json& j) {
  VertexSet s;
  for (const auto& e : j) s.insert(e.get<Vertex>());
  return s;
}

}  // namespace rado
