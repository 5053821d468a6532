// JSON adapters. Vertices below 2^64 are numbers. Larger ones are strings:
// "#k" naming row k of the document's "vertices" table while a
// VertexTableWriter is active, brace notation otherwise. Either way every
// value round-trips bit-exactly.
#pragma once

#include <json.hpp>

#include <string_view>
#include <unordered_map>
#include <vector>

#include "rado/partial_automorphism.hpp"
#include "rado/rado_core.hpp"
#include "rado/vertex.hpp"

namespace rado {

using json = nlohmann::json;

// Row k of a table is the exponent list of vertex k, each entry a number or
// a reference "#j" with j < k, so shared exponents are stored once.
class VertexTableWriter {
 public:
  VertexTableWriter();
  ~VertexTableWriter();
  VertexTableWriter(const VertexTableWriter&) = delete;
  VertexTableWriter& operator=(const VertexTableWriter&) = delete;

  std::string ref(const Vertex& v);
  bool empty() const noexcept { return rows_.empty(); }
  const json& table() const noexcept { return rows_; }
  // Stores the table under "vertices" when any reference was written.
  void attach(json& document) const;

 private:
  std::unordered_map<Vertex, std::size_t> ids_;
  json rows_ = json::array();
  VertexTableWriter* previous_;
};

// Resolves "#k" references against document["vertices"], if present.
class VertexTableReader {
 public:
  explicit VertexTableReader(const json& document);
  ~VertexTableReader();
  VertexTableReader(const VertexTableReader&) = delete;
  VertexTableReader& operator=(const VertexTableReader&) = delete;

  Vertex resolve(std::string_view ref) const;

 private:
  std::vector<Vertex> rows_;
  VertexTableReader* previous_;
};

void to_json(json& j, const Vertex& v);
void from_json(const json& j, Vertex& v);

// {"pairs": [[u,v],...]} sorted by u.
void to_json(json& j, const PartialAutomorphism& g);
void from_json(const json& j, PartialAutomorphism& g);  // unchecked

// [[w,bit],...] sorted by w.
void to_json(json& j, const TypeFunction& tau);
void from_json(const json& j, TypeFunction& tau);

json vertex_set_json(const VertexSet& s);
VertexSet vertex_set_from_json(const json& j);

}  // namespace rado
