// Vertices of the BIT random graph: arbitrary-precision natural numbers.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

namespace detail {
struct VertexNode;
}

// A natural number. Values below 2^64 live inline; larger ones are the set
// of their binary exponents (each itself a Vertex), hash-consed in a
// process-wide pool. Realizer searches stack powers of two on top of each
// other, so ids like 2^(2^(2^70)) are routine; this representation keeps
// them as cheap as their exponent sets.
class Vertex {
 public:
  constexpr Vertex() noexcept = default;
  // Implicit on purpose: every natural number is a vertex.
  constexpr Vertex(std::uint64_t value) noexcept : small_(value) {}  // NOLINT

  // Sum of 2^e over the given exponents (duplicates are collapsed).
  static Vertex from_exponents(std::vector<Vertex> exponents);
  static Vertex power_of_two(const Vertex& exponent);
  // Accepts decimal digits of any length or the brace form "{e1,e2,...}".
  static Vertex parse(std::string_view text);

  bool is_small() const noexcept { return node_ == nullptr; }
  std::optional<std::uint64_t> to_u64() const noexcept;

  // Binary digit at `position`.
  bool bit(const Vertex& position) const;
  // Exponents of the set bits, largest first.
  std::vector<Vertex> exponents() const;
  Vertex successor() const;

  std::size_t hash() const noexcept;
  // Decimal below 2^64, otherwise "{e1,e2,...}" with exponents descending.
  // Shared exponents are spelled out each time, so the text of a deep
  // vertex can be exponentially longer than its pooled form.
  std::string to_string() const;
  // At most about `limit` characters, elided with "..."; for messages.
  std::string brief(std::size_t limit = 96) const;

  friend bool operator==(const Vertex& a, const Vertex& b) noexcept {
    return a.node_ == b.node_ && a.small_ == b.small_;
  }
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) noexcept;

 private:
  friend struct detail::VertexNode;
  static Vertex from_sorted(std::vector<Vertex> descending);

  std::uint64_t small_ = 0;
  const detail::VertexNode* node_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

}  // namespace rado

template <>
struct std::hash<rado::Vertex> {
  std::size_t operator()(const rado::Vertex& v) const noexcept { return v.hash(); }
};
