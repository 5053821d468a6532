#include "rado/vertex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <ostream>
#include <unordered_map>

#include "rado/errors.hpp"

namespace rado {

namespace detail {

struct VertexNode {
  std::vector<Vertex> exps;  // strictly descending, top exponent >= 64
  std::size_t hash;
};

}  // namespace detail

namespace {

using detail::VertexNode;

std::size_t mix(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(x ^ (x >> 31));
}

std::size_t hash_exponents(const std::vector<Vertex>& exps) noexcept {
  std::uint64_t h = 0x5bd1e995ULL;
  for (const auto& e : exps) h = mix(h ^ e.hash());
  return static_cast<std::size_t>(h);
}

// Hash-consing pool. Nodes are never freed; equal values share one node,
// which is what makes Vertex equality a pointer comparison.
class Pool {
 public:
  const VertexNode* intern(std::vector<Vertex> exps) {
    const std::size_t h = hash_exponents(exps);
    std::lock_guard lock(mu_);
    auto& bucket = index_[h];
    for (const VertexNode* n : bucket)
      if (n->exps == exps) return n;
    nodes_.push_back(VertexNode{std::move(exps), h});
    bucket.push_back(&nodes_.back());
    return &nodes_.back();
  }

 private:
  std::mutex mu_;
  std::deque<VertexNode> nodes_;
  std::unordered_map<std::size_t, std::vector<const VertexNode*>> index_;
};

Pool& pool() {
  static Pool p;
  return p;
}

bool desc(const Vertex& a, const Vertex& b) { return b < a; }

}  // namespace

std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) noexcept {
  if (a.is_small() && b.is_small()) return a.small_ <=> b.small_;
  if (a.is_small()) return std::strong_ordering::less;
  if (b.is_small()) return std::strong_ordering::greater;
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& ea = a.node_->exps;
  const auto& eb = b.node_->exps;
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ea[i] == eb[i]) continue;
    return ea[i] <=> eb[i];
  }
  return ea.size() <=> eb.size();
}

Vertex Vertex::from_sorted(std::vector<Vertex> descending) {
  if (descending.empty()) return Vertex{};
  const Vertex& top = descending.front();
  if (top.is_small() && top.small_ < 64) {
    std::uint64_t value = 0;
    for (const auto& e : descending) value |= std::uint64_t{1} << e.small_;
    return Vertex{value};
  }
  Vertex v;
  v.node_ = pool().intern(std::move(descending));
  return v;
}

Vertex Vertex::from_exponents(std::vector<Vertex> exponents) {
  std::sort(exponents.begin(), exponents.end(), desc);
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  return from_sorted(std::move(exponents));
}

Vertex Vertex::power_of_two(const Vertex& exponent) { return from_sorted({exponent}); }

std::optional<std::uint64_t> Vertex::to_u64() const noexcept {
  if (is_small()) return small_;
  return std::nullopt;
}

bool Vertex::bit(const Vertex& position) const {
  if (is_small()) return position.is_small() && position.small_ < 64 && ((small_ >> position.small_) & 1U);
  return std::binary_search(node_->exps.begin(), node_->exps.end(), position, desc);
}

std::vector<Vertex> Vertex::exponents() const {
  if (!is_small()) return node_->exps;
  std::vector<Vertex> out;
  for (std::uint64_t x = small_; x != 0; x &= ~(std::uint64_t{1} << (63 - std::countl_zero(x))))
    out.emplace_back(static_cast<std::uint64_t>(63 - std::countl_zero(x)));
  return out;
}

Vertex Vertex::successor() const {
  if (is_small()) {
    if (small_ != std::numeric_limits<std::uint64_t>::max()) return Vertex{small_ + 1};
    return power_of_two(Vertex{64});
  }
  // Clear the trailing run of ones and set the next bit.
  std::vector<Vertex> exps = node_->exps;
  std::uint64_t k = 0;
  while (!exps.empty() && exps.back() == Vertex{k}) {
    exps.pop_back();
    ++k;
  }
  exps.emplace_back(k);
  return from_sorted(std::move(exps));
}

std::size_t Vertex::hash() const noexcept { return is_small() ? mix(small_) : node_->hash; }

std::string Vertex::to_string() const {
  if (is_small()) return std::to_string(small_);
  std::string out = "{";
  bool first = true;
  for (const auto& e : node_->exps) {
    if (!first) out += ',';
    first = false;
    out += e.to_string();
  }
  out += '}';
  return out;
}

namespace {

// Returns false once the budget is spent.
bool write_brief(const Vertex& v, std::string& out, std::size_t limit) {
  if (out.size() > limit) return false;
  if (v.is_small()) {
    out += std::to_string(*v.to_u64());
    return true;
  }
  out += '{';
  bool first = true;
  for (const auto& e : v.exponents()) {
    if (!first) out += ',';
    first = false;
    if (!write_brief(e, out, limit)) return false;
  }
  out += '}';
  return true;
}

}  // namespace

std::string Vertex::brief(std::size_t limit) const {
  std::string out;
  if (!write_brief(*this, out, limit)) {
    out.resize(std::min(out.size(), limit));
    out += "...";
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse_error, "bad vertex '" + std::string(s) + "': " + why);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  Vertex decimal() {
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("expected digits");
    std::string_view digits = s.substr(start, pos - start);
    if (digits.size() <= 19) return Vertex{std::stoull(std::string(digits))};
    // Long decimal: peel off binary digits by repeated halving.
    std::vector<int> d;
    for (char c : digits) d.push_back(c - '0');
    std::vector<Vertex> exps;
    std::uint64_t position = 0;
    while (!(d.size() == 1 && d[0] == 0) && !d.empty()) {
      int carry = 0;
      std::vector<int> q;
      for (int x : d) {
        const int cur = carry * 10 + x;
        if (!q.empty() || cur / 2 != 0) q.push_back(cur / 2);
        carry = cur % 2;
      }
      if (carry) exps.emplace_back(position);
      ++position;
      d = q.empty() ? std::vector<int>{0} : q;
    }
    return Vertex::from_exponents(std::move(exps));
  }

  Vertex value() {
    skip_ws();
    if (pos < s.size() && s[pos] == '{') {
      ++pos;
      std::vector<Vertex> exps;
      skip_ws();
      if (pos < s.size() && s[pos] == '}') {
        ++pos;
        return Vertex{};
      }
      for (;;) {
        exps.push_back(value());
        skip_ws();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < s.size() && s[pos] == '}') {
          ++pos;
          break;
        }
        fail("expected ',' or '}'");
      }
      return Vertex::from_exponents(std::move(exps));
    }
    return decimal();
  }
};

}  // namespace

Vertex Vertex::parse(std::string_view text) {
  Parser p{text};
  Vertex v = p.value();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return v;
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.to_string(); }

}  // namespace rado
