#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace pr {

/// A vertex of a Boolean lattice: a finite set of ground-element indices.
///
/// Representation is canonical: a single 64-bit word while every member is
/// below 64, a sorted vector otherwise. Equality, ordering and hashing are
/// representation-independent because the mode is a function of the member
/// set alone.
class Vertex {
 public:
  Vertex() = default;

  Vertex(std::initializer_list<std::uint32_t> members)
      : Vertex(std::vector<std::uint32_t>(members)) {}

  static Vertex from_mask(std::uint64_t bits) {
    Vertex v;
    v.bits_ = bits;
    return v;
  }

  static Vertex from_members(std::vector<std::uint32_t> members) {
    return Vertex(std::move(members));
  }

  /// Contiguous range [lo, hi).
  static Vertex range(std::uint32_t lo, std::uint32_t hi) {
    if (hi <= lo) return Vertex();
    if (hi <= 64) {
      std::uint64_t full = hi == 64 ? ~0ULL : (1ULL << hi) - 1;
      std::uint64_t low = (1ULL << lo) - 1;
      return from_mask(full & ~low);
    }
    std::vector<std::uint32_t> m;
    m.reserve(hi - lo);
    for (std::uint32_t e = lo; e < hi; ++e) m.push_back(e);
    Vertex v;
    v.big_ = std::move(m);
    return v;
  }

  bool sparse() const { return !big_.empty(); }
  bool empty() const { return bits_ == 0 && big_.empty(); }

  std::size_t size() const {
    return sparse() ? big_.size() : static_cast<std::size_t>(std::popcount(bits_));
  }

  bool contains(std::uint32_t e) const {
    if (!sparse()) return e < 64 && (bits_ >> e & 1);
    return std::binary_search(big_.begin(), big_.end(), e);
  }

  /// Bit pattern of the vertex; only meaningful while all members are < 64.
  std::uint64_t mask() const { return sparse() ? throw_mask() : bits_; }

  std::vector<std::uint32_t> members() const {
    if (sparse()) return big_;
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<std::uint32_t>(std::countr_zero(b)));
    return out;
  }

  template <typename F>
  void for_each_member(F&& f) const {
    if (sparse()) {
      for (std::uint32_t e : big_) f(e);
    } else {
      for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        f(static_cast<std::uint32_t>(std::countr_zero(b)));
    }
  }

  std::uint32_t max_member() const {
    if (sparse()) return big_.back();
    return 63 - static_cast<std::uint32_t>(std::countl_zero(bits_));
  }

  bool subset_of(const Vertex& o) const {
    if (size() > o.size()) return false;
    if (!sparse() && !o.sparse()) return (bits_ & ~o.bits_) == 0;
    if (sparse() && !o.sparse()) return false;  // canonical sparse has a member >= 64
    if (!sparse()) {
      std::size_t j = 0;
      for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        std::uint32_t e = static_cast<std::uint32_t>(std::countr_zero(b));
        while (j < o.big_.size() && o.big_[j] < e) ++j;
        if (j == o.big_.size() || o.big_[j] != e) return false;
      }
      return true;
    }
    if (big_.size() * 32 < o.big_.size()) {
      // much smaller set: binary-search each member instead of scanning o
      for (std::uint32_t e : big_)
        if (!std::binary_search(o.big_.begin(), o.big_.end(), e)) return false;
      return true;
    }
    return std::includes(o.big_.begin(), o.big_.end(), big_.begin(), big_.end());
  }

  bool disjoint_with(const Vertex& o) const {
    if (!sparse() && !o.sparse()) return (bits_ & o.bits_) == 0;
    bool hit = false;
    const Vertex* small = this;
    const Vertex* large = &o;
    if (small->size() > large->size()) std::swap(small, large);
    small->for_each_member([&](std::uint32_t e) { hit = hit || large->contains(e); });
    return !hit;
  }

  Vertex union_with(const Vertex& o) const {
    if (!sparse() && !o.sparse()) return from_mask(bits_ | o.bits_);
    return from_members(merge_members(members(), o.members(), MergeOp::Union));
  }

  Vertex intersect(const Vertex& o) const {
    if (!sparse() && !o.sparse()) return from_mask(bits_ & o.bits_);
    return from_members(merge_members(members(), o.members(), MergeOp::Intersect));
  }

  Vertex minus(const Vertex& o) const {
    if (!sparse() && !o.sparse()) return from_mask(bits_ & ~o.bits_);
    return from_members(merge_members(members(), o.members(), MergeOp::Minus));
  }

  Vertex with(std::uint32_t e) const {
    if (!sparse() && e < 64) return from_mask(bits_ | (1ULL << e));
    auto m = members();
    auto it = std::lower_bound(m.begin(), m.end(), e);
    if (it == m.end() || *it != e) m.insert(it, e);
    return from_members(std::move(m));
  }

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.bits_ == b.bits_ && a.big_ == b.big_;
  }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }

  /// Stable 64-bit hash (FNV-1a over the sorted members); also drives the
  /// seeded coloring oracles, so it must never change across platforms.
  std::uint64_t stable_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto eat = [&h](std::uint32_t e) {
      for (int s = 0; s < 32; s += 8) {
        h ^= (e >> s) & 0xff;
        h *= 0x100000001b3ULL;
      }
    };
    for_each_member(eat);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each_member([&](std::uint32_t e) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(e);
    });
    return s + "}";
  }

  friend std::ostream& operator<<(std::ostream& os, const Vertex& v) {
    return os << v.to_string();
  }

 private:
  explicit Vertex(std::vector<std::uint32_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.back() < 64) {
      for (std::uint32_t e : members) bits_ |= 1ULL << e;
    } else {
      big_ = std::move(members);
    }
  }

  enum class MergeOp { Union, Intersect, Minus };

  static std::vector<std::uint32_t> merge_members(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b,
                                                  MergeOp op) {
    std::vector<std::uint32_t> out;
    switch (op) {
      case MergeOp::Union:
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        break;
      case MergeOp::Intersect:
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        break;
      case MergeOp::Minus:
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        break;
    }
    return out;
  }

  [[noreturn]] std::uint64_t throw_mask() const;

  std::uint64_t bits_ = 0;
  std::vector<std::uint32_t> big_;  // sorted; nonempty iff some member >= 64
};

/// strict subset
inline bool proper_subset(const Vertex& a, const Vertex& b) {
  return a.size() < b.size() && a.subset_of(b);
}

inline bool comparable(const Vertex& a, const Vertex& b) {
  return a.subset_of(b) || b.subset_of(a);
}

/// Order by cardinality, then lexicographically on the sorted member
/// sequence. This is the enumeration order used everywhere (layers, blobs,
/// candidate lists), fixed so golden tests and scan orders are deterministic.
inline bool size_lex_less(const Vertex& a, const Vertex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (!a.sparse() && !b.sparse()) {
    std::uint64_t d = a.mask() ^ b.mask();
    if (d == 0) return false;
    return a.mask() & (d & -d);  // smallest differing element lies in a
  }
  auto am = a.members(), bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

/// The ground set [0, N) of a Boolean lattice; N is the dimension.
struct GroundSet {
  std::uint32_t n = 0;

  Vertex full() const { return Vertex::range(0, n); }
  bool holds(const Vertex& v) const { return v.empty() || v.max_member() < n; }
};

}  // namespace pr

template <>
struct std::hash<pr::Vertex> {
  std::size_t operator()(const pr::Vertex& v) const noexcept {
    return static_cast<std::size_t>(v.stable_hash());
  }
};
