#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pr/binom.hpp"
#include "pr/vertex.hpp"

namespace pr {

/// The interval sublattice {Z : base ⊆ Z ⊆ base ∪ variable}, a Boolean
/// lattice of dimension |variable|. With a truncation t only the vertices of
/// total size ≤ t remain.
struct Blob {
  Vertex base;
  Vertex variable;
  std::optional<std::uint64_t> truncation;

  Blob(Vertex b, Vertex v, std::optional<std::uint64_t> t = std::nullopt);

  std::size_t dimension() const { return variable.size(); }

  /// Largest number of variable elements a contained vertex may add.
  std::uint64_t max_added() const {
    if (!truncation) return variable.size();
    if (*truncation < base.size()) return 0;  // empty blob, flagged by count()==0
    return std::min<std::uint64_t>(variable.size(), *truncation - base.size());
  }

  bool contains(const Vertex& z) const;

  /// Number of vertices (saturating); Σ_{k ≤ max added} C(dim, k).
  std::uint64_t count() const;
};

/// Vertices of the blob in (size, lex) order, produced lazily.
class BlobCursor {
 public:
  explicit BlobCursor(Blob blob);
  bool next(Vertex& out);

 private:
  Blob blob_;
  std::vector<std::uint32_t> tmem_;  // sorted variable members
  std::vector<std::uint32_t> comb_;  // current combination (indices into tmem_)
  std::uint64_t k_ = 0;
  std::uint64_t k_max_ = 0;
  bool fresh_k_ = true;
  bool done_ = false;
};

/// All vertices of the blob in (size, lex) order. Throws std::length_error
/// beyond `cap` vertices; use BlobCursor for the large lazy case.
std::vector<Vertex> enumerate_blob(const Blob& blob, std::uint64_t cap = 1u << 22);

/// The subposet {Z ⊆ [0,N) : lower ≤ |Z| ≤ upper}.
struct TruncatedLattice {
  GroundSet ground;
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;

  TruncatedLattice(GroundSet g, std::uint32_t s, std::uint32_t t);
  std::uint64_t count() const;
};

/// All C(N,ℓ) vertices of size ℓ in lexicographic order.
class LayerCursor {
 public:
  LayerCursor(GroundSet ground, std::uint32_t level);
  bool next(Vertex& out);

 private:
  std::uint32_t n_;
  std::uint32_t level_;
  std::vector<std::uint32_t> comb_;
  bool fresh_ = true;
  bool done_ = false;
};

std::vector<Vertex> layer(GroundSet ground, std::uint32_t level);

/// Number of ground elements covered by the family: |⋃ X|.
std::uint64_t volume(std::span<const Vertex> family);

/// Volume of a whole blob without enumerating it.
std::uint64_t volume(const Blob& blob);

}  // namespace pr
