#include "pr/lattice.hpp"

#include <stdexcept>

namespace pr {

std::uint64_t Vertex::throw_mask() const {
  throw std::logic_error("Vertex::mask: set has members >= 64");
}

namespace {

// lexicographic successor of a k-combination over [0, n); false when exhausted
bool advance_combination(std::vector<std::uint32_t>& comb, std::size_t n) {
  std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] + (k - i) < n) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void first_combination(std::vector<std::uint32_t>& comb, std::size_t k) {
  comb.clear();
  for (std::size_t i = 0; i < k; ++i) comb.push_back(static_cast<std::uint32_t>(i));
}

}  // namespace

Blob::Blob(Vertex b, Vertex v, std::optional<std::uint64_t> t)
    : base(std::move(b)), variable(std::move(v)), truncation(t) {
  if (!base.disjoint_with(variable))
    throw std::invalid_argument("Blob: base and variable sets must be disjoint");
}

bool Blob::contains(const Vertex& z) const {
  if (!base.subset_of(z)) return false;
  if (!z.subset_of(base.union_with(variable))) return false;
  return !truncation || z.size() <= *truncation;
}

std::uint64_t Blob::count() const {
  if (truncation && *truncation < base.size()) return 0;
  std::uint64_t total = 0;
  std::uint64_t kmax = max_added();
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    std::uint64_t c = binom(variable.size(), k);
    if (c == kBinomSaturated || total > kBinomSaturated - c) return kBinomSaturated;
    total += c;
  }
  return total;
}

BlobCursor::BlobCursor(Blob blob) : blob_(std::move(blob)) {
  tmem_ = blob_.variable.members();
  k_max_ = blob_.max_added();
  done_ = blob_.count() == 0;
}

bool BlobCursor::next(Vertex& out) {
  if (done_) return false;
  if (fresh_k_) {
    first_combination(comb_, k_);
    fresh_k_ = false;
  } else if (!advance_combination(comb_, tmem_.size())) {
    ++k_;
    if (k_ > k_max_) {
      done_ = true;
      return false;
    }
    first_combination(comb_, k_);
  }
  Vertex added;
  for (std::uint32_t idx : comb_) added = added.with(tmem_[idx]);
  out = blob_.base.union_with(added);
  return true;
}

std::vector<Vertex> enumerate_blob(const Blob& blob, std::uint64_t cap) {
  if (blob.count() > cap) throw std::length_error("enumerate_blob: blob too large; use BlobCursor");
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(blob.count()));
  BlobCursor cur(blob);
  Vertex v;
  while (cur.next(v)) out.push_back(v);
  return out;
}

TruncatedLattice::TruncatedLattice(GroundSet g, std::uint32_t s, std::uint32_t t)
    : ground(g), lower(s), upper(t) {
  if (!(s <= t && t <= g.n))
    throw std::invalid_argument("TruncatedLattice: need 0 <= s <= t <= N");
}

std::uint64_t TruncatedLattice::count() const {
  std::uint64_t total = 0;
  for (std::uint32_t k = lower; k <= upper; ++k) {
    std::uint64_t c = binom(ground.n, k);
    if (c == kBinomSaturated || total > kBinomSaturated - c) return kBinomSaturated;
    total += c;
  }
  return total;
}

LayerCursor::LayerCursor(GroundSet ground, std::uint32_t level) : n_(ground.n), level_(level) {
  if (level > ground.n) throw std::invalid_argument("layer: level out of range");
}

bool LayerCursor::next(Vertex& out) {
  if (done_) return false;
  if (fresh_) {
    first_combination(comb_, level_);
    fresh_ = false;
  } else if (!advance_combination(comb_, n_)) {
    done_ = true;
    return false;
  }
  out = Vertex::from_members(comb_);
  return true;
}

std::vector<Vertex> layer(GroundSet ground, std::uint32_t level) {
  std::vector<Vertex> out;
  LayerCursor cur(ground, level);
  Vertex v;
  while (cur.next(v)) out.push_back(v);
  return out;
}

std::uint64_t volume(std::span<const Vertex> family) {
  Vertex acc;
  for (const Vertex& v : family) acc = acc.union_with(v);
  return acc.size();
}

std::uint64_t volume(const Blob& blob) {
  if (blob.count() == 0) return 0;
  if (blob.max_added() == 0) return blob.base.size();
  return blob.base.size() + blob.variable.size();
}

}  // namespace pr
