#include "pr/copy_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pr/errors.hpp"

namespace pr {

namespace {

bool mask_size_lex_less(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return a & (d & -d);
}

struct CopySearcher {
  std::span<const std::uint64_t> cands;
  const FinitePoset& p;
  EmbedKind kind;
  std::optional<std::uint64_t> pinned;
  std::uint32_t pin_element = 0;

  std::vector<std::uint32_t> order;
  std::vector<std::uint64_t> image;  // by element id
  std::vector<bool> placed;

  CopySearcher(std::span<const std::uint64_t> c, const FinitePoset& poset, EmbedKind k)
      : cands(c), p(poset), kind(k), order(poset.search_order()),
        image(poset.size(), 0), placed(poset.size(), false) {}

  bool feasible(std::uint32_t e, std::uint64_t v) const {
    for (std::uint32_t f = 0; f < p.size(); ++f) {
      if (!placed[f]) continue;
      std::uint64_t w = image[f];
      if (v == w) return false;
      bool ef = p.strictly_less(e, f);
      bool fe = p.strictly_less(f, e);
      if (ef && (v & ~w) != 0) return false;
      if (fe && (w & ~v) != 0) return false;
      if (kind == EmbedKind::Induced && !ef && !fe) {
        // incomparable elements need incomparable images
        if ((v & ~w) == 0 || (w & ~v) == 0) return false;
      }
    }
    return true;
  }

  bool place(std::size_t step) {
    if (step == order.size()) return true;
    std::uint32_t e = order[step];
    if (pinned && e == pin_element) {
      if (feasible(e, *pinned)) {
        image[e] = *pinned;
        placed[e] = true;
        if (place(step + 1)) return true;
        placed[e] = false;
      }
      return false;
    }
    for (std::uint64_t v : cands) {
      if (pinned && v == *pinned) continue;  // reserved for pin_element
      if (!feasible(e, v)) continue;
      image[e] = v;
      placed[e] = true;
      if (place(step + 1)) return true;
      placed[e] = false;
    }
    return false;
  }
};

}  // namespace

namespace detail {

std::optional<std::vector<std::uint64_t>> search_copy_masks(
    std::span<const std::uint64_t> candidates, const FinitePoset& p, EmbedKind kind,
    std::optional<std::uint64_t> pinned) {
  if (candidates.size() < p.size()) return std::nullopt;
  CopySearcher s(candidates, p, kind);
  if (!pinned) {
    if (s.place(0)) return s.image;
    return std::nullopt;
  }
  s.pinned = pinned;
  for (std::uint32_t e = 0; e < p.size(); ++e) {
    s.pin_element = e;
    if (s.place(0)) return s.image;
  }
  return std::nullopt;
}

}  // namespace detail

std::optional<Embedding> find_mono_copy(GroundSet lattice, const Coloring& coloring,
                                        const FinitePoset& p, Color color, EmbedKind kind) {
  if (lattice.n > Coloring::kMaxTableDim)
    throw std::invalid_argument("find_mono_copy: N <= 24 required");
  Coloring tbl = coloring.is_table() ? coloring : coloring.to_table();
  std::vector<std::uint64_t> cands;
  std::uint64_t total = 1ULL << lattice.n;
  for (std::uint64_t m = 0; m < total; ++m)
    if (tbl.of_mask(m) == color) cands.push_back(m);
  std::sort(cands.begin(), cands.end(), mask_size_lex_less);
  auto found = detail::search_copy_masks(cands, p, kind, std::nullopt);
  if (!found) return std::nullopt;
  Embedding e;
  e.kind = kind;
  e.map.reserve(found->size());
  for (std::uint64_t m : *found) e.map.push_back(Vertex::from_mask(m));
  if (!verify_embedding(e, p) || !monochromatic(e, tbl, color))
    throw ConstructionBug("find_mono_copy produced an invalid embedding");
  return e;
}

namespace {

bool brute_rec(const std::vector<std::uint64_t>& cands, const FinitePoset& p, EmbedKind kind,
               std::vector<std::uint64_t>& image, std::vector<bool>& used, std::uint32_t e) {
  std::uint32_t k = p.size();
  if (e == k) {
    // verify the complete injection at the leaf only
    for (std::uint32_t a = 0; a < k; ++a)
      for (std::uint32_t b = 0; b < k; ++b) {
        if (a == b) continue;
        bool rel = p.leq(a, b);
        bool img = (image[a] & ~image[b]) == 0;
        if (kind == EmbedKind::Induced ? rel != img : (rel && !img)) return false;
      }
    return true;
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    image[e] = cands[i];
    if (brute_rec(cands, p, kind, image, used, e + 1)) return true;
    used[i] = false;
  }
  return false;
}

}  // namespace

bool brute_force_copy_exists(GroundSet lattice, const Coloring& coloring, const FinitePoset& p,
                             Color color, EmbedKind kind) {
  if (p.size() > 6 || lattice.n > 4)
    throw std::invalid_argument("brute_force_copy_exists: limited to |P| <= 6 and N <= 4");
  Coloring tbl = coloring.is_table() ? coloring : coloring.to_table();
  std::vector<std::uint64_t> cands;
  for (std::uint64_t m = 0; m < (1ULL << lattice.n); ++m)
    if (tbl.of_mask(m) == color) cands.push_back(m);
  if (cands.size() < p.size()) return false;
  std::vector<std::uint64_t> image(p.size(), 0);
  std::vector<bool> used(cands.size(), false);
  return brute_rec(cands, p, kind, image, used, 0);
}

}  // namespace pr
