#include "pr/embedding.hpp"

#include <unordered_set>

namespace pr {

const char* kind_name(EmbedKind k) { return k == EmbedKind::Induced ? "induced" : "weak"; }

bool verify_embedding(const Embedding& e, const FinitePoset& p) {
  if (e.map.size() != p.size()) return false;
  std::unordered_set<Vertex> seen;
  for (const Vertex& v : e.map)
    if (!seen.insert(v).second) return false;
  for (std::uint32_t a = 0; a < p.size(); ++a) {
    for (std::uint32_t b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      bool rel = p.leq(a, b);
      bool img = e.map[a].subset_of(e.map[b]);
      if (e.kind == EmbedKind::Induced) {
        if (rel != img) return false;
      } else {
        if (rel && !img) return false;
      }
    }
  }
  return true;
}

bool monochromatic(const Embedding& e, const Coloring& coloring, Color color) {
  for (const Vertex& v : e.map)
    if (coloring.of(v) != color) return false;
  return true;
}

}  // namespace pr
