#pragma once

#include <vector>

#include "pr/coloring.hpp"
#include "pr/poset.hpp"
#include "pr/vertex.hpp"

namespace pr {

enum class EmbedKind : std::uint8_t { Induced, Weak };

const char* kind_name(EmbedKind k);

/// A vertex map poset-element -> lattice vertex together with the claim it
/// makes: induced (comparability preserved both ways) or weak (one way).
struct Embedding {
  EmbedKind kind = EmbedKind::Induced;
  std::vector<Vertex> map;  // map[e] = image of poset element e
};

/// Injectivity plus the order condition of the claimed kind, checked over all
/// element pairs.
bool verify_embedding(const Embedding& e, const FinitePoset& p);

bool monochromatic(const Embedding& e, const Coloring& coloring, Color color);

}  // namespace pr
