#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pr/coloring.hpp"
#include "pr/embedding.hpp"
#include "pr/poset.hpp"

namespace pr {

/// Searches an explicitly colored lattice (N ≤ 24) for a monochromatic copy
/// of P in the given color. Backtracks over a most-constrained-first linear
/// extension; candidates are filtered by color, by the interval spanned by
/// already-placed comparable elements, and (induced kind) by incomparability
/// with every placed incomparable element. Returns a verified embedding, or
/// nullopt exactly when no copy exists.
std::optional<Embedding> find_mono_copy(GroundSet lattice, const Coloring& coloring,
                                        const FinitePoset& p, Color color, EmbedKind kind);

/// Test oracle: enumerates every injection of P into the color class and
/// verifies each at the leaf. |P| ≤ 6 and N ≤ 4; throws std::invalid_argument
/// beyond that.
bool brute_force_copy_exists(GroundSet lattice, const Coloring& coloring, const FinitePoset& p,
                             Color color, EmbedKind kind);

namespace detail {

/// Core backtracker over an explicit candidate list of vertex bit patterns
/// (any subset of the lattice, e.g. the assigned prefix of a partial
/// coloring). Candidates must be sorted in (size,lex) order for deterministic
/// witnesses. If `pinned` is set, only copies using that vertex are found.
std::optional<std::vector<std::uint64_t>> search_copy_masks(
    std::span<const std::uint64_t> candidates, const FinitePoset& p, EmbedKind kind,
    std::optional<std::uint64_t> pinned);

}  // namespace detail

}  // namespace pr
