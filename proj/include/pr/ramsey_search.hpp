#pragma once

#include <cstdint>
#include <optional>

#include "pr/coloring.hpp"
#include "pr/copy_search.hpp"
#include "pr/poset.hpp"

namespace pr {

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

enum class Decision : std::uint8_t { Found, NotFound, Unknown };

struct ExistsResult {
  Decision decision = Decision::Unknown;
  std::optional<Coloring> witness;  // a good coloring when decision == Found
  SearchStats stats;
};

/// Searches for a coloring of the lattice on [0,N) with no blue copy of P and
/// no red copy of Q (a "good" coloring). Depth-first over vertices in
/// (size,lex) order; after each assignment the colored prefix is checked for
/// a forced monochromatic copy through the just-colored vertex and pruned.
/// When P and Q are isomorphic the empty set is fixed red (color swap
/// symmetry). A node budget turns exhaustion into Unknown, never NotFound.
ExistsResult exists_good_coloring(std::uint32_t n_host, const FinitePoset& p,
                                  const FinitePoset& q, EmbedKind kind = EmbedKind::Induced,
                                  std::optional<std::uint64_t> node_budget = std::nullopt,
                                  unsigned threads = 1);

struct SearchResult {
  std::optional<std::uint32_t> value;  // nullopt when undecided within n_max
  std::optional<Coloring> witness;     // good coloring one dimension below value
  SearchStats stats;
};

/// Smallest N <= n_max whose every coloring contains a blue induced P or a
/// red induced Q, with the dimension-(N-1) witness re-verified.
SearchResult ramsey_number_exact(const FinitePoset& p, const FinitePoset& q, std::uint32_t n_max,
                                 std::optional<std::uint64_t> node_budget = std::nullopt,
                                 unsigned threads = 1);

/// Weak-copy variant of ramsey_number_exact.
SearchResult weak_ramsey_exact(const FinitePoset& p, const FinitePoset& q, std::uint32_t n_max,
                               std::optional<std::uint64_t> node_budget = std::nullopt,
                               unsigned threads = 1);

}  // namespace pr
