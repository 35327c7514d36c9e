#pragma once

// Shared internals of the constructive operations.

#include <cstdint>
#include <optional>
#include <vector>

#include "pr/coloring.hpp"
#include "pr/lattice.hpp"
#include "pr/vertex.hpp"

namespace pr::detail {

enum class ScanStatus { Found, AllOpposite, Inconclusive };

struct ScanResult {
  ScanStatus status;
  Vertex found;              // valid when status == Found
  std::uint64_t probes = 0;  // vertices examined
};

/// Walks the blob in (size,lex) order looking for a `want`-colored vertex,
/// examining at most `probe_limit` vertices.
ScanResult scan_blob(const Coloring& coloring, const Blob& blob, Color want,
                     std::uint64_t probe_limit);

/// abstract subset of [0, ground.size()) -> actual vertex over `ground`'s members
Vertex rename_subset(const Vertex& abstract, const std::vector<std::uint32_t>& ground);

/// All subsets of [0,k) in (size,lex) order; k <= 20.
std::vector<Vertex> subsets_size_lex(std::uint32_t k);

/// First `count` indices of [0,host) not in `used`, ascending.
Vertex pick_free_indices(const Vertex& used, std::uint64_t host, std::uint64_t count,
                         std::uint64_t start_at = 0);

}  // namespace pr::detail
