#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pr/vertex.hpp"

namespace pr {

enum class Color : std::uint8_t { Blue, Red };

inline Color opposite(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }
inline char color_char(Color c) { return c == Color::Blue ? 'B' : 'R'; }
const char* color_name(Color c);

/// A total blue/red coloring of the Boolean lattice on [0, N).
///
/// Two modes. Explicit table: one cell per vertex, indexed by the vertex bit
/// pattern, N ≤ 24. Oracle: a total function with mandatory memoization and
/// an optional cap on distinct queries; repeated queries of a vertex count
/// once. Copies share the memo table, and queries are safe to issue from
/// several threads over the same coloring.
class Coloring {
 public:
  static constexpr std::uint32_t kMaxTableDim = 24;

  static Coloring table(std::uint32_t n, std::vector<Color> cells);
  static Coloring oracle(std::uint32_t n, std::function<Color(const Vertex&)> fn,
                         std::optional<std::uint64_t> query_budget = std::nullopt);

  std::uint32_t dim() const { return n_; }
  bool is_table() const { return oracle_ == nullptr; }

  Color of(const Vertex& v) const;
  Color of_mask(std::uint64_t mask) const;  // table mode only

  std::uint64_t oracle_queries() const;
  std::optional<std::uint64_t> query_budget() const;

  /// Materializes an oracle into an explicit table (N ≤ 24); tables are
  /// returned as-is.
  Coloring to_table() const;

  /// Same lattice with the two colors exchanged.
  Coloring swapped() const;

  const std::vector<Color>& cells() const;

  // --- file format ---
  // line 1: N=<int>
  // line 2: 2^N characters over {B,R}; character i colors the vertex whose
  //         bit pattern equals i
  std::string to_file_string() const;
  static Coloring parse(std::string_view text);
  static Coloring read_file(const std::string& path);
  void write_file(const std::string& path) const;

 private:
  struct OracleState {
    std::function<Color(const Vertex&)> fn;
    std::optional<std::uint64_t> budget;
    mutable std::mutex mu;
    mutable std::unordered_map<Vertex, Color> memo;
    mutable std::uint64_t used = 0;
  };

  std::uint32_t n_ = 0;
  std::vector<Color> cells_;
  std::shared_ptr<OracleState> oracle_;
};

// Built-in colorings. The random ones are pure functions of (seed, vertex),
// identical across runs and platforms.
Coloring constant_coloring(std::uint32_t n, Color c,
                           std::optional<std::uint64_t> budget = std::nullopt);
/// Red iff |Z| < threshold.
Coloring layered_coloring(std::uint32_t n, std::uint64_t threshold,
                          std::optional<std::uint64_t> budget = std::nullopt);
Coloring random_oracle(std::uint32_t n, std::uint64_t seed, double p_blue = 0.5,
                       std::optional<std::uint64_t> budget = std::nullopt);
Coloring random_table(std::uint32_t n, std::uint64_t seed, double p_blue = 0.5);

/// Parses oracle specs: all-blue | all-red | layered:<threshold> |
/// random:<seed>[:<p_blue>].
Coloring make_oracle(std::string_view spec, std::uint32_t n,
                     std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace pr
