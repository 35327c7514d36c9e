#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pr/coloring.hpp"
#include "pr/embedding.hpp"
#include "pr/lattice.hpp"
#include "pr/poset.hpp"

namespace pr {

/// A fully materialized monochromatic copy: the pattern it is a copy of, the
/// color, and the verified embedding.
struct MonoCopy {
  Color color = Color::Red;
  std::string pattern_name;
  Embedding embedding;
};

/// Finds a blue Q_m or a red Q_n in any coloring of the lattice on
/// N = nm+n+m ground elements, by the basic blob partition argument. The
/// ground set is split as X = [0,n) and n+1 variable blocks of size m; each
/// subset of X gets a blob, a fully blue blob is a blue Q_m, otherwise the
/// red picks form a red Q_n. Requires 2^n and 2^m materializable.
MonoCopy blob_partition_embed(std::uint64_t m, std::uint64_t n, const Coloring& coloring);

/// Extends a partial monochromatic embedding of the bottom t layers of
/// Q(ground_x) to a full copy, or finds a copy of Q_other in the opposite
/// color inside one completion blob.
///
/// `phi` must be an own-colored, ground_x-good strong embedding on all
/// subsets of ground_x with size <= t, of volume <= N - (|ground_x|-t)*other.
/// Violations raise HypothesisViolation naming the failed requirement.
MonoCopy extend_lower_embedding(const Coloring& coloring, const Vertex& ground_x,
                                std::uint32_t t,
                                const std::function<Vertex(const Vertex&)>& phi,
                                std::uint64_t other, Color own);

/// A monochromatic red truncated blob of small volume completes to a full
/// red Q_|variable| (or yields a blue Q_m): the blob is the image of the
/// base-union embedding, which is handed to extend_lower_embedding.
MonoCopy complete_red_blob(const Coloring& coloring, const Blob& red_blob, std::uint64_t m);

/// Result of the band-or-cube completion: either an induced Q_n in the color
/// opposite the requested band color, or an induced copy of layers s..t of
/// Q_n in the band color.
struct BandOrCube {
  std::optional<MonoCopy> cube;
  std::optional<MonoCopy> band;
  std::vector<Vertex> band_elements;  // abstract subsets of [0,n), (size,lex)
};

/// Requires host dimension >= (t-s+2)*n. With band_color red this reads: any
/// coloring contains a blue induced Q_n or a red induced copy of the
/// (s,t)-truncated lattice on n elements.
BandOrCube cube_or_band(const Coloring& coloring, std::uint32_t n, std::uint32_t s,
                        std::uint32_t t, Color band_color = Color::Red);

// ---------------------------------------------------------------------------
// Diagonal diamond / fork constructions
// ---------------------------------------------------------------------------

/// Monochromatic induced n-diamond in any coloring of the lattice on
/// N = alpha(n) + alpha(2n-1) elements (n >= 2, explicit coloring). The case
/// analysis walks the layers floor(alpha/2) and N - floor(alpha/2).
MonoCopy find_mono_diamond(std::uint32_t n, const Coloring& coloring);

/// Monochromatic induced n-fork in any coloring of the lattice on
/// N = n_plus(n) elements (n >= 2, explicit coloring).
MonoCopy find_mono_fork(std::uint32_t n, const Coloring& coloring);

enum class WitnessKind : std::uint8_t { Diamond, Fork };

/// Extremal colorings avoiding any monochromatic copy: diamond on
/// 2 alpha(n)-1 elements (red below layer alpha(n)), fork on n_star(n)
/// elements (red below layer beta(n_star(n), n)).
Coloring witness_coloring(WitnessKind kind, std::uint32_t n);

// ---------------------------------------------------------------------------
// Q_m versus Q_n via truncated blobs
// ---------------------------------------------------------------------------

/// Integer truncation plan for the refined construction. Layout over [0,N):
/// ground copy X = [0,m); reservoir blocks follow, Y(0) of size n and Y(i) of
/// size 2^(i-1) t_eta; completion blocks after the reservoirs.
struct QmqnPlan {
  std::uint64_t m = 0, n = 0;
  double epsilon = 0.0;
  std::uint64_t t_mu = 0, t_eta = 0;
  std::uint64_t host_dim = 0;         // floor(n (m - (1-eps)^2 log2 m))
  std::uint64_t reservoir_total = 0;  // n + (2^t_mu - 1) t_eta
  double rounding_slack = 0.0;        // |host_dim - (n(m-t_mu) + eps n t_mu)|
  bool condition_holds = false;

  std::uint64_t res_prefix_size(std::uint64_t i) const;  // |Y(0) u .. u Y(i)|
  std::uint64_t res_begin() const { return m; }
  std::uint64_t res_end() const { return m + reservoir_total; }
};

QmqnPlan make_qmqn_plan(std::uint64_t m, std::uint64_t n, double eps,
                        bool override_condition = false);

struct LayerIdentity {
  std::string name;
  std::uint64_t layer = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool ok = false;
};

struct QmqnOptions {
  std::optional<std::uint64_t> probe_limit;  // per-blob scan cap, default min(count, 2048)
  bool override_condition = false;
  std::uint64_t sample_seed = 1;
  std::uint64_t sample_per_layer = 3;
};

/// Outcome of the construction on a concrete coloring. Copies of dimension
/// <= 12 are materialized and verified in full; larger ones are verified on
/// the deterministic sample recorded here (every sampled vertex color-checked
/// at materialization, all sampled pairs checked for the induced condition).
struct QmqnResult {
  Color color = Color::Red;
  std::uint64_t copy_dim = 0;  // m for blue, n for red
  QmqnPlan plan;
  std::vector<std::pair<Vertex, Vertex>> sample;  // (abstract subset, image)
  bool sample_verified = false;
  std::vector<LayerIdentity> identities;
  std::uint64_t queries_used = 0;
  bool phase1_fired = false;  // an exactly scanned all-red truncated blob
  bool presumed_red = false;  // red route entered on an inconclusive scan
};

/// Runs the construction: scan truncated blobs for blue vertices while
/// building an X-good blue embedding of the bottom t_mu layers, switch to the
/// red route when a truncated blob within the volume budget turns out red.
/// Errors: BudgetExceeded (oracle budget, or an inconclusive bounded scan),
/// InfeasibleArithmetic (a required set selection cannot fit), ConstructionBug
/// (internal certificate; never an expected outcome).
QmqnResult qmqn_construct(std::uint64_t m, std::uint64_t n, double eps,
                          const Coloring& coloring, const QmqnOptions& opts = {});

/// Standalone exhaustive scan for tiny hosts: walks every truncated blob with
/// an n-element variable set, truncated at t_eta added elements, whose base
/// has at most max_base elements, in (size,lex) order of (base, variable).
/// Returns the first monochromatically red one. The in-construction scan only
/// ever visits the bases its embedding produces; this visits them all.
std::optional<Blob> find_red_truncated_blob(const Coloring& coloring, std::uint32_t n,
                                            std::uint64_t t_eta, std::uint64_t max_base);

// ---------------------------------------------------------------------------
// Weak copies via sausage chains
// ---------------------------------------------------------------------------

struct SausageChainInfo {
  std::uint32_t n = 0;
  std::uint64_t host_dim = 0;
  double q = 0.0;
  std::uint64_t floor_qn = 0, ceil_qn = 0;
  std::vector<std::uint64_t> sigma;          // prefix sums of marker deltas
  std::vector<Vertex> lower_markers;         // Z_i
  std::vector<Vertex> upper_markers;         // Z'_i
  std::uint64_t middle_dim = 0;              // |Z'_last| - |Z_last|
  std::vector<std::uint64_t> sausage_sizes;  // 2^(delta_i) - 1, one per index

  /// The interval between the innermost markers; hosts the band completion.
  Blob middle_blob() const {
    return Blob(lower_markers.back(), upper_markers.back().minus(lower_markers.back()));
  }
};

struct WeakCopyWitness {
  Color color = Color::Red;
  std::uint32_t s = 0, t = 0;
  std::vector<std::vector<Vertex>> lower_parts;  // P_0 .. P_{s-1}
  std::vector<Vertex> middle_elements;           // abstract subsets of [0,n)
  std::vector<Vertex> middle_images;
  std::vector<std::vector<Vertex>> upper_parts;  // P'_{t+1} .. P'_n
  Embedding weak_embedding;                      // over boolean:n
  bool also_induced = false;
};

struct SausageOutcome {
  SausageChainInfo chain;
  Color majority = Color::Red;
  std::optional<MonoCopy> minority_cube;  // induced Q_n in the minority color
  std::optional<WeakCopyWitness> witness;
};

/// Builds the nested marker chain, takes each sausage's majority color (ties
/// red), stacks majority-colored parts below and above, and completes the
/// middle through cube_or_band. Throws DimensionTooSmall when the middle
/// interval cannot host the band completion.
SausageOutcome sausage_chain_build(std::uint32_t n, std::uint64_t host_dim,
                                   const Coloring& coloring);

}  // namespace pr
