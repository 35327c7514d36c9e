#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "constructive_util.hpp"
#include "pr/binom.hpp"
#include "pr/constructive.hpp"
#include "pr/errors.hpp"
#include "pr/numerics.hpp"

namespace pr {

namespace {

std::vector<Vertex> strict_interval(const Vertex& base, const Vertex& extra, bool drop_top) {
  // {base u D : D subseteq extra}, minus the top (D = extra) or the bottom
  // (D = empty); (size,lex) order either way
  std::vector<Vertex> out = enumerate_blob(Blob(base, extra));
  if (drop_top)
    out.pop_back();
  else
    out.erase(out.begin());
  return out;
}

Color sausage_majority(const std::vector<Vertex>& sausage, const Coloring& coloring,
                       std::uint64_t& red_count) {
  red_count = 0;
  for (const Vertex& v : sausage)
    if (coloring.of(v) == Color::Red) ++red_count;
  return 2 * red_count >= sausage.size() ? Color::Red : Color::Blue;  // ties go red
}

std::vector<Vertex> take_colored(const std::vector<Vertex>& pool, const Coloring& coloring,
                                 Color c, std::uint64_t count, const char* what) {
  std::vector<Vertex> out;
  for (const Vertex& v : pool) {
    if (out.size() == count) break;
    if (coloring.of(v) == c) out.push_back(v);
  }
  if (out.size() < count)
    throw ConstructionBug(std::string("sausage chain: too few majority-colored vertices for ") +
                          what);
  return out;
}

void check_stacked(const std::vector<const std::vector<Vertex>*>& groups) {
  for (std::size_t g = 0; g + 1 < groups.size(); ++g)
    for (const Vertex& a : *groups[g])
      for (const Vertex& b : *groups[g + 1])
        if (!proper_subset(a, b))
          throw ConstructionBug("sausage chain: stacked parts are not totally ordered");
}

}  // namespace

SausageOutcome sausage_chain_build(std::uint32_t n, std::uint64_t host_dim,
                                   const Coloring& coloring) {
  if (n < 2) throw std::invalid_argument("sausage_chain_build: n >= 2");
  if (n > 12)
    throw std::invalid_argument(
        "sausage_chain_build: n <= 12 (the witness and its verification hold 2^n vertices)");
  if (coloring.dim() != host_dim)
    throw std::invalid_argument("sausage_chain_build: coloring dimension mismatch");

  SausageOutcome out;
  SausageChainInfo& chain = out.chain;
  chain.n = n;
  chain.host_dim = host_dim;
  chain.q = solve_q();
  chain.floor_qn = static_cast<std::uint64_t>(std::floor(chain.q * n));
  chain.ceil_qn = static_cast<std::uint64_t>(std::ceil(chain.q * n));
  std::uint64_t f = chain.floor_qn;

  std::vector<std::uint64_t> delta(f + 1);
  chain.sigma.resize(f + 1);
  for (std::uint64_t i = 0; i <= f; ++i) {
    delta[i] = ceil_log2(binom(n, i)) + 1;
    chain.sigma[i] = (i ? chain.sigma[i - 1] : 0) + delta[i];
    chain.sausage_sizes.push_back((1ULL << delta[i]) - 1);
  }

  std::uint64_t need = (static_cast<std::uint64_t>(n) - chain.ceil_qn + 2) * n;
  long long middle = static_cast<long long>(host_dim) - 2 * static_cast<long long>(chain.sigma[f]);
  if (middle < 0 || static_cast<std::uint64_t>(middle) < need)
    throw DimensionTooSmall("sausage chain: middle interval dimension " + std::to_string(middle) +
                                " is below (t-s+2)n = " + std::to_string(need),
                            middle, static_cast<long long>(need));
  chain.middle_dim = static_cast<std::uint64_t>(middle);

  for (std::uint64_t i = 0; i <= f; ++i) {
    chain.lower_markers.push_back(Vertex::range(0, static_cast<std::uint32_t>(chain.sigma[i])));
    chain.upper_markers.push_back(
        Vertex::range(0, static_cast<std::uint32_t>(host_dim - chain.sigma[i])));
  }

  // materialize the sausages; the chain is nested initial segments, so
  // sausage i spans the index range [sigma_{i-1}, sigma_i)
  std::vector<std::vector<Vertex>> lower(f + 1), upper(f + 1);
  for (std::uint64_t i = 0; i <= f; ++i) {
    Vertex lo_base = i ? chain.lower_markers[i - 1] : Vertex();
    Vertex lo_extra = chain.lower_markers[i].minus(lo_base);
    lower[i] = strict_interval(lo_base, lo_extra, /*drop_top=*/true);
    Vertex up_base = chain.upper_markers[i];
    Vertex up_extra =
        (i ? chain.upper_markers[i - 1] : Vertex::range(0, static_cast<std::uint32_t>(host_dim)))
            .minus(up_base);
    upper[i] = strict_interval(up_base, up_extra, /*drop_top=*/false);
    if (lower[i].size() != chain.sausage_sizes[i] || upper[i].size() != chain.sausage_sizes[i])
      throw ConstructionBug("sausage chain: cardinality identity 2^(ceil log2 C(n,i) + 1) - 1 "
                            "violated");
  }
  {
    // sausages must stack strictly: S_0 < ... < S_f < S'_f < ... < S'_0
    std::vector<const std::vector<Vertex>*> groups;
    for (std::uint64_t i = 0; i <= f; ++i) groups.push_back(&lower[i]);
    for (std::uint64_t i = f + 1; i-- > 0;) groups.push_back(&upper[i]);
    check_stacked(groups);
  }

  std::uint64_t red_major_low = 0, red_major_up = 0;
  std::vector<Color> low_major(f + 1), up_major(f + 1);
  for (std::uint64_t i = 0; i <= f; ++i) {
    std::uint64_t reds = 0;
    low_major[i] = sausage_majority(lower[i], coloring, reds);
    if (low_major[i] == Color::Red) ++red_major_low;
    up_major[i] = sausage_majority(upper[i], coloring, reds);
    if (up_major[i] == Color::Red) ++red_major_up;
  }
  std::uint64_t total_sausages = 2 * (f + 1);
  Color kappa = 2 * (red_major_low + red_major_up) >= total_sausages ? Color::Red : Color::Blue;
  out.majority = kappa;

  std::vector<std::uint64_t> low_idx, up_idx;
  for (std::uint64_t i = 0; i <= f; ++i) {
    if (low_major[i] == kappa) low_idx.push_back(i);
    if (up_major[i] == kappa) up_idx.push_back(i);
  }
  std::uint64_t s = std::min<std::uint64_t>(low_idx.size(), chain.ceil_qn);
  std::uint64_t u = chain.ceil_qn - s;
  if (up_idx.size() < u)
    throw ConstructionBug("sausage chain: not enough majority-colored sausages");
  std::uint32_t t = static_cast<std::uint32_t>(n - chain.ceil_qn + s);

  // middle interval as its own lattice: view index -> actual ground element
  Vertex z_low = chain.lower_markers[f];
  Vertex z_high = chain.upper_markers[f];
  auto vm = z_high.minus(z_low).members();
  Coloring view = Coloring::oracle(
      static_cast<std::uint32_t>(chain.middle_dim), [&coloring, z_low, vm](const Vertex& w) {
        return coloring.of(z_low.union_with(detail::rename_subset(w, vm)));
      });
  BandOrCube bc = cube_or_band(view, n, static_cast<std::uint32_t>(s), t, kappa);

  auto map_back = [&](const Vertex& view_v) {
    return z_low.union_with(detail::rename_subset(view_v, vm));
  };

  if (bc.cube) {
    MonoCopy cube;
    cube.color = bc.cube->color;
    cube.pattern_name = bc.cube->pattern_name;
    cube.embedding.kind = EmbedKind::Induced;
    for (const Vertex& v : bc.cube->embedding.map) cube.embedding.map.push_back(map_back(v));
    FinitePoset pattern = make_poset(cube.pattern_name);
    if (!verify_embedding(cube.embedding, pattern) ||
        !monochromatic(cube.embedding, coloring, cube.color))
      throw ConstructionBug("sausage chain: mapped-back cube fails verification");
    out.minority_cube = std::move(cube);
    return out;
  }

  WeakCopyWitness wit;
  wit.color = kappa;
  wit.s = static_cast<std::uint32_t>(s);
  wit.t = t;
  for (std::uint64_t j = 0; j < s; ++j)
    wit.lower_parts.push_back(
        take_colored(lower[low_idx[j]], coloring, kappa, binom(n, j), "a lower part"));
  // upper part for layer t+1+p comes from the (u-1-p)-th chosen upper sausage
  for (std::uint64_t p = 0; p < u; ++p) {
    std::uint64_t j = u - 1 - p;  // part P'_{n-j}
    wit.upper_parts.push_back(
        take_colored(upper[up_idx[j]], coloring, kappa, binom(n, n - j), "an upper part"));
  }
  wit.middle_elements = bc.band_elements;
  for (const Vertex& v : bc.band->embedding.map) wit.middle_images.push_back(map_back(v));

  // assemble the weak embedding over boolean:n
  std::unordered_map<Vertex, Vertex> middle_map;
  for (std::size_t i = 0; i < wit.middle_elements.size(); ++i)
    middle_map.emplace(wit.middle_elements[i], wit.middle_images[i]);
  std::vector<std::uint64_t> layer_rank(n + 1, 0);
  wit.weak_embedding.kind = EmbedKind::Weak;
  wit.weak_embedding.map.resize(1ULL << n);
  for (std::uint64_t id = 0; id < (1ULL << n); ++id) {
    std::uint32_t j = static_cast<std::uint32_t>(std::popcount(id));
    std::uint64_t rank = layer_rank[j]++;
    if (j < s)
      wit.weak_embedding.map[id] = wit.lower_parts[j][rank];
    else if (j <= t)
      wit.weak_embedding.map[id] = middle_map.at(Vertex::from_mask(id));
    else
      wit.weak_embedding.map[id] = wit.upper_parts[j - t - 1][rank];
  }

  FinitePoset cube_poset = make_poset("boolean:" + std::to_string(n));
  if (!verify_embedding(wit.weak_embedding, cube_poset))
    throw ConstructionBug("sausage chain: weak embedding failed verification");
  if (!monochromatic(wit.weak_embedding, coloring, kappa))
    throw ConstructionBug("sausage chain: weak copy is not monochromatic");
  {
    std::vector<const std::vector<Vertex>*> groups;
    for (const auto& part : wit.lower_parts) groups.push_back(&part);
    groups.push_back(&wit.middle_images);
    for (const auto& part : wit.upper_parts) groups.push_back(&part);
    check_stacked(groups);
  }
  Embedding as_induced{EmbedKind::Induced, wit.weak_embedding.map};
  wit.also_induced = verify_embedding(as_induced, cube_poset);
  out.witness = std::move(wit);
  return out;
}

}  // namespace pr
