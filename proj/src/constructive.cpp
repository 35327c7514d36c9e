#include "pr/constructive.hpp"

#include <algorithm>
#include <stdexcept>

#include "constructive_util.hpp"
#include "pr/binom.hpp"
#include "pr/errors.hpp"
#include "pr/extremal.hpp"

namespace pr {

namespace detail {

ScanResult scan_blob(const Coloring& coloring, const Blob& blob, Color want,
                     std::uint64_t probe_limit) {
  BlobCursor cur(blob);
  Vertex v;
  ScanResult r{ScanStatus::AllOpposite, Vertex(), 0};
  while (r.probes < probe_limit && cur.next(v)) {
    ++r.probes;
    if (coloring.of(v) == want) {
      r.status = ScanStatus::Found;
      r.found = v;
      return r;
    }
  }
  if (r.probes >= probe_limit && r.probes < blob.count()) r.status = ScanStatus::Inconclusive;
  return r;
}

Vertex rename_subset(const Vertex& abstract, const std::vector<std::uint32_t>& ground) {
  std::vector<std::uint32_t> members;
  members.reserve(abstract.size());
  abstract.for_each_member([&](std::uint32_t e) { members.push_back(ground[e]); });
  return Vertex::from_members(std::move(members));
}

std::vector<Vertex> subsets_size_lex(std::uint32_t k) {
  if (k > 20) throw std::invalid_argument("subsets_size_lex: 2^k too large to materialize");
  std::vector<Vertex> out;
  out.reserve(1ULL << k);
  for (std::uint32_t level = 0; level <= k; ++level)
    for (const Vertex& v : layer(GroundSet{k}, level)) out.push_back(v);
  return out;
}

Vertex pick_free_indices(const Vertex& used, std::uint64_t host, std::uint64_t count,
                         std::uint64_t start_at) {
  std::vector<std::uint32_t> picked;
  picked.reserve(count);
  for (std::uint64_t e = start_at; e < host && picked.size() < count; ++e)
    if (!used.contains(static_cast<std::uint32_t>(e)))
      picked.push_back(static_cast<std::uint32_t>(e));
  if (picked.size() < count)
    throw InfeasibleArithmetic("pick_free_indices: fewer than " + std::to_string(count) +
                               " ground elements available");
  return Vertex::from_members(std::move(picked));
}

}  // namespace detail

using detail::ScanStatus;

namespace {

MonoCopy blob_as_cube_copy(const Blob& blob, Color color) {
  // an untruncated blob is an induced copy of the Boolean lattice on its
  // variable set
  auto vm = blob.variable.members();
  std::uint32_t d = static_cast<std::uint32_t>(vm.size());
  MonoCopy out;
  out.color = color;
  out.pattern_name = "boolean:" + std::to_string(d);
  out.embedding.kind = EmbedKind::Induced;
  out.embedding.map.resize(1ULL << d);
  for (std::uint64_t id = 0; id < (1ULL << d); ++id)
    out.embedding.map[id] = blob.base.union_with(detail::rename_subset(Vertex::from_mask(id), vm));
  return out;
}

void check_copy(const MonoCopy& copy, const Coloring& coloring) {
  FinitePoset pattern = make_poset(copy.pattern_name);
  if (!verify_embedding(copy.embedding, pattern))
    throw ConstructionBug("constructed copy of " + copy.pattern_name +
                          " failed embedding verification");
  if (!monochromatic(copy.embedding, coloring, copy.color))
    throw ConstructionBug("constructed copy of " + copy.pattern_name + " is not " +
                          color_name(copy.color));
}

}  // namespace

MonoCopy blob_partition_embed(std::uint64_t m, std::uint64_t n, const Coloring& coloring) {
  if (m == 0 || n == 0) throw std::invalid_argument("blob_partition_embed: m,n >= 1");
  if (m > 16 || n > 16) throw std::invalid_argument("blob_partition_embed: m,n <= 16 to materialize");
  std::uint64_t host = blob_host_dimension(m, n);
  if (coloring.dim() != host)
    throw std::invalid_argument("blob_partition_embed: coloring must live on N = nm+n+m");

  auto block = [&](std::uint64_t i) {  // Y(i), i = 0..n, each of size m
    std::uint64_t begin = n + i * m;
    return Vertex::range(static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(begin + m));
  };

  std::vector<Vertex> subs = detail::subsets_size_lex(static_cast<std::uint32_t>(n));
  std::vector<Vertex> red_pick(1ULL << n);
  Vertex reservoir_prefix;  // Y(0) u .. u Y(|sub|-1)
  std::uint64_t prefix_layers = 0;
  for (const Vertex& sub : subs) {
    while (prefix_layers < sub.size()) {
      reservoir_prefix = reservoir_prefix.union_with(block(prefix_layers));
      ++prefix_layers;
    }
    Blob blob(sub.union_with(reservoir_prefix), block(sub.size()));
    auto scan = detail::scan_blob(coloring, blob, Color::Red, blob.count());
    if (scan.status == ScanStatus::AllOpposite) {
      MonoCopy blue = blob_as_cube_copy(blob, Color::Blue);
      check_copy(blue, coloring);
      return blue;
    }
    red_pick[sub.mask()] = scan.found;
  }
  MonoCopy red;
  red.color = Color::Red;
  red.pattern_name = "boolean:" + std::to_string(n);
  red.embedding.kind = EmbedKind::Induced;
  red.embedding.map = std::move(red_pick);
  check_copy(red, coloring);
  return red;
}

MonoCopy extend_lower_embedding(const Coloring& coloring, const Vertex& ground_x,
                                std::uint32_t t,
                                const std::function<Vertex(const Vertex&)>& phi,
                                std::uint64_t other, Color own) {
  std::uint32_t nx = static_cast<std::uint32_t>(ground_x.size());
  std::uint64_t host = coloring.dim();
  if (t > nx) throw HypothesisViolation("extend_lower_embedding: t <= |ground_x| fails");
  if (nx > 20) throw std::invalid_argument("extend_lower_embedding: |ground_x| <= 20");
  auto xm = ground_x.members();

  // validate the supplied partial embedding on the bottom layers
  std::vector<Vertex> lower_abs;
  std::vector<Vertex> lower_img;
  for (std::uint32_t level = 0; level <= t; ++level)
    for (const Vertex& a : layer(GroundSet{nx}, level)) lower_abs.push_back(a);
  Vertex span;
  for (const Vertex& a : lower_abs) {
    Vertex img = phi(detail::rename_subset(a, xm));
    if (coloring.of(img) != own)
      throw HypothesisViolation(std::string("extend_lower_embedding: phi is not ") +
                                color_name(own));
    if (!(img.intersect(ground_x) == detail::rename_subset(a, xm)))
      throw HypothesisViolation("extend_lower_embedding: phi is not ground-good");
    lower_img.push_back(img);
    span = span.union_with(img);
  }
  for (std::size_t i = 0; i < lower_abs.size(); ++i)
    for (std::size_t j = 0; j < lower_abs.size(); ++j) {
      if (i == j) continue;
      if (lower_abs[i].subset_of(lower_abs[j]) != lower_img[i].subset_of(lower_img[j]))
        throw HypothesisViolation("extend_lower_embedding: phi is not a strong embedding");
    }
  std::uint64_t vol = span.size();
  if (vol + (nx - t) * other > host)
    throw HypothesisViolation("extend_lower_embedding: Vol(phi) <= N - (n-t)*other fails (Vol=" +
                              std::to_string(vol) + ", N=" + std::to_string(host) + ")");

  Vertex span_with_x = span.union_with(ground_x);
  std::vector<Vertex> blocks;  // completion blocks for layers t+1..nx
  std::uint64_t cursor = 0;
  Vertex used = span_with_x;
  for (std::uint32_t level = t + 1; level <= nx; ++level) {
    Vertex b = detail::pick_free_indices(used, host, other, cursor);
    used = used.union_with(b);
    blocks.push_back(b);
  }

  Vertex off_ground = span.minus(ground_x);
  std::vector<Vertex> all_abs = detail::subsets_size_lex(nx);
  std::vector<Vertex> image(1ULL << nx);
  for (std::size_t i = 0; i < lower_abs.size(); ++i) image[lower_abs[i].mask()] = lower_img[i];
  Vertex block_prefix;
  std::uint64_t prefix_layers = 0;
  for (const Vertex& a : all_abs) {
    if (a.size() <= t) continue;
    while (prefix_layers + t + 1 < a.size()) {
      block_prefix = block_prefix.union_with(blocks[prefix_layers]);
      ++prefix_layers;
    }
    Vertex base = detail::rename_subset(a, xm).union_with(off_ground).union_with(block_prefix);
    Blob blob(base, blocks[a.size() - t - 1]);
    auto scan = detail::scan_blob(coloring, blob, own, blob.count());
    if (scan.status == ScanStatus::AllOpposite) {
      MonoCopy opp = blob_as_cube_copy(blob, opposite(own));
      check_copy(opp, coloring);
      return opp;
    }
    image[a.mask()] = scan.found;
  }
  MonoCopy out;
  out.color = own;
  out.pattern_name = "boolean:" + std::to_string(nx);
  out.embedding.kind = EmbedKind::Induced;
  out.embedding.map = std::move(image);
  check_copy(out, coloring);
  return out;
}

MonoCopy complete_red_blob(const Coloring& coloring, const Blob& red_blob, std::uint64_t m) {
  std::uint64_t t_rel = red_blob.max_added();
  std::uint64_t nx = red_blob.variable.size();
  // the blob must really be red
  for (const Vertex& v : enumerate_blob(red_blob))
    if (coloring.of(v) != Color::Red)
      throw HypothesisViolation("complete_red_blob: blob is not monochromatically red at " +
                                v.to_string());
  std::uint64_t covered = red_blob.base.size() + nx;  // |S u X|
  if (covered + (nx - t_rel) * m > coloring.dim())
    throw HypothesisViolation("complete_red_blob: |S u X| <= N - (n-t)m fails");
  const Vertex base = red_blob.base;
  return extend_lower_embedding(
      coloring, red_blob.variable, static_cast<std::uint32_t>(t_rel),
      [&base](const Vertex& sub) { return base.union_with(sub); }, m, Color::Red);
}

BandOrCube cube_or_band(const Coloring& coloring, std::uint32_t n, std::uint32_t s,
                        std::uint32_t t, Color band_color) {
  if (!(s <= t && t <= n)) throw std::invalid_argument("cube_or_band: 0 <= s <= t <= n");
  if (n > 16) throw std::invalid_argument("cube_or_band: n <= 16 to materialize");
  std::uint64_t host = coloring.dim();
  std::uint64_t need = static_cast<std::uint64_t>(t - s + 2) * n;
  if (host < need)
    throw HypothesisViolation("cube_or_band: N >= (t-s+2)n fails (N=" + std::to_string(host) +
                              ", need " + std::to_string(need) + ")");

  auto block = [&](std::uint32_t i) {  // Y(i), i = s..t, each of size n
    std::uint32_t begin = n + (i - s) * n;
    return Vertex::range(begin, begin + n);
  };

  BandOrCube out;
  std::vector<Vertex> images;
  Vertex block_prefix;
  std::uint32_t prefix_done = s;
  for (std::uint32_t level = s; level <= t; ++level) {
    for (const Vertex& w : layer(GroundSet{n}, level)) {
      while (prefix_done < level) {
        block_prefix = block_prefix.union_with(block(prefix_done));
        ++prefix_done;
      }
      Blob blob(w.union_with(block_prefix), block(level));
      auto scan = detail::scan_blob(coloring, blob, band_color, blob.count());
      if (scan.status == ScanStatus::AllOpposite) {
        MonoCopy cube = blob_as_cube_copy(blob, opposite(band_color));
        check_copy(cube, coloring);
        out.cube = std::move(cube);
        return out;
      }
      out.band_elements.push_back(w);
      images.push_back(scan.found);
    }
  }
  MonoCopy band;
  band.color = band_color;
  band.pattern_name =
      "truncated:" + std::to_string(n) + ":" + std::to_string(s) + ":" + std::to_string(t);
  band.embedding.kind = EmbedKind::Induced;
  band.embedding.map = std::move(images);
  check_copy(band, coloring);
  out.band = std::move(band);
  return out;
}

namespace {

// diamond element order: 0 = bottom, 1..n = antichain, n+1 = top
MonoCopy assemble_diamond(std::uint32_t n, Color c, const Vertex& bottom,
                          const std::vector<Vertex>& pool, const Vertex& top,
                          const Coloring& coloring) {
  if (pool.size() < n) throw ConstructionBug("diamond antichain pool is too small");
  MonoCopy out;
  out.color = c;
  out.pattern_name = "diamond:" + std::to_string(n);
  out.embedding.kind = EmbedKind::Induced;
  out.embedding.map.push_back(bottom);
  for (std::uint32_t i = 0; i < n; ++i) out.embedding.map.push_back(pool[i]);
  out.embedding.map.push_back(top);
  check_copy(out, coloring);
  return out;
}

// the 2n-1 smallest middle-layer vertices of the interval (bottom, top)
std::vector<Vertex> interval_antichain(const Vertex& bottom, const Vertex& top, std::uint32_t n) {
  Vertex free = top.minus(bottom);
  std::uint32_t dim = static_cast<std::uint32_t>(free.size());
  auto fm = free.members();
  std::vector<Vertex> out;
  LayerCursor cur(GroundSet{dim}, dim / 2);
  Vertex w;
  while (out.size() < 2 * n - 1 && cur.next(w))
    out.push_back(bottom.union_with(detail::rename_subset(w, fm)));
  if (out.size() < 2 * n - 1)
    throw ConstructionBug("interval too small for an antichain of 2n-1 vertices");
  return out;
}

std::vector<Vertex> filter_color(const std::vector<Vertex>& vs, const Coloring& coloring,
                                 Color c) {
  std::vector<Vertex> out;
  for (const Vertex& v : vs)
    if (coloring.of(v) == c) out.push_back(v);
  return out;
}

// majority-colored diamond inside the interval bounded by two color-flipped
// witnesses: col(x) != col(empty), col(y) != col(full), x strictly below y
MonoCopy diamond_from_interval(std::uint32_t n, const Coloring& coloring, const Vertex& x,
                               const Vertex& y, const Vertex& full) {
  auto anti = interval_antichain(x, y, n);
  auto reds = filter_color(anti, coloring, Color::Red);
  Color c = reds.size() >= n ? Color::Red : Color::Blue;
  auto pool = c == Color::Red ? reds : filter_color(anti, coloring, Color::Blue);
  Vertex bottom = coloring.of(Vertex()) == c ? Vertex() : x;
  Vertex top = coloring.of(full) == c ? full : y;
  return assemble_diamond(n, c, bottom, pool, top, coloring);
}

}  // namespace

MonoCopy find_mono_diamond(std::uint32_t n, const Coloring& coloring) {
  if (n < 2) throw std::invalid_argument("find_mono_diamond: n >= 2");
  std::uint64_t a = sperner_alpha(n);
  std::uint64_t host = a + sperner_alpha(2 * n - 1);
  if (coloring.dim() != host)
    throw std::invalid_argument("find_mono_diamond: coloring must live on alpha(n)+alpha(2n-1)");
  if (host > Coloring::kMaxTableDim)
    throw std::invalid_argument("find_mono_diamond: N <= 24 required");
  Coloring tbl = coloring.is_table() ? coloring : coloring.to_table();

  std::uint32_t half = static_cast<std::uint32_t>(a / 2);
  GroundSet ground{static_cast<std::uint32_t>(host)};
  std::vector<Vertex> low = layer(ground, half);
  std::vector<Vertex> high = layer(ground, static_cast<std::uint32_t>(host) - half);
  Vertex empty;
  Vertex full = ground.full();
  Color c_bottom = tbl.of(empty);
  Color c_top = tbl.of(full);

  auto first_off_color = [&](const std::vector<Vertex>& vs, Color avoid) -> const Vertex* {
    for (const Vertex& v : vs)
      if (tbl.of(v) != avoid) return &v;
    return nullptr;
  };

  if (const Vertex* py = first_off_color(high, c_top)) {
    // some top-layer vertex disagrees with the full set
    const Vertex& y = *py;
    std::vector<Vertex> below_y;
    for (const Vertex& z : low)
      if (z.subset_of(y)) below_y.push_back(z);
    const Vertex* px = first_off_color(below_y, c_bottom);
    if (!px) {
      Vertex top = tbl.of(y) == c_bottom ? y : full;
      return assemble_diamond(n, c_bottom, empty, below_y, top, tbl);
    }
    return diamond_from_interval(n, tbl, *px, y, full);
  }
  if (const Vertex* px = first_off_color(low, c_bottom)) {
    // top side monochromatic, some bottom-layer vertex disagrees with empty
    const Vertex& x = *px;
    std::vector<Vertex> above_x;
    for (const Vertex& z : high)
      if (x.subset_of(z)) above_x.push_back(z);
    const Vertex* py = first_off_color(above_x, c_top);
    if (!py) {
      Vertex bottom = tbl.of(x) == c_top ? x : empty;
      return assemble_diamond(n, c_top, bottom, above_x, full, tbl);
    }
    return diamond_from_interval(n, tbl, x, *py, full);
  }
  // both extreme layers monochromatic with their poles
  if (c_bottom == c_top) return assemble_diamond(n, c_bottom, empty, low, full, tbl);
  Vertex mid = Vertex::range(0, static_cast<std::uint32_t>(a));
  if (tbl.of(mid) == c_bottom) {
    std::vector<Vertex> inside;
    for (const Vertex& z : low)
      if (z.subset_of(mid)) inside.push_back(z);
    return assemble_diamond(n, c_bottom, empty, inside, mid, tbl);
  }
  std::vector<Vertex> outside;
  for (const Vertex& z : high)
    if (mid.subset_of(z)) outside.push_back(z);
  return assemble_diamond(n, c_top, mid, outside, full, tbl);
}

MonoCopy find_mono_fork(std::uint32_t n, const Coloring& coloring) {
  if (n < 2) throw std::invalid_argument("find_mono_fork: n >= 2");
  std::uint64_t host = n_plus(n);
  if (coloring.dim() != host)
    throw std::invalid_argument("find_mono_fork: coloring must live on n_plus(n)");
  if (host > Coloring::kMaxTableDim) throw std::invalid_argument("find_mono_fork: N <= 24");
  Coloring tbl = coloring.is_table() ? coloring : coloring.to_table();

  // normalize so the empty set is red; swap back on output
  bool swapped = tbl.of(Vertex()) == Color::Blue;
  Coloring work = swapped ? tbl.swapped() : tbl;
  auto out_color = [&](Color c) { return swapped ? opposite(c) : c; };

  std::uint64_t bplus = beta(host, n);
  GroundSet ground{static_cast<std::uint32_t>(host)};
  std::vector<Vertex> lvl = layer(ground, static_cast<std::uint32_t>(bplus));

  auto assemble = [&](Color c, const Vertex& bottom, const std::vector<Vertex>& pool) {
    if (pool.size() < n) throw ConstructionBug("fork antichain pool is too small");
    MonoCopy copy;
    copy.color = out_color(c);
    copy.pattern_name = "fork:" + std::to_string(n);
    copy.embedding.kind = EmbedKind::Induced;
    copy.embedding.map.push_back(bottom);
    for (std::uint32_t i = 0; i < n; ++i) copy.embedding.map.push_back(pool[i]);
    check_copy(copy, tbl);
    return copy;
  };

  const Vertex* blue_x = nullptr;
  for (const Vertex& v : lvl)
    if (work.of(v) == Color::Blue) {
      blue_x = &v;
      break;
    }
  if (!blue_x) return assemble(Color::Red, Vertex(), lvl);

  auto anti = interval_antichain(*blue_x, ground.full(), n);
  std::vector<Vertex> reds, blues;
  for (const Vertex& v : anti)
    (work.of(v) == Color::Red ? reds : blues).push_back(v);
  if (reds.size() >= n) return assemble(Color::Red, Vertex(), reds);
  return assemble(Color::Blue, *blue_x, blues);
}

Coloring witness_coloring(WitnessKind kind, std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("witness_coloring: n >= 2");
  std::uint64_t host, threshold;
  if (kind == WitnessKind::Diamond) {
    host = 2 * sperner_alpha(n) - 1;
    threshold = sperner_alpha(n);
  } else {
    host = n_star(n);
    threshold = beta(host, n);
  }
  if (host > Coloring::kMaxTableDim)
    throw std::invalid_argument("witness_coloring: dimension exceeds the table limit");
  std::vector<Color> cells(1ULL << host);
  for (std::uint64_t mask = 0; mask < cells.size(); ++mask)
    cells[mask] = std::popcount(mask) < static_cast<int>(threshold) ? Color::Red : Color::Blue;
  return Coloring::table(static_cast<std::uint32_t>(host), std::move(cells));
}

}  // namespace pr
