#include "pr/ramsey_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "pr/errors.hpp"

namespace pr {

namespace {

std::vector<std::uint64_t> size_lex_masks(std::uint32_t n_host) {
  std::vector<std::uint64_t> order;
  order.reserve(1ULL << n_host);
  for (std::uint64_t m = 0; m < (1ULL << n_host); ++m) order.push_back(m);
  std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    std::uint64_t d = a ^ b;
    if (d == 0) return false;
    return (a & (d & -d)) != 0;
  });
  return order;
}

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};
  std::optional<std::uint64_t> budget;
};

// ---------------------------------------------------------------------------
// Specialized engine for lattices of at most 64 vertices: vertex sets are
// machine words and the subset relation is a precomputed table, which makes
// the per-assignment forcing check a handful of word operations.
// ---------------------------------------------------------------------------

struct FastLattice {
  std::uint32_t verts;
  std::array<std::uint64_t, 64> strict_sup{};
  std::array<std::uint64_t, 64> strict_sub{};
  std::array<std::uint64_t, 64> incomp{};

  explicit FastLattice(std::uint32_t n_host) : verts(1u << n_host) {
    for (std::uint32_t v = 0; v < verts; ++v)
      for (std::uint32_t w = 0; w < verts; ++w) {
        if (w == v) continue;
        if ((v & ~w) == 0)
          strict_sup[v] |= 1ULL << w;
        else if ((w & ~v) == 0)
          strict_sub[v] |= 1ULL << w;
        else
          incomp[v] |= 1ULL << w;
      }
  }
};

struct FastPattern {
  std::uint32_t k;
  std::vector<std::uint32_t> below;  // strictly-below elements, as element bitmask
  std::vector<std::uint32_t> above;
  std::vector<std::vector<std::uint8_t>> pin_orders;  // placement order per pinned element

  explicit FastPattern(const FinitePoset& p) : k(p.size()), below(k, 0), above(k, 0) {
    for (std::uint32_t a = 0; a < k; ++a)
      for (std::uint32_t b = 0; b < k; ++b)
        if (p.strictly_less(a, b)) {
          below[b] |= 1u << a;
          above[a] |= 1u << b;
        }
    for (std::uint32_t pin = 0; pin < k; ++pin) {
      std::vector<std::uint8_t> order{static_cast<std::uint8_t>(pin)};
      std::uint32_t placed = 1u << pin;
      while (order.size() < k) {
        std::int32_t best = -1;
        std::uint32_t best_linked = 0;
        for (std::uint32_t e = 0; e < k; ++e) {
          if (placed & (1u << e)) continue;
          // prefer elements already related to many placed ones
          std::uint32_t linked =
              static_cast<std::uint32_t>(std::popcount((below[e] | above[e]) & placed));
          if (best < 0 || linked > best_linked) {
            best = static_cast<std::int32_t>(e);
            best_linked = linked;
          }
        }
        order.push_back(static_cast<std::uint8_t>(best));
        placed |= 1u << static_cast<std::uint32_t>(best);
      }
      pin_orders.push_back(std::move(order));
    }
  }
};

bool fast_copy_rec(const FastLattice& lat, const FastPattern& pat, EmbedKind kind,
                   const std::vector<std::uint8_t>& order, std::uint64_t cand_set,
                   std::array<std::uint8_t, 32>& img, std::uint64_t used, std::size_t step) {
  if (step == order.size()) return true;
  std::uint32_t e = order[step];
  std::uint64_t allowed = cand_set & ~used;
  for (std::size_t s = 0; s < step && allowed; ++s) {
    std::uint32_t f = order[s];
    std::uint32_t w = img[f];
    if (pat.below[e] & (1u << f))
      allowed &= lat.strict_sup[w];
    else if (pat.above[e] & (1u << f))
      allowed &= lat.strict_sub[w];
    else if (kind == EmbedKind::Induced)
      allowed &= lat.incomp[w];
  }
  while (allowed) {
    std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(allowed));
    allowed &= allowed - 1;
    img[e] = static_cast<std::uint8_t>(v);
    if (fast_copy_rec(lat, pat, kind, order, cand_set, img, used | (1ULL << v), step + 1))
      return true;
  }
  return false;
}

// does the candidate set hold a copy of the pattern through `pin_vertex`?
bool fast_forced(const FastLattice& lat, const FastPattern& pat, EmbedKind kind,
                 std::uint64_t cand_set, std::uint32_t pin_vertex) {
  if (static_cast<std::uint32_t>(std::popcount(cand_set)) < pat.k) return false;
  std::array<std::uint8_t, 32> img{};
  for (std::uint32_t pin = 0; pin < pat.k; ++pin) {
    img[pin] = static_cast<std::uint8_t>(pin_vertex);
    if (fast_copy_rec(lat, pat, kind, pat.pin_orders[pin], cand_set, img, 1ULL << pin_vertex, 1))
      return true;
  }
  return false;
}

struct FastDfs {
  const std::vector<std::uint64_t>& order;  // vertex masks in assignment order
  const FastLattice& lat;
  const FastPattern& pat_p;
  const FastPattern& pat_q;
  EmbedKind kind;
  bool fix_empty_red;
  Shared& shared;

  std::uint64_t blue_set = 0, red_set = 0;  // vertex-id sets

  bool run(std::size_t pos) {
    if (shared.stop.load(std::memory_order_relaxed)) return false;
    if (shared.budget &&
        shared.nodes.fetch_add(1, std::memory_order_relaxed) >= *shared.budget) {
      shared.out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    if (!shared.budget) shared.nodes.fetch_add(1, std::memory_order_relaxed);
    if (pos == order.size()) return true;
    std::uint32_t v = static_cast<std::uint32_t>(order[pos]);
    for (Color c : {Color::Red, Color::Blue}) {
      if (pos == 0 && fix_empty_red && c == Color::Blue) continue;
      std::uint64_t& set = c == Color::Blue ? blue_set : red_set;
      set |= 1ULL << v;
      bool dead = c == Color::Blue ? fast_forced(lat, pat_p, kind, blue_set, v)
                                   : fast_forced(lat, pat_q, kind, red_set, v);
      if (!dead && run(pos + 1)) return true;
      set &= ~(1ULL << v);
      if (shared.out_of_budget.load(std::memory_order_relaxed) ||
          shared.stop.load(std::memory_order_relaxed))
        return false;
    }
    return false;
  }

  void collect_prefixes(std::size_t pos, std::size_t depth,
                        std::vector<std::pair<std::uint64_t, std::uint64_t>>& out) {
    if (pos == depth) {
      out.emplace_back(blue_set, red_set);
      return;
    }
    std::uint32_t v = static_cast<std::uint32_t>(order[pos]);
    for (Color c : {Color::Red, Color::Blue}) {
      if (pos == 0 && fix_empty_red && c == Color::Blue) continue;
      std::uint64_t& set = c == Color::Blue ? blue_set : red_set;
      set |= 1ULL << v;
      bool dead = c == Color::Blue ? fast_forced(lat, pat_p, kind, blue_set, v)
                                   : fast_forced(lat, pat_q, kind, red_set, v);
      if (!dead) collect_prefixes(pos + 1, depth, out);
      set &= ~(1ULL << v);
    }
  }
};

ExistsResult exists_fast(std::uint32_t n_host, const FinitePoset& p, const FinitePoset& q,
                         EmbedKind kind, bool sym, Shared& shared,
                         const std::vector<std::uint64_t>& order, unsigned threads) {
  FastLattice lat(n_host);
  FastPattern pat_p(p), pat_q(q);
  ExistsResult res;
  auto finish = [&](bool found, std::uint64_t blue_set) {
    if (found) {
      res.decision = Decision::Found;
      std::vector<Color> cells(1ULL << n_host, Color::Red);
      for (std::uint32_t v = 0; v < (1u << n_host); ++v)
        if (blue_set >> v & 1) cells[v] = Color::Blue;
      res.witness = Coloring::table(n_host, std::move(cells));
    } else {
      res.decision = shared.out_of_budget.load() ? Decision::Unknown : Decision::NotFound;
    }
  };
  if (threads <= 1) {
    FastDfs dfs{order, lat, pat_p, pat_q, kind, sym, shared};
    bool found = dfs.run(0);
    finish(found, dfs.blue_set);
    return res;
  }
  std::size_t depth = 1;
  while ((1ULL << depth) < 4ULL * threads && depth + 1 < order.size()) ++depth;
  depth = std::min(depth, order.size());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> prefixes;
  {
    FastDfs seed{order, lat, pat_p, pat_q, kind, sym, shared};
    seed.collect_prefixes(0, depth, prefixes);
  }
  std::atomic<std::size_t> next{0};
  std::uint64_t winner_blue = 0;
  std::atomic<bool> have_winner{false};
  std::mutex winner_mu;
  auto worker = [&]() {
    while (!shared.stop.load()) {
      std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      FastDfs dfs{order, lat, pat_p, pat_q, kind, sym, shared};
      dfs.blue_set = prefixes[i].first;
      dfs.red_set = prefixes[i].second;
      if (dfs.run(depth)) {
        std::lock_guard<std::mutex> lock(winner_mu);
        if (!have_winner.exchange(true)) winner_blue = dfs.blue_set;
        shared.stop.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  finish(have_winner.load(), winner_blue);
  return res;
}

struct Dfs {
  const std::vector<std::uint64_t>& order;
  const FinitePoset& p;
  const FinitePoset& q;
  EmbedKind kind;
  bool fix_empty_red;
  Shared& shared;

  std::vector<std::uint64_t> blue, red;  // assigned prefixes, (size,lex) sorted

  Dfs(const std::vector<std::uint64_t>& o, const FinitePoset& pp, const FinitePoset& qq,
      EmbedKind k, bool sym, Shared& sh)
      : order(o), p(pp), q(qq), kind(k), fix_empty_red(sym), shared(sh) {}

  bool forces_copy(std::uint64_t v, Color c) const {
    const auto& list = c == Color::Blue ? blue : red;
    const FinitePoset& pattern = c == Color::Blue ? p : q;
    return detail::search_copy_masks(list, pattern, kind, v).has_value();
  }

  // true once a full good coloring is assigned (lists left holding it)
  bool run(std::size_t pos) {
    if (shared.stop.load(std::memory_order_relaxed)) return false;
    if (shared.budget &&
        shared.nodes.fetch_add(1, std::memory_order_relaxed) >= *shared.budget) {
      shared.out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    if (!shared.budget) shared.nodes.fetch_add(1, std::memory_order_relaxed);
    if (pos == order.size()) return true;
    std::uint64_t v = order[pos];
    for (Color c : {Color::Red, Color::Blue}) {
      if (pos == 0 && fix_empty_red && c == Color::Blue) continue;
      auto& list = c == Color::Blue ? blue : red;
      list.push_back(v);
      if (!forces_copy(v, c) && run(pos + 1)) return true;
      list.pop_back();
      if (shared.out_of_budget.load(std::memory_order_relaxed) ||
          shared.stop.load(std::memory_order_relaxed))
        return false;
    }
    return false;
  }

  // enumerate non-dead prefix assignments of the first `depth` vertices
  void collect_prefixes(std::size_t pos, std::size_t depth,
                        std::vector<std::pair<std::vector<std::uint64_t>,
                                              std::vector<std::uint64_t>>>& out) {
    if (pos == depth) {
      out.emplace_back(blue, red);
      return;
    }
    std::uint64_t v = order[pos];
    for (Color c : {Color::Red, Color::Blue}) {
      if (pos == 0 && fix_empty_red && c == Color::Blue) continue;
      auto& list = c == Color::Blue ? blue : red;
      list.push_back(v);
      if (!forces_copy(v, c)) collect_prefixes(pos + 1, depth, out);
      list.pop_back();
    }
  }
};

Coloring coloring_from_lists(std::uint32_t n_host, const std::vector<std::uint64_t>& blue) {
  std::vector<Color> cells(1ULL << n_host, Color::Red);
  for (std::uint64_t m : blue) cells[m] = Color::Blue;
  return Coloring::table(n_host, std::move(cells));
}

}  // namespace

ExistsResult exists_good_coloring(std::uint32_t n_host, const FinitePoset& p,
                                  const FinitePoset& q, EmbedKind kind,
                                  std::optional<std::uint64_t> node_budget, unsigned threads) {
  if (n_host > Coloring::kMaxTableDim)
    throw std::invalid_argument("exists_good_coloring: N <= 24");
  auto t0 = std::chrono::steady_clock::now();
  auto order = size_lex_masks(n_host);
  bool sym = p.size() == q.size() && p.size() <= 12 && poset_isomorphic(p, q);

  Shared shared;
  shared.budget = node_budget;
  ExistsResult res;

  if (n_host <= 6 && p.size() <= 32 && q.size() <= 32) {
    res = exists_fast(n_host, p, q, kind, sym, shared, order, threads);
    res.stats.nodes = shared.nodes.load();
    res.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  if (threads <= 1) {
    Dfs dfs(order, p, q, kind, sym, shared);
    if (dfs.run(0)) {
      res.decision = Decision::Found;
      res.witness = coloring_from_lists(n_host, dfs.blue);
    } else {
      res.decision =
          shared.out_of_budget.load() ? Decision::Unknown : Decision::NotFound;
    }
  } else {
    std::size_t depth = 1;
    while ((1ULL << depth) < 4ULL * threads && depth + 1 < order.size()) ++depth;
    depth = std::min(depth, order.size());
    std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> prefixes;
    {
      Dfs seed(order, p, q, kind, sym, shared);
      seed.collect_prefixes(0, depth, prefixes);
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::uint64_t> winner_blue;
    std::atomic<bool> have_winner{false};
    std::mutex winner_mu;
    auto worker = [&]() {
      while (!shared.stop.load()) {
        std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) return;
        Dfs dfs(order, p, q, kind, sym, shared);
        dfs.blue = prefixes[i].first;
        dfs.red = prefixes[i].second;
        if (dfs.run(depth)) {
          std::lock_guard<std::mutex> lock(winner_mu);
          if (!have_winner.exchange(true)) winner_blue = dfs.blue;
          shared.stop.store(true);
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (have_winner.load()) {
      res.decision = Decision::Found;
      res.witness = coloring_from_lists(n_host, winner_blue);
    } else {
      res.decision = shared.out_of_budget.load() ? Decision::Unknown : Decision::NotFound;
    }
  }
  res.stats.nodes = shared.nodes.load();
  res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

namespace {

SearchResult ramsey_search(const FinitePoset& p, const FinitePoset& q, std::uint32_t n_max,
                           EmbedKind kind, std::optional<std::uint64_t> node_budget,
                           unsigned threads) {
  SearchResult res;
  std::optional<Coloring> prev_witness;
  for (std::uint32_t n_host = 0; n_host <= n_max; ++n_host) {
    ExistsResult e = exists_good_coloring(n_host, p, q, kind, node_budget, threads);
    res.stats.nodes += e.stats.nodes;
    res.stats.seconds += e.stats.seconds;
    if (e.decision == Decision::Unknown) return res;  // undecided, value stays empty
    if (e.decision == Decision::NotFound) {
      res.value = n_host;
      res.witness = prev_witness;
      if (res.witness) {
        // the witness must really be free of monochromatic copies
        GroundSet g{n_host - 1};
        if (find_mono_copy(g, *res.witness, p, Color::Blue, kind) ||
            find_mono_copy(g, *res.witness, q, Color::Red, kind))
          throw ConstructionBug("ramsey search: witness coloring contains a forbidden copy");
      }
      return res;
    }
    prev_witness = e.witness;
  }
  return res;  // every dimension up to n_max still has a good coloring
}

}  // namespace

SearchResult ramsey_number_exact(const FinitePoset& p, const FinitePoset& q, std::uint32_t n_max,
                                 std::optional<std::uint64_t> node_budget, unsigned threads) {
  return ramsey_search(p, q, n_max, EmbedKind::Induced, node_budget, threads);
}

SearchResult weak_ramsey_exact(const FinitePoset& p, const FinitePoset& q, std::uint32_t n_max,
                               std::optional<std::uint64_t> node_budget, unsigned threads) {
  return ramsey_search(p, q, n_max, EmbedKind::Weak, node_budget, threads);
}

}  // namespace pr
