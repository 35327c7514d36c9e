#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "pr/binom.hpp"
#include "pr/coloring.hpp"
#include "pr/errors.hpp"
#include "pr/lattice.hpp"
#include "pr/rng.hpp"
#include "pr/vertex.hpp"

using namespace pr;

namespace {

std::vector<Vertex> random_vertex_family(SplitMix& rng, std::uint32_t max_elem, std::size_t count,
                                         std::size_t max_size) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::uint32_t> members;
    std::size_t sz = rng.next_below(max_size + 1);
    for (std::size_t j = 0; j < sz; ++j)
      members.push_back(static_cast<std::uint32_t>(rng.next_below(max_elem)));
    out.push_back(Vertex::from_members(members));
  }
  return out;
}

}  // namespace

TEST_CASE("vertex representation is canonical and order-free") {
  Vertex dense = Vertex::from_members({3, 1, 2});
  Vertex same = Vertex::from_members({2, 3, 1, 1});
  CHECK(dense == same);
  CHECK(dense.mask() == 0b1110);
  CHECK(std::hash<Vertex>{}(dense) == std::hash<Vertex>{}(same));

  Vertex big = Vertex::from_members({100, 5});
  CHECK(big.sparse());
  CHECK(big.contains(5));
  CHECK(big.contains(100));
  CHECK(!big.contains(6));
  // dropping the high member must snap back to the dense form
  Vertex small = big.minus(Vertex{100});
  CHECK(!small.sparse());
  CHECK(small == Vertex{5});
}

TEST_CASE("vertex set algebra and subset order across representations") {
  SplitMix rng(42);
  auto fam = random_vertex_family(rng, 130, 200, 10);
  for (const Vertex& a : fam) {
    for (const Vertex& b : fam) {
      std::set<std::uint32_t> sa, sb;
      for (auto e : a.members()) sa.insert(e);
      for (auto e : b.members()) sb.insert(e);
      bool expect_sub = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
      CHECK(a.subset_of(b) == expect_sub);
      std::set<std::uint32_t> su = sa;
      su.insert(sb.begin(), sb.end());
      CHECK(a.union_with(b).size() == su.size());
      CHECK(a.union_with(b).minus(b).subset_of(a));
    }
  }
}

TEST_CASE("size-lex order is layer-first then lexicographic on members") {
  CHECK(size_lex_less(Vertex{}, Vertex{0}));
  CHECK(size_lex_less(Vertex{0, 3}, Vertex{1, 2}));  // 0 < 1 decides
  CHECK(!size_lex_less(Vertex{1, 2}, Vertex{0, 3}));
  CHECK(size_lex_less(Vertex{0, 1}, Vertex{0, 2}));
  // representation independent
  CHECK(size_lex_less(Vertex::from_members({0, 3, 100}), Vertex::from_members({1, 2, 100})));
}

TEST_CASE("enumerate_blob: full two-dimensional blob") {
  Blob blob(Vertex{}, Vertex{0, 1});
  auto got = enumerate_blob(blob);
  std::vector<Vertex> want = {Vertex{}, Vertex{0}, Vertex{1}, Vertex{0, 1}};
  CHECK(got == want);
}

TEST_CASE("enumerate_blob: truncation counts total size") {
  Blob blob(Vertex{2}, Vertex{0, 1}, 2);
  auto got = enumerate_blob(blob);
  std::vector<Vertex> want = {Vertex{2}, Vertex{0, 2}, Vertex{1, 2}};
  CHECK(got == want);
  CHECK(blob.count() == 3);
}

TEST_CASE("enumerate_blob: truncation below the base gives the empty stream") {
  Blob blob(Vertex{0}, Vertex{1, 2, 3}, 0);
  CHECK(enumerate_blob(blob).empty());
  CHECK(blob.count() == 0);
}

TEST_CASE("blob vertices satisfy the sandwich and the count formula") {
  SplitMix rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    std::uint32_t n_host = 1 + static_cast<std::uint32_t>(rng.next_below(9));
    auto pick = random_vertex_family(rng, n_host, 2, 5);
    Vertex base = pick[0].minus(pick[1]);
    Vertex var = pick[1].minus(pick[0]);
    std::optional<std::uint64_t> trunc;
    if (rng.next_below(2)) trunc = rng.next_below(n_host + 2);
    Blob blob(base, var, trunc);
    auto verts = enumerate_blob(blob);
    CHECK(verts.size() == blob.count());
    std::uint64_t expect = 0;
    if (blob.count() > 0)
      for (std::uint64_t k = 0; k <= blob.max_added(); ++k) expect += binom(var.size(), k);
    CHECK(verts.size() == expect);
    Vertex top = base.union_with(var);
    for (const Vertex& z : verts) {
      CHECK(base.subset_of(z));
      CHECK(z.subset_of(top));
      if (trunc) CHECK(z.size() <= *trunc);
    }
    CHECK(std::is_sorted(verts.begin(), verts.end(), size_lex_less));
  }
}

TEST_CASE("blob construction rejects overlapping base and variable sets") {
  CHECK_THROWS_AS(Blob(Vertex{0, 1}, Vertex{1, 2}), std::invalid_argument);
}

TEST_CASE("volume") {
  std::vector<Vertex> empty_only = {Vertex{}};
  CHECK(volume(empty_only) == 0);
  std::vector<Vertex> two = {Vertex{0, 1}, Vertex{1, 2}};
  CHECK(volume(two) == 3);
  Blob blob(Vertex{4}, Vertex{0, 1});
  auto verts = enumerate_blob(blob);
  CHECK(volume(verts) == blob.base.size() + blob.variable.size());
  CHECK(volume(blob) == 3);
}

TEST_CASE("volume of a whole blob matches its enumeration for random blobs") {
  SplitMix rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    auto pick = random_vertex_family(rng, 10, 2, 6);
    Vertex base = pick[0].minus(pick[1]);
    Vertex var = pick[1].minus(pick[0]);
    if (var.empty()) continue;
    Blob blob(base, var);
    auto verts = enumerate_blob(blob);
    CHECK(volume(blob) == volume(verts));
  }
}

TEST_CASE("truncated lattice bands") {
  TruncatedLattice band(GroundSet{3}, 1, 2);
  CHECK(band.count() == 6);  // layers 1 and 2 of a 3-cube
  CHECK(TruncatedLattice(GroundSet{4}, 0, 4).count() == 16);
  CHECK_THROWS_AS(TruncatedLattice(GroundSet{3}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedLattice(GroundSet{3}, 0, 4), std::invalid_argument);
}

TEST_CASE("layer enumeration") {
  auto l0 = layer(GroundSet{3}, 0);
  REQUIRE(l0.size() == 1);
  CHECK(l0[0] == Vertex{});

  auto l2 = layer(GroundSet{4}, 2);
  REQUIRE(l2.size() == 6);
  std::vector<Vertex> want = {Vertex{0, 1}, Vertex{0, 2}, Vertex{0, 3},
                              Vertex{1, 2}, Vertex{1, 3}, Vertex{2, 3}};
  CHECK(l2 == want);

  auto top = layer(GroundSet{3}, 3);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == Vertex{0, 1, 2});

  CHECK_THROWS_AS(layer(GroundSet{3}, 4), std::invalid_argument);
}

TEST_CASE("color_of: constant, table and layered oracles") {
  Coloring red = constant_coloring(3, Color::Red);
  CHECK(red.of(Vertex{0, 2}) == Color::Red);

  Coloring tbl = Coloring::parse("N=1\nRB\n");
  CHECK(tbl.of(Vertex{}) == Color::Red);
  CHECK(tbl.of(Vertex{0}) == Color::Blue);

  Coloring layered = layered_coloring(4, 2);
  CHECK(layered.of(Vertex{0}) == Color::Red);
  CHECK(layered.of(Vertex{0, 1}) == Color::Blue);  // boundary: |v| = 2 is not < 2
}

TEST_CASE("oracle memoization counts distinct queries once") {
  int calls = 0;
  Coloring c = Coloring::oracle(
      4,
      [&calls](const Vertex&) {
        ++calls;
        return Color::Blue;
      },
      2);
  CHECK(c.of(Vertex{1}) == Color::Blue);
  CHECK(c.of(Vertex{1}) == Color::Blue);
  CHECK(c.of(Vertex{1}) == Color::Blue);
  CHECK(calls == 1);
  CHECK(c.oracle_queries() == 1);
  CHECK(c.of(Vertex{2}) == Color::Blue);
  CHECK_THROWS_AS(c.of(Vertex{3}), BudgetExceeded);
  CHECK(c.of(Vertex{1}) == Color::Blue);  // memoized answers stay available
}

TEST_CASE("explicit table and oracle wrappers of the same function agree") {
  for (std::uint32_t n_host = 0; n_host <= 12; n_host += 3) {
    auto fn = [](const Vertex& v) { return (v.size() % 2 == 0) ? Color::Red : Color::Blue; };
    Coloring oracle = Coloring::oracle(n_host, fn);
    Coloring tbl = oracle.to_table();
    for (std::uint64_t mask = 0; mask < (1ULL << n_host); ++mask) {
      Vertex v = Vertex::from_mask(mask);
      CHECK(tbl.of(v) == oracle.of(v));
    }
  }
}

TEST_CASE("table mode enforces the dimension cap and totality") {
  CHECK_THROWS_AS(Coloring::table(25, {}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::table(2, std::vector<Color>(3, Color::Red)), std::invalid_argument);
  Coloring c = constant_coloring(2, Color::Blue);
  CHECK_THROWS_AS(c.of(Vertex{5}), std::invalid_argument);
}

TEST_CASE("coloring file format round-trips byte-exactly") {
  Coloring c = random_table(4, 99);
  std::string text = c.to_file_string();
  Coloring back = Coloring::parse(text);
  CHECK(back.to_file_string() == text);
  CHECK(back.cells() == c.cells());

  CHECK_THROWS_AS(Coloring::parse("N=2\nRB\n"), std::invalid_argument);     // too few cells
  CHECK_THROWS_AS(Coloring::parse("N=2\nRBXB\n"), std::invalid_argument);   // bad character
  CHECK_THROWS_AS(Coloring::parse("M=2\nRBRB\n"), std::invalid_argument);   // bad header
  CHECK_THROWS_AS(Coloring::parse("N=2\nRBRBR\n"), std::invalid_argument);  // trailing junk
  CHECK_THROWS_AS(Coloring::parse("N=25\n"), std::invalid_argument);        // beyond the cap
}

TEST_CASE("random colorings are deterministic in the seed") {
  Coloring a = random_table(5, 1234);
  Coloring b = random_table(5, 1234);
  Coloring c = random_table(5, 1235);
  CHECK(a.cells() == b.cells());
  CHECK(a.cells() != c.cells());

  Coloring oa = random_oracle(20, 77);
  Coloring ob = random_oracle(20, 77);
  SplitMix rng(5);
  for (int i = 0; i < 50; ++i) {
    Vertex v = Vertex::from_mask(rng.next() & 0xFFFFF);
    CHECK(oa.of(v) == ob.of(v));
  }
}

TEST_CASE("make_oracle parses the built-in family") {
  CHECK(make_oracle("all-blue", 3).of(Vertex{}) == Color::Blue);
  CHECK(make_oracle("all-red", 3).of(Vertex{}) == Color::Red);
  CHECK(make_oracle("layered:1", 3).of(Vertex{}) == Color::Red);
  CHECK(make_oracle("layered:1", 3).of(Vertex{0}) == Color::Blue);
  Coloring r = make_oracle("random:9:0.99", 6);
  int blue = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask)
    if (r.of(Vertex::from_mask(mask)) == Color::Blue) ++blue;
  CHECK(blue >= 55);  // heavily blue-biased
  CHECK_THROWS_AS(make_oracle("nonsense", 3), std::invalid_argument);
}

TEST_CASE("oracle memoization is safe under concurrent queries") {
  std::atomic<int> calls{0};
  Coloring c = Coloring::oracle(12, [&calls](const Vertex& v) {
    calls.fetch_add(1);
    return v.size() % 2 ? Color::Blue : Color::Red;
  });
  auto worker = [&c]() {
    for (std::uint64_t mask = 0; mask < 4096; ++mask) {
      Vertex v = Vertex::from_mask(mask);
      CHECK(c.of(v) == (v.size() % 2 ? Color::Blue : Color::Red));
    }
  };
  std::thread a(worker), b(worker);
  a.join();
  b.join();
  CHECK(calls.load() == 4096);  // every vertex evaluated exactly once
  CHECK(c.oracle_queries() == 4096);
}

TEST_CASE("binomials saturate instead of overflowing") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 7) == 0);
  CHECK(binom(67, 33) == 14226520737620288370ULL);  // still exact near the top
  CHECK(binom(68, 34) == kBinomSaturated);
  CHECK(binom_at_least(68, 34, 1ULL << 63));
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(70) == 7);
}
