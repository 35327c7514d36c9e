// Acceptance suite: end-to-end checks of the toolkit's headline guarantees,
// one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "pr/constructive.hpp"
#include "pr/copy_search.hpp"
#include "pr/embedding.hpp"
#include "pr/errors.hpp"
#include "pr/extremal.hpp"
#include "pr/numerics.hpp"
#include "pr/ramsey_search.hpp"
#include "pr/rng.hpp"

using namespace pr;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool verified_copy(const MonoCopy& copy, const Coloring& coloring) {
  return verify_embedding(copy.embedding, make_poset(copy.pattern_name)) &&
         monochromatic(copy.embedding, coloring, copy.color);
}

bool no_mono_copy(const Coloring& coloring, const FinitePoset& p) {
  GroundSet g{coloring.dim()};
  return !find_mono_copy(g, coloring, p, Color::Blue, EmbedKind::Induced) &&
         !find_mono_copy(g, coloring, p, Color::Red, EmbedKind::Induced);
}

bool exact_values(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SearchResult r22 = ramsey_number_exact(make_poset("boolean:2"), make_poset("boolean:2"), 5);
  double s22 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r22.value || *r22.value != 4) {
    detail = "diagonal 2-cube number did not come out 4";
    return false;
  }
  if (s22 > 10.0) {
    detail = "2-cube search took " + std::to_string(s22) + " s (limit 10)";
    return false;
  }
  auto t1 = std::chrono::steady_clock::now();
  SearchResult r23 = ramsey_number_exact(make_poset("boolean:2"), make_poset("boolean:3"), 6);
  double s23 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  if (!r23.value || *r23.value != 5) {
    detail = "2-cube versus 3-cube number did not come out 5";
    return false;
  }
  if (s23 > 600.0) {
    detail = "2-vs-3 search took " + std::to_string(s23) + " s (limit 600)";
    return false;
  }
  detail = "R(2-cube,2-cube)=4 in " + std::to_string(s22) + " s, R(2-cube,3-cube)=5 in " +
           std::to_string(s23) + " s";
  return true;
}

bool lower_bound_witnesses(std::string&) {
  for (std::uint32_t n : {2u, 3u, 4u}) {
    Coloring d = witness_coloring(WitnessKind::Diamond, n);
    if (!no_mono_copy(d, make_poset("diamond:" + std::to_string(n)))) return false;
    Coloring f = witness_coloring(WitnessKind::Fork, n);
    if (!no_mono_copy(f, make_poset("fork:" + std::to_string(n)))) return false;
  }
  return true;
}

bool upper_bound_searches(std::string& detail) {
  for (std::uint32_t n : {2u, 3u}) {
    std::uint32_t dn = static_cast<std::uint32_t>(sperner_alpha(n) + sperner_alpha(2 * n - 1));
    std::uint32_t fn = static_cast<std::uint32_t>(n_plus(n));
    std::vector<Coloring> dcolorings, fcolorings;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      dcolorings.push_back(random_table(dn, seed));
      fcolorings.push_back(random_table(fn, seed));
    }
    for (Color c : {Color::Blue, Color::Red}) {
      dcolorings.push_back(constant_coloring(dn, c).to_table());
      fcolorings.push_back(constant_coloring(fn, c).to_table());
    }
    std::uint64_t d_th = sperner_alpha(n);
    std::uint64_t f_th = beta(fn, n);
    dcolorings.push_back(layered_coloring(dn, d_th).to_table());
    dcolorings.push_back(layered_coloring(dn, d_th).to_table().swapped());
    fcolorings.push_back(layered_coloring(fn, f_th).to_table());
    fcolorings.push_back(layered_coloring(fn, f_th).to_table().swapped());
    for (const Coloring& c : dcolorings)
      if (!verified_copy(find_mono_diamond(n, c), c)) {
        detail = "diamond search failed at n=" + std::to_string(n);
        return false;
      }
    for (const Coloring& c : fcolorings)
      if (!verified_copy(find_mono_fork(n, c), c)) {
        detail = "fork search failed at n=" + std::to_string(n);
        return false;
      }
  }
  return true;
}

bool blob_constructions(std::string& detail) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Coloring c = random_table(8, seed);
    if (!verified_copy(blob_partition_embed(2, 2, c), c)) {
      detail = "blob embedding failed at seed " + std::to_string(seed);
      return false;
    }
  }
  struct BandCase {
    std::uint32_t n, s, t, host;
  };
  for (BandCase bc : {BandCase{2, 1, 2, 6}, BandCase{3, 0, 1, 9}}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Coloring c = random_table(bc.host, seed + 9000);
      BandOrCube r = cube_or_band(c, bc.n, bc.s, bc.t);
      const MonoCopy& copy = r.cube ? *r.cube : *r.band;
      if (!verified_copy(copy, c)) {
        detail = "band completion failed at seed " + std::to_string(seed);
        return false;
      }
    }
  }
  return true;
}

bool qmqn_machinery(std::string& detail) {
  const std::uint32_t host = 1046016;
  for (Color c : {Color::Blue, Color::Red}) {
    Coloring coloring = constant_coloring(host, c, 1000000);
    QmqnResult r = qmqn_construct(1024, 1024, 0.5, coloring);
    if (!r.sample_verified || r.queries_used > 1000000) {
      detail = "constant oracle run unverified or over budget";
      return false;
    }
    if (r.color != c || r.copy_dim != 1024) {
      detail = "constant oracle returned the wrong copy";
      return false;
    }
    for (const auto& row : r.identities)
      if (!row.ok) {
        detail = "identity " + row.name + " failed at layer " + std::to_string(row.layer);
        return false;
      }
  }
  int verified = 0, budget_outs = 0;
  for (double p_blue : {0.9, 0.99}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Coloring coloring = random_oracle(host, seed, p_blue, 1000000);
      try {
        QmqnResult r = qmqn_construct(1024, 1024, 0.5, coloring);
        if (!r.sample_verified) {
          detail = "biased oracle produced an unverified result";
          return false;
        }
        ++verified;
      } catch (const BudgetExceeded&) {
        ++budget_outs;
      }
    }
  }
  detail = std::to_string(verified) + " verified, " + std::to_string(budget_outs) +
           " budget-outs over 20 biased oracles";
  return verified + budget_outs == 20;
}

bool weak_chain(std::string& detail) {
  Coloring red = constant_coloring(74, Color::Red);
  SausageOutcome all_red = sausage_chain_build(8, 74, red);
  if (!all_red.witness || all_red.witness->color != Color::Red) {
    detail = "all-red run did not return a red weak copy";
    return false;
  }
  if (!verify_embedding(all_red.witness->weak_embedding, make_poset("boolean:8")) ||
      !monochromatic(all_red.witness->weak_embedding, red, Color::Red)) {
    detail = "all-red weak embedding failed verification";
    return false;
  }
  for (std::size_t i = 0; i < all_red.chain.sausage_sizes.size(); ++i)
    if (all_red.chain.sausage_sizes[i] != (1ULL << (ceil_log2(binom(8, i)) + 1)) - 1) {
      detail = "sausage cardinality identity failed";
      return false;
    }
  int red_witnesses = 0;
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
    Coloring c = random_oracle(74, seed, 0.01);
    SausageOutcome out = sausage_chain_build(8, 74, c);
    if (out.witness && out.witness->color == Color::Red &&
        verify_embedding(out.witness->weak_embedding, make_poset("boolean:8")) &&
        monochromatic(out.witness->weak_embedding, c, Color::Red))
      ++red_witnesses;
  }
  if (red_witnesses != 5) {
    detail = "only " + std::to_string(red_witnesses) + "/5 majority-red seeds gave red witnesses";
    return false;
  }
  try {
    sausage_chain_build(4, 16, constant_coloring(16, Color::Red));
    detail = "n=4 at the square-law dimension unexpectedly succeeded";
    return false;
  } catch (const DimensionTooSmall&) {
  }
  return true;
}

bool numeric_constants(std::string&) {
  EntropyConstants k = entropy_constants();
  if (!(k.q > 0.11 && k.q < 0.111)) return false;
  if (std::abs(entropy(k.q) - 0.5) > 1e-9) return false;
  if (k.integral_q > 0.033) return false;
  if ((1.0 - k.q) + 2.0 * k.integral_q > 0.956) return false;
  if (std::abs(k.c - 0.2271) > 5e-4) return false;
  if (std::abs(1.0 - k.c - entropy(k.c)) > 1e-9) return false;
  if (std::abs(k.d - 1.29) > 5e-3) return false;
  SplitMix rng(2024);
  for (int i = 0; i < 100; ++i) {
    double a = rng.next_unit(), b = rng.next_unit();
    if (a > b) std::swap(a, b);
    if (std::abs(entropy_integral(a, b) - entropy_integral_closed(a, b)) > 1e-8) return false;
  }
  return true;
}

bool extremal_tables(std::string&) {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    std::uint64_t a = sperner_alpha(n);
    std::uint64_t a2 = sperner_alpha(2 * n - 1);
    if (!(a <= a2 && a2 <= a + 2)) return false;
    std::uint64_t ns = n_star(n);
    if (!(a <= ns && ns < 2 * a)) return false;
    std::uint64_t b = beta(ns, n);
    if (!(1 <= b && b <= a / 2)) return false;
    if (!(n_plus(n) <= ns + 3)) return false;
    if (!(diamond_bounds(n).upper <= 2 * a + 2)) return false;
  }
  return true;
}

bool oracle_equivalence(std::string& detail) {
  const std::vector<std::string> posets = {"chain:2",     "chain:3", "antichain:2",
                                           "antichain:3", "fork:2",  "diamond:2"};
  for (std::uint32_t n_host = 0; n_host <= 3; ++n_host) {
    GroundSet g{n_host};
    std::uint64_t cells = 1ULL << n_host;
    for (std::uint64_t pattern = 0; pattern < (1ULL << cells); ++pattern) {
      std::vector<Color> table(cells);
      for (std::uint64_t i = 0; i < cells; ++i)
        table[i] = (pattern >> i & 1) ? Color::Blue : Color::Red;
      Coloring coloring = Coloring::table(n_host, std::move(table));
      for (const auto& spec : posets) {
        FinitePoset p = make_poset(spec);
        for (Color color : {Color::Blue, Color::Red}) {
          for (EmbedKind kind : {EmbedKind::Induced, EmbedKind::Weak}) {
            bool search = find_mono_copy(g, coloring, p, color, kind).has_value();
            bool brute = brute_force_copy_exists(g, coloring, p, color, kind);
            if (search != brute) {
              detail = "disagreement at N=" + std::to_string(n_host) + " on " + spec;
              return false;
            }
          }
        }
      }
    }
  }
  GroundSet g4{4};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Coloring coloring = random_table(4, seed);
    for (const auto& spec : posets) {
      FinitePoset p = make_poset(spec);
      for (Color color : {Color::Blue, Color::Red}) {
        for (EmbedKind kind : {EmbedKind::Induced, EmbedKind::Weak}) {
          bool search = find_mono_copy(g4, coloring, p, color, kind).has_value();
          bool brute = brute_force_copy_exists(g4, coloring, p, color, kind);
          if (search != brute) {
            detail = "disagreement at N=4 seed " + std::to_string(seed) + " on " + spec;
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "exact small Ramsey numbers", 0, exact_values);
  criterion(2, "lower-bound witness colorings admit no copy", 60.0 * 6, lower_bound_witnesses);
  criterion(3, "diamond and fork searches succeed everywhere", 0, upper_bound_searches);
  criterion(4, "blob embedding and band completion", 0, blob_constructions);
  criterion(5, "large-scale cube-vs-cube machinery", 0, qmqn_machinery);
  criterion(6, "weak copies via the sausage chain", 0, weak_chain);
  criterion(7, "entropy constants", 5.0, numeric_constants);
  criterion(8, "extremal tables to ten thousand", 30.0, extremal_tables);
  criterion(9, "search agrees with the brute-force oracle", 0, oracle_equivalence);
  if (failures == 0) std::printf("all criteria passed\n");
  return failures;
}
