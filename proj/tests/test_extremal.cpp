#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pr/binom.hpp"
#include "pr/errors.hpp"
#include "pr/extremal.hpp"

using namespace pr;

TEST_CASE("sperner_alpha") {
  CHECK(sperner_alpha(1) == 0);
  CHECK(sperner_alpha(2) == 2);
  CHECK(sperner_alpha(6) == 4);
  CHECK(sperner_alpha(20) == 6);
  CHECK_THROWS_AS(sperner_alpha(0), std::invalid_argument);
}

TEST_CASE("beta") {
  CHECK(beta(4, 6) == 2);
  CHECK(beta(7, 1) == 0);
  CHECK(beta(0, 1) == 0);
  CHECK(beta(3, 2) == 1);
  CHECK_THROWS_AS(beta(1, 2), std::invalid_argument);  // N below sperner_alpha(n)
  CHECK_THROWS_AS(beta(3, 0), std::invalid_argument);
}

TEST_CASE("n_star") {
  CHECK(n_star(2) == 2);
  CHECK(n_star(3) == 3);
  CHECK(n_star(6) == 5);
  CHECK_THROWS_AS(n_star(1), std::invalid_argument);
}

TEST_CASE("n_plus") {
  CHECK(n_plus(2) == 4);
  CHECK(n_plus(3) == 5);
  CHECK(n_plus(6) <= n_star(6) + 3);
}

TEST_CASE("blob_host_dimension") {
  CHECK(blob_host_dimension(2, 2) == 8);
  CHECK(blob_host_dimension(1, 1) == 3);
  CHECK(blob_host_dimension(2, 3) == 11);
}

TEST_CASE("epsilon_condition") {
  CHECK(epsilon_condition(1024, 1024, 0.5));
  CHECK(epsilon_condition(1ULL << 25, 1ULL << 25, 0.2));  // eps = 1/sqrt(25)
  CHECK(!epsilon_condition(4, 4, 0.5));
}

TEST_CASE("qmqn_bound") {
  BoundReport r = qmqn_bound(1024, 1024, 0.5);
  CHECK(r.value == doctest::Approx(1024.0 * (1024.0 - 0.25 * 10.0)));
  CHECK(r.theorem_tag == "qmqn-upper");
  CHECK(!r.headline.has_value());

  // eps = 1/sqrt(log2 m) = 1/5 carries the headline coefficient (1-2/5)*25
  BoundReport h = qmqn_bound(1ULL << 25, 1ULL << 25, 0.2);
  REQUIRE(h.headline.has_value());
  double m = static_cast<double>(1ULL << 25);
  CHECK(*h.headline == doctest::Approx(m * (m - 15.0)));

  CHECK_THROWS_AS(qmqn_bound(4, 4, 0.5), HypothesisViolation);
}

TEST_CASE("diamond_bounds") {
  DiamondBounds b2 = diamond_bounds(2);
  CHECK(b2.lower == 4);
  CHECK(b2.upper == 5);
  CHECK(!b2.degenerate);

  DiamondBounds b6 = diamond_bounds(6);
  CHECK(b6.lower == 8);
  CHECK(b6.upper == 10);

  DiamondBounds b1 = diamond_bounds(1);
  CHECK(b1.lower == 0);
  CHECK(b1.upper == 0);
  CHECK(b1.degenerate);
}

TEST_CASE("fork_bounds") {
  ForkBounds f2 = fork_bounds(2);
  CHECK(f2.lower == 3);
  CHECK(f2.upper == 5);
  REQUIRE(f2.sharpened.has_value());  // alpha(3) = 3 <= alpha(2)+1
  CHECK(*f2.sharpened == 4);

  ForkBounds f3 = fork_bounds(3);
  CHECK(f3.lower == 4);
  CHECK(f3.upper == 6);

  ForkBounds f6 = fork_bounds(6);
  CHECK(f6.lower == 6);
  CHECK(f6.upper == 8);
}

TEST_CASE("extremal identities over the full desk-scale range") {
  std::uint64_t prev_alpha = 0;
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    std::uint64_t a = sperner_alpha(n);
    std::uint64_t a2 = sperner_alpha(2 * n - 1);
    CHECK(a >= prev_alpha);
    prev_alpha = a;
    CHECK(a <= a2);
    CHECK(a2 <= a + 2);

    std::uint64_t ns = n_star(n);
    CHECK(a <= ns);
    CHECK(ns < 2 * a);
    std::uint64_t b = beta(ns, n);
    CHECK(1 <= b);
    CHECK(b <= a / 2);
    CHECK(n_plus(n) <= ns + 3);
    CHECK(diamond_bounds(n).upper <= 2 * a + 2);
  }
}

TEST_CASE("beta is monotone: nonincreasing in N, nondecreasing in n") {
  for (std::uint64_t n : {2ULL, 5ULL, 17ULL, 100ULL, 4097ULL}) {
    std::uint64_t a = sperner_alpha(n);
    for (std::uint64_t big_n = a; big_n < 2 * a; ++big_n)
      CHECK(beta(big_n + 1, n) <= beta(big_n, n));
  }
  for (std::uint64_t n = 2; n < 300; ++n) {
    std::uint64_t big_n = sperner_alpha(n * 2);  // valid for both n and n+1
    CHECK(beta(big_n, n) <= beta(big_n, n + 1));
  }
}
