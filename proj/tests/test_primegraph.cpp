#include <doctest.h>

#include <memory>
#include <random>

#include "odkit/primegraph.hpp"

using namespace odkit;
using Edges = std::vector<PrimeGraph::Edge>;
using Vs = std::vector<std::uint64_t>;

namespace {

const SievedRange& sieve() {
  static const SievedRange s(200'000);
  return s;
}

PrimeGraph random_graph(std::mt19937_64& rng) {
  static const Vs pool = {2, 3, 5, 7, 11, 13, 17};
  Vs v;
  for (auto p : pool)
    if (rng() % 2) v.push_back(p);
  PrimeGraph g(v);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (rng() % 3 == 0) g.add_edge_at(i, j);
  return g;
}

}  // namespace

TEST_CASE("PrimeGraph validation") {
  CHECK_THROWS_AS(PrimeGraph({3, 2}), DomainError);
  CHECK_THROWS_AS(PrimeGraph({2, 4}), DomainError);
  PrimeGraph g({2, 3});
  CHECK_THROWS_AS(g.add_edge(2, 2), DomainError);
  CHECK_THROWS_AS(g.add_edge(2, 5), DomainError);
  g.add_edge(3, 2);
  CHECK(g.edges() == Edges{{2, 3}});
  CHECK(g.adjacent(2, 3));
  CHECK(g.adjacent(3, 2));
  CHECK_FALSE(g.adjacent(2, 2));
}

TEST_CASE("gk_alt examples") {
  const auto a5 = gk_alt(5, sieve());
  CHECK(a5.vertices() == Vs{2, 3, 5});
  CHECK(a5.edge_count() == 0);

  const auto a10 = gk_alt(10, sieve());
  CHECK(a10.vertices() == Vs{2, 3, 5, 7});
  CHECK(a10.edges() == Edges{{2, 3}, {2, 5}, {3, 5}, {3, 7}});

  const auto a3 = gk_alt(3, sieve());
  CHECK(a3.vertices() == Vs{3});
  CHECK(a3.edge_count() == 0);

  CHECK(gk_alt(1, sieve()).vertices().empty());
  CHECK(gk_alt(2, sieve()).vertices().empty());
  const auto a4 = gk_alt(4, sieve());
  CHECK(a4.vertices() == Vs{2, 3});
  CHECK(a4.edge_count() == 0);

  const SievedRange tiny(5);
  CHECK_THROWS_AS(gk_alt(6, tiny), ResourceError);
}

TEST_CASE("gk_sym examples") {
  CHECK(gk_sym(5, sieve()).edges() == Edges{{2, 3}});
  const auto s2 = gk_sym(2, sieve());
  CHECK(s2.vertices() == Vs{2});
  CHECK(s2.edge_count() == 0);
  CHECK(gk_sym(7, sieve()).edges() == Edges{{2, 3}, {2, 5}});
  CHECK(gk_sym(1, sieve()).vertices().empty());
}

TEST_CASE("gk_product examples") {
  const PrimeGraph five({5});
  CHECK(gk_product(gk_alt(5, sieve()), five).edges() == Edges{{2, 5}, {3, 5}});
  const auto a10 = gk_alt(10, sieve());
  CHECK(gk_product(a10, PrimeGraph()) == a10);
  CHECK(gk_product(PrimeGraph(), a10) == a10);
  CHECK(graphs_equal(gk_product(gk_alt(624, sieve()), five), gk_alt(625, sieve())));
}

TEST_CASE("gk_product is commutative and associative") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_graph(rng), b = random_graph(rng), c = random_graph(rng);
    REQUIRE(gk_product(a, b) == gk_product(b, a));
    REQUIRE(gk_product(gk_product(a, b), c) == gk_product(a, gk_product(b, c)));
    // the on-demand product agrees with the explicit one
    auto pa = std::make_shared<PrimeGraph>(a), pb = std::make_shared<PrimeGraph>(b);
    ProductGraph lazy(pa, pb);
    REQUIRE(materialize(lazy) == gk_product(a, b));
    REQUIRE(degree_pattern(lazy) == degree_pattern(gk_product(a, b)));
  }
}

TEST_CASE("degree_pattern examples") {
  const auto d10 = degree_pattern(gk_alt(10, sieve()));
  CHECK(d10.primes == Vs{2, 3, 5, 7});
  CHECK(d10.degrees == Vs{2, 3, 2, 1});
  CHECK(degree_pattern(PrimeGraph()).primes.empty());

  const auto a625 = gk_alt(625, sieve());
  CHECK(a625.degree(619) == 3);
  CHECK(a625.adjacent(619, 2));
  CHECK(a625.adjacent(619, 3));
  CHECK(a625.adjacent(619, 5));
}

TEST_CASE("fast_degree_pattern_alt examples") {
  CHECK(fast_degree_pattern_alt(10, sieve()).degrees == Vs{2, 3, 2, 1});
  CHECK(fast_degree_pattern_alt(5, sieve()).degrees == Vs{0, 0, 0});
  const auto d625 = fast_degree_pattern_alt(625, sieve());
  CHECK(d625.primes.front() == 2);
  CHECK(d625.degrees.front() == 113);
  const SievedRange tiny(5);
  CHECK_THROWS_AS(fast_degree_pattern_alt(6, tiny), ResourceError);
}

TEST_CASE("fast and materialized degree patterns agree") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    REQUIRE(fast_degree_pattern_alt(n, sieve()) == degree_pattern(gk_alt(n, sieve())));
    REQUIRE(fast_degree_pattern_sym(n, sieve()) == degree_pattern(gk_sym(n, sieve())));
  }
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> dist(1, 100'000);
  for (int i = 0; i < 10; ++i) {
    const auto n = dist(rng);
    CAPTURE(n);
    REQUIRE(fast_degree_pattern_alt(n, sieve()) == degree_pattern(gk_alt(n, sieve())));
    REQUIRE(fast_degree_pattern_sym(n, sieve()) == degree_pattern(gk_sym(n, sieve())));
  }
}

TEST_CASE("CriterionGraph adjacency matches the explicit graph") {
  for (std::uint64_t n : {1, 2, 3, 4, 7, 10, 25, 60}) {
    for (Family f : {Family::Alt, Family::Sym}) {
      CriterionGraph c(f, n, sieve());
      REQUIRE(materialize(c) == gk_family(f, n, sieve()));
    }
  }
}

TEST_CASE("vertex sets follow the group order") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    auto primes = factor_factorial(n).primes();
    if (n < 4) primes.erase(std::remove(primes.begin(), primes.end(), 2), primes.end());
    REQUIRE(gk_alt(n, sieve()).vertices() == primes);
    REQUIRE(gk_sym(n, sieve()).vertices() == factor_factorial(n).primes());
  }
}

TEST_CASE("degree sums are even") {
  for (std::uint64_t n = 1; n <= 2000; n += 7) {
    for (Family f : {Family::Alt, Family::Sym}) {
      std::uint64_t total = 0;
      const auto d = fast_degree_pattern(f, n, sieve());
      for (auto deg : d.degrees) {
        REQUIRE(deg < d.primes.size());
        total += deg;
      }
      REQUIRE(total % 2 == 0);
    }
  }
}

TEST_CASE("graphs_equal") {
  CHECK(graphs_equal(gk_alt(625, sieve()), gk_alt(624, sieve())));
  CHECK_FALSE(graphs_equal(gk_alt(5, sieve()), gk_sym(5, sieve())));
  const auto g = gk_sym(50, sieve());
  CHECK(graphs_equal(g, g));
}

TEST_CASE("summaries and first differences") {
  const auto d = degree_pattern(gk_alt(10, sieve()));
  const auto s = summarize(d);
  CHECK(s == GraphSummary{4, 4, 1, 3});
  CHECK_FALSE(first_difference(d, d).has_value());
  const auto diff = first_difference(degree_pattern(gk_alt(7, sieve())), degree_pattern(gk_alt(6, sieve())));
  REQUIRE(diff.has_value());
  CHECK(diff->index == 0);  // (3,2,2) gives A_7 an element of order 6
  CHECK(diff->lhs_degree == 1);
  CHECK(diff->rhs_degree == 0);
  const auto longer = first_difference(degree_pattern(gk_alt(10, sieve())), degree_pattern(gk_alt(5, sieve())));
  REQUIRE(longer.has_value());
  CHECK(longer->index == 0);
}
