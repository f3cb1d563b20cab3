#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "abelcay/errors.hpp"
#include "abelcay/families.hpp"
#include "abelcay/search.hpp"
#include "oracles.hpp"

using namespace abelcay;

namespace {

// Largest N <= ceiling with some d-subset of Z_N \ {0} of diameter <= k,
// every subset tried, diameters from the sum-set oracle.
std::int64_t brute_nc(int d, int k, std::int64_t ceiling) {
  for (std::int64_t n = ceiling; n >= 1; --n) {
    if (n - 1 < d) {
      if (n == 1) return 1;
      continue;
    }
    std::vector<int> pick(static_cast<std::size_t>(n - 1), 0);
    std::fill(pick.end() - d, pick.end(), 1);
    do {
      std::vector<std::vector<std::int64_t>> gens;
      for (std::size_t i = 0; i < pick.size(); ++i)
        if (pick[i]) gens.push_back({static_cast<std::int64_t>(i + 1)});
      int dia = oracle::diameter_by_sums({n}, gens);
      if (dia >= 0 && dia <= k) return n;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

// Same for Z_a + Z_b, a * b = N, both generators arbitrary distinct nonzero.
std::int64_t brute_na2(int k, std::int64_t ceiling) {
  for (std::int64_t n = ceiling; n >= 1; --n)
    for (std::int64_t a = 1; a * a <= n; ++a) {
      if (n % a) continue;
      std::int64_t b = n / a;
      std::vector<std::vector<std::int64_t>> elems;
      for (std::int64_t x = 0; x < a; ++x)
        for (std::int64_t y = 0; y < b; ++y)
          if (x || y) elems.push_back({x, y});
      for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
          int dia = oracle::diameter_by_sums({a, b}, {elems[i], elems[j]});
          if (dia >= 0 && dia <= k) return n;
        }
    }
  return 0;
}

SearchOptions serial() {
  SearchOptions o;
  o.threads = 1;
  return o;
}

}  // namespace

TEST_CASE("degree two searches reproduce the closed forms") {
  for (int k = 2; k <= 8; ++k) {
    auto nc = nc_search(2, k);
    CHECK(nc.exhaustive);
    CHECK(nc.ceiling_proven);
    CHECK(nc.best_order == nc2_formula(k));
    auto na = na_search(2, k);
    CHECK(na.exhaustive);
    CHECK(na.best_order == na2_formula(k));
  }
}

TEST_CASE("search examples") {
  CHECK(nc_search(3, 2).best_order == 9);
  CHECK(nc_search(3, 4).best_order == 27);
  CHECK(nc_search(2, 6).best_order == 21);
  CHECK(na_search(2, 4).best_order == 12);
  CHECK(na_search(2, 3).best_order == 8);
}

TEST_CASE("degree three cyclic values for small diameters") {
  const std::int64_t expect[] = {0, 4, 9, 16, 27};
  for (int k = 1; k <= 4; ++k) {
    auto r = nc_search(3, k);
    CHECK(r.exhaustive);
    CHECK(r.ceiling == default_ceiling(3, k));
    CHECK(r.best_order == expect[k]);
  }
}

TEST_CASE("degree three cyclic values match the printed column up to k = 8") {
  for (int k = 5; k <= 8; ++k) {
    auto r = nc_search(3, k);
    CHECK(r.exhaustive);
    CHECK(r.best_order == printed_table_row(k)->nc3);
    for (const auto& w : r.witnesses) CHECK(verify_witness(w.digraph(), k));
  }
}

TEST_CASE("searches agree with unpruned enumeration") {
  for (int k = 1; k <= 5; ++k) CHECK(nc_search(2, k).best_order == brute_nc(2, k, default_ceiling(2, k)));
  for (int k = 1; k <= 3; ++k) CHECK(nc_search(3, k).best_order == brute_nc(3, k, default_ceiling(3, k)));
  for (int k = 1; k <= 4; ++k) CHECK(na_search(2, k).best_order == brute_na2(k, default_ceiling(2, k)));
}

TEST_CASE("abelian degree three, diameter three") {
  SearchOptions o;
  o.max_witnesses = 1000;
  auto r = na_search(3, 3, 0, o);
  CHECK(r.exhaustive);
  CHECK(r.best_order == 16);
  bool has_44 = false;
  for (const auto& w : r.witnesses)
    if (w.group.factors() == std::vector<std::int64_t>{4, 4}) has_44 = true;
  CHECK(has_44);
}

TEST_CASE("every witness verifies") {
  for (int d = 2; d <= 3; ++d)
    for (int k = 1; k <= 4; ++k)
      for (bool abelian : {false, true}) {
        auto r = abelian ? na_search(d, k) : nc_search(d, k);
        REQUIRE_FALSE(r.witnesses.empty());
        for (const auto& w : r.witnesses) {
          REQUIRE(w.generators.size() == static_cast<std::size_t>(d));
          REQUIRE(static_cast<std::int64_t>(w.group.order()) == r.best_order);
          REQUIRE(verify_witness(w.digraph(), k));
        }
      }
}

TEST_CASE("verify_witness") {
  CayleyDigraph z84(AbelianGroupSpec({84}), {{2}, {9}, {35}});
  CHECK(verify_witness(z84, 7));
  CHECK_FALSE(verify_witness(z84, 6));
  CayleyDigraph z4(AbelianGroupSpec({4}), {{2}});
  CHECK_FALSE(verify_witness(z4, 100));
  CHECK(verify_witness(make_dn(3), 3));
  CHECK_FALSE(verify_witness(make_dn(3), 2));
}

TEST_CASE("serial reference and parallel driver agree") {
  for (int d = 2; d <= 3; ++d)
    for (int k = 1; k <= 5; ++k) {
      auto a = nc_search(d, k, 0, serial());
      auto b = nc_search(d, k);
      REQUIRE(a.best_order == b.best_order);
      REQUIRE(a.witnesses == b.witnesses);
      REQUIRE(a.exhaustive == b.exhaustive);
    }
  for (int k = 1; k <= 4; ++k) {
    auto a = na_search(3, k, 0, serial());
    auto b = na_search(3, k);
    REQUIRE(a.best_order == b.best_order);
    REQUIRE(a.witnesses == b.witnesses);
  }
}

TEST_CASE("degenerate generator sets do not change small optima") {
  SearchOptions o;
  o.allow_degenerate = true;
  for (int k = 2; k <= 6; ++k) CHECK(nc_search(2, k, 0, o).best_order == nc2_formula(k));
  for (int k = 1; k <= 3; ++k) CHECK(nc_search(3, k, 0, o).best_order == nc_search(3, k).best_order);
}

TEST_CASE("budget exhaustion is reported") {
  SearchOptions o;
  o.budget = 50;
  auto r = nc_search(3, 6, 0, o);
  CHECK_FALSE(r.exhaustive);
  o.threads = 1;
  auto s = nc_search(3, 6, 0, o);
  CHECK_FALSE(s.exhaustive);
}

TEST_CASE("explicit ceiling below the optimum") {
  auto r = nc_search(2, 4, 10);
  CHECK(r.best_order == 10);
  CHECK_FALSE(r.ceiling_proven);
  CHECK(r.ceiling == 10);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(nc_search(0, 3), DomainError);
  CHECK_THROWS_AS(nc_search(2, 0), DomainError);
  CHECK_THROWS_AS(na_search(0, 3), DomainError);
}

TEST_CASE("groups of a given order") {
  using Chains = std::vector<std::vector<std::int64_t>>;
  CHECK(abelian_groups_of_order(1, 3) == Chains{{}});
  CHECK(abelian_groups_of_order(12, 3) == Chains{{2, 6}, {12}});
  CHECK(abelian_groups_of_order(16, 2) == Chains{{2, 8}, {4, 4}, {16}});
  CHECK(abelian_groups_of_order(16, 4).size() == 5);
  CHECK(abelian_groups_of_order(16, 1) == Chains{{16}});
  CHECK(abelian_groups_of_order(7, 3) == Chains{{7}});
  for (std::int64_t n = 1; n <= 200; ++n)
    for (const auto& c : abelian_groups_of_order(n, 4)) {
      std::int64_t p = 1;
      for (std::size_t i = 0; i < c.size(); ++i) {
        p *= c[i];
        if (i) REQUIRE(c[i] % c[i - 1] == 0);
      }
      REQUIRE(p == n);
    }
}

TEST_CASE("multiplier canonical form") {
  CHECK(multiplier_canonical(7, {3, 5}) == multiplier_canonical(7, {1, 4}));
  CHECK(multiplier_canonical(84, {2, 9, 35}) == multiplier_canonical(84, {10, 45, 7}));
  // canonical form is a fixed point and is in the orbit
  for (std::int64_t n : {9, 12, 16, 21}) {
    for (std::int64_t a = 1; a < n; ++a)
      for (std::int64_t b = a + 1; b < n; ++b) {
        auto c = multiplier_canonical(n, {a, b});
        REQUIRE(multiplier_canonical(n, c) == c);
        REQUIRE(std::is_sorted(c.begin(), c.end()));
        CayleyDigraph g(AbelianGroupSpec({n}), {{a}, {b}});
        CayleyDigraph h(AbelianGroupSpec({n}), {{c[0]}, {c[1]}});
        REQUIRE(explore(g) == explore(h));
      }
  }
}
