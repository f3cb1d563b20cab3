#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "abelcay/errors.hpp"
#include "abelcay/families.hpp"
#include "abelcay/lattice.hpp"
#include "oracles.hpp"

using namespace abelcay;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntVector random_vector(std::size_t n, std::mt19937& rng, int lo = -30, int hi = 30) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Elements of Z^n reachable as sums of unit vectors, reduced to classes.
std::size_t closure_size(const QuotientGroup& g, const std::vector<IntVector>& gens) {
  std::set<GroupElement> seen{canonicalize(IntVector(g.dimension(), 0), g)};
  std::vector<IntVector> frontier{IntVector(g.dimension(), 0)};
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& x : frontier)
      for (const auto& b : gens) {
        IntVector y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
        auto c = canonicalize(y, g);
        if (seen.insert(c).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("congruence examples") {
  QuotientGroup g(make_mn(3));
  // (5,0,0) - M e_1 = (2,1,1); (1,1,1) is the sum of M's columns
  CHECK(congruent(make_vector({5, 0, 0}), make_vector({2, 1, 1}), g));
  CHECK(congruent(make_vector({1, 1, 1}), make_vector({0, 0, 0}), g));
  CHECK_FALSE(congruent(make_vector({5, 0, 0}), make_vector({1, 1, 1}), g));
  CHECK(congruent(make_vector({3, -1, -1}), make_vector({0, 0, 0}), g));
  CHECK_FALSE(congruent(make_vector({1, 0, 0}), make_vector({0, 1, 0}), g));

  QuotientGroup z84(IntMatrix{{84}});
  CHECK(congruent(make_vector({85}), make_vector({1}), z84));
  CHECK_FALSE(congruent(make_vector({42}), make_vector({0}), z84));
}

TEST_CASE("canonical coordinates with the closed-form transform") {
  auto m = make_mn(3);
  QuotientGroup g(m, closed_form_snf(3));
  CHECK(canonicalize(make_vector({5, 0, 0}), g).coords == ints({0, 1, 1}));
  CHECK(canonicalize(make_vector({2, 1, 1}), g).coords == ints({0, 1, 1}));
  CHECK(canonicalize(make_vector({1, 1, 1}), g).coords == ints({0, 0, 0}));
  CHECK(canonicalize(make_vector({0, 0, 0}), g).coords == ints({0, 0, 0}));
  CHECK_THROWS_AS(canonicalize(make_vector({1, 2}), g), DimensionMismatch);
}

TEST_CASE("supplied decomposition is validated") {
  auto bad = closed_form_snf(3);
  bad.s[1] = 5;
  CHECK_THROWS_AS(QuotientGroup(make_mn(3), bad), DomainError);
  CHECK_THROWS_AS(QuotientGroup(IntMatrix{{2, 4}, {1, 2}}), SingularMatrix);
}

TEST_CASE("group structure examples") {
  auto s4 = structure(QuotientGroup(make_mn(4)));
  CHECK(s4.rank == 3);
  CHECK(s4.torsion == ints({5, 5, 5}));
  CHECK_FALSE(s4.cyclic);
  CHECK(s4.order == 125);

  auto z84 = structure(QuotientGroup(IntMatrix{{84}}));
  CHECK(z84.rank == 1);
  CHECK(z84.cyclic);
  CHECK(z84.order == 84);

  auto triv = structure(QuotientGroup(IntMatrix::identity(2)));
  CHECK(triv.rank == 0);
  CHECK(triv.torsion.empty());
  CHECK(triv.cyclic);
  CHECK(triv.order == 1);

  // diag(2,3) is Z_6, cyclic
  auto z6 = structure(QuotientGroup(IntMatrix::diagonal(ints({2, 3}))));
  CHECK(z6.rank == 1);
  CHECK(z6.torsion == ints({6}));
}

TEST_CASE("basis elements have the invariant factors as orders") {
  QuotientGroup g(make_mn(3));
  auto b = basis(g);
  REQUIRE(b.size() == 2);
  for (const auto& v : b) {
    CHECK_FALSE(congruent(v, IntVector(3, 0), g));
    IntVector four = v;
    for (auto& x : four) x *= 4;
    CHECK(congruent(four, IntVector(3, 0), g));
    IntVector two = v;
    for (auto& x : two) x *= 2;
    CHECK_FALSE(congruent(two, IntVector(3, 0), g));
  }
  CHECK(closure_size(g, b) == 16);
}

TEST_CASE("property: number of classes equals |det M|") {
  std::mt19937 rng(11);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 40; ++trial) {
    auto n = static_cast<std::size_t>(2 + trial % 2);
    auto m = oracle::random_matrix(n, rng, -4, 4);
    Integer d = abs(oracle::leibniz_det(m));
    if (d == 0 || d > 300) continue;
    QuotientGroup g(m);
    std::vector<IntVector> units;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      units.push_back(e);
    }
    REQUIRE(closure_size(g, units) == d.get_ui());
    REQUIRE(g.order() == d);
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("property: congruence is an equivalence compatible with addition") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = static_cast<std::size_t>(1 + trial % 4);
    auto m = oracle::random_matrix(n, rng, -5, 5);
    if (det(m) == 0) continue;
    QuotientGroup g(m);
    auto a = random_vector(n, rng);
    auto b = random_vector(n, rng);
    // a + M z is congruent to a
    auto z = random_vector(n, rng, -3, 3);
    auto shift = m.apply(z);
    IntVector a2 = a;
    for (std::size_t i = 0; i < n; ++i) a2[i] += shift[i];
    REQUIRE(congruent(a, a2, g));
    REQUIRE(congruent(a, a, g));
    REQUIRE(congruent(a, b, g) == congruent(b, a, g));
    IntVector ab = a, a2b = a2;
    for (std::size_t i = 0; i < n; ++i) {
      ab[i] += b[i];
      a2b[i] += b[i];
    }
    REQUIRE(canonicalize(ab, g) == canonicalize(a2b, g));
    // canonical coordinates lie in range and vanish on trivial factors
    auto c = canonicalize(a, g);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = g.snf().s[i];
      REQUIRE(c.coords[i] >= 0);
      REQUIRE(c.coords[i] < s);
    }
  }
}

TEST_CASE("diagonal modulus agrees with componentwise reduction") {
  std::mt19937 rng(17);
  auto m = IntMatrix::diagonal(ints({4, 6, 9}));
  QuotientGroup g(m);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_vector(3, rng);
    auto b = random_vector(3, rng);
    bool expect = true;
    const long mods[3] = {4, 6, 9};
    for (int i = 0; i < 3; ++i) {
      Integer diff = a[i] - b[i];
      if (diff % mods[i] != 0) expect = false;
    }
    REQUIRE(congruent(a, b, g) == expect);
  }
}

TEST_CASE("large entries stay exact") {
  Integer big("1000000000000000000000007");
  IntMatrix m = IntMatrix::identity(2);
  m(0, 0) = big;
  QuotientGroup g(m);
  CHECK(g.order() == big);
  IntVector a{big + 5, Integer(3)};
  CHECK(congruent(a, make_vector({5, 0}), g));
}
