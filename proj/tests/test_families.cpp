#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelcay/errors.hpp"
#include "abelcay/families.hpp"
#include "oracles.hpp"

using namespace abelcay;

namespace {

Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Integer ipow(long b, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TEST_CASE("circulant matrices") {
  CHECK(make_mn(2) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(det(make_mn(3)) == 16);
  CHECK(det(make_mn(5)) == 1296);
  CHECK(make_mnm(3, 2) == make_mn(3).scaled(Integer(2)));
  CHECK_THROWS_AS(make_mn(1), DomainError);
  CHECK_THROWS_AS(make_mnm(3, 0), DomainError);
}

TEST_CASE("base family digraphs") {
  auto d2 = make_dn(2);
  CHECK(d2.group().factors() == std::vector<std::int64_t>{3});
  CHECK(d2.generators() == std::vector<Element>{{1}, {2}});
  CHECK(distance_profile(d2).diameter == 1);

  auto d3 = make_dn(3);
  CHECK(d3.group().factors() == std::vector<std::int64_t>{4, 4});
  CHECK(d3.generators() == std::vector<Element>{{1, 1}, {2, 1}, {1, 2}});
  CHECK(distance_profile(d3).diameter == 3);

  auto d4 = make_dn(4);
  CHECK(d4.group().factors() == std::vector<std::int64_t>{5, 5, 5});
  CHECK(d4.generators() == std::vector<Element>{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  CHECK(distance_profile(d4).diameter == 6);
  CHECK(oracle::diameter_by_sums(d4.group().factors(), d4.generators()) == 6);

  CHECK_THROWS_AS(make_dn(1), DomainError);
}

TEST_CASE("scaled family examples") {
  auto a = make_dnm(3, 1);
  CHECK(a.digraph.order() == 16);
  CHECK(a.predicted_diameter == 3);
  CHECK(distance_profile(a.digraph).diameter == 3);

  auto b = make_dnm(3, 2);
  CHECK(b.digraph.group().factors() == std::vector<std::int64_t>{2, 8, 8});
  CHECK(b.predicted_order == 128);
  CHECK(b.predicted_diameter == 9);

  auto c = make_dnm(2, 3);
  CHECK(c.digraph.group().factors() == std::vector<std::int64_t>{3, 9});
  CHECK(c.predicted_order == 27);
  CHECK(c.predicted_diameter == 7);
  CHECK(distance_profile(c.digraph).diameter == 7);
  CHECK(oracle::diameter_by_sums(c.digraph.group().factors(), c.digraph.generators()) == 7);

  CHECK_THROWS_AS(make_dnm(1, 1), DomainError);
  CHECK_THROWS_AS(make_dnm(3, 0), DomainError);
}

TEST_CASE("scaled family: order, diameter and group agree with the matrix") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      auto f = make_dnm(n, m);
      CHECK(f.predicted_order == abs(det(f.matrix)));
      CHECK(Integer(static_cast<unsigned long>(f.digraph.order())) == f.predicted_order);
      CHECK(f.predicted_order == ipow(m, n) * ipow(n + 1, n - 1));
      auto p = distance_profile(f.digraph);
      CHECK(static_cast<std::int64_t>(p.diameter) == f.predicted_diameter);
      CHECK(f.predicted_diameter == (n + 1) * n / 2 * m - n);
      auto from_m = from_matrix(f.matrix);
      CHECK(is_isomorphic_group(from_m.group(), f.digraph.group()));
      CHECK(distance_profile(from_m) == p);
    }
}

TEST_CASE("density is constant along the family") {
  CHECK(family_density(2) == ratio(1, 3));
  CHECK(family_density(3) == ratio(2, 27));
  for (int d = 2; d <= 6; ++d) {
    int mmax = d <= 4 ? 4 : 2;
    for (int m = 1; m <= mmax; ++m) {
      auto f = make_dnm(d, m);
      auto dens = density(f.digraph, distance_profile(f.digraph));
      CHECK(dens == family_density(d));
      CHECK(f.predicted_density == family_density(d));
    }
  }
}

TEST_CASE("predicted metrics") {
  auto p2 = predicted_metrics(2, 1);
  CHECK(p2.scale == 1);
  CHECK(p2.density == ratio(1, 3));
  auto p3 = predicted_metrics(3, 9);
  CHECK(p3.scale == 2);
  CHECK(p3.order == 128);
  CHECK(p3.density == ratio(2, 27));
  CHECK_THROWS_AS(predicted_metrics(3, 8), UnattainableDiameter);
  CHECK_THROWS_AS(predicted_metrics(3, 2), UnattainableDiameter);

  // N = 2^d/(d+1) (k/d + 1)^d at k = C(d+1,2) m - d equals m^d (d+1)^(d-1)
  for (int d = 2; d <= 8; ++d)
    for (int m = 1; m <= 10; ++m) {
      std::int64_t k = static_cast<std::int64_t>(d) * (d + 1) / 2 * m - d;
      auto pm = predicted_metrics(d, k);
      CHECK(pm.scale == m);
      Rational expect(ipow(m, d) * ipow(d + 1, d - 1));
      CHECK(pm.order == expect);
      CHECK(pm.density == family_density(d));
      Rational lead = family_coefficient(d);
      Rational base = ratio(static_cast<long>(k), d) + 1;
      Rational formula = lead;
      for (int i = 0; i < d; ++i) formula *= base;
      CHECK(formula == expect);
    }
}

TEST_CASE("degree two formulas") {
  CHECK(nc2_formula(7) == 26);
  CHECK(na2_formula(7) == 27);
  CHECK(nc2_formula(2) == 5);
  CHECK(nc2_formula(5) == 16);
  CHECK(na2_formula(5) == 16);
  CHECK(nc2_formula(4) == 11);
  CHECK(na2_formula(4) == 12);
  CHECK(nc2_formula(6) == 21);
  CHECK(nc2_formula(8) == 33);
  CHECK_THROWS_AS(nc2_formula(1), DomainError);
  CHECK_THROWS_AS(na2_formula(1), DomainError);
}

TEST_CASE("coefficient identities") {
  CHECK(family_coefficient(3) == 2);
  CHECK(family_coefficient(2) == ratio(4, 3));
  CHECK(family_coefficient(7) == 16);
  for (int d = 2; d <= 12; ++d) {
    // family coefficient times (1/d)^d is the density
    Rational scaled = family_coefficient(d);
    for (int i = 0; i < d; ++i) scaled /= d;
    CHECK(scaled == family_density(d));
  }
}

TEST_CASE("bounds and printed table") {
  CHECK(fiduccia_bound(7) == 120);
  CHECK(lattice_point_bound(3, 1) == 4);
  CHECK(lattice_point_bound(2, 4) == 15);
  auto row = printed_table_row(7);
  REQUIRE(row.has_value());
  CHECK(row->ceil_0084_k3 == 29);
  CHECK(row->fourth_column == 111);
  CHECK(row->nc3 == 84);
  CHECK(std::string(row->density) == "0.08400");
  CHECK_FALSE(printed_table_row(11).has_value());
  CHECK(printed_table().size() == 10);
}

TEST_CASE("bounds report") {
  auto r = bounds_report(3, 7);
  REQUIRE(r.fiduccia_floor.has_value());
  CHECK(*r.fiduccia_floor == 120);
  CHECK(*r.ceil_0084_k3 == 29);
  CHECK(*r.ceil_3_25_k3 == 42);
  CHECK(*r.printed_fourth_column == 111);
  CHECK(r.family_coefficient == 2);
  CHECK(r.family_coefficient_symbolic.find("2^3") != std::string::npos);
  CHECK_FALSE(r.df_factor_symbolic.empty());
  CHECK(r.df_factor_symbolic.find("c") != std::string::npos);
  CHECK_FALSE(r.footnotes.empty());
  CHECK(r.wc_lower_leading == ratio(343, 27));
  CHECK(r.wc_upper_leading == ratio(343, 6));
  CHECK(r.lattice_point_bound == 120);
  CHECK_FALSE(r.nc2.has_value());

  auto r5 = bounds_report(2, 5);
  CHECK(*r5.nc2 == 16);
  CHECK(*r5.na2 == 16);
  auto r4 = bounds_report(2, 4);
  CHECK(*r4.nc2 == 11);
  CHECK(*r4.na2 == 12);
  CHECK_FALSE(r4.fiduccia_floor.has_value());
  CHECK(r4.family_coefficient == ratio(4, 3));

  CHECK_THROWS_AS(bounds_report(1, 3), DomainError);
  CHECK_THROWS_AS(bounds_report(3, 0), DomainError);
}
