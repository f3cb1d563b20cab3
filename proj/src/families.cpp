#include "abelcay/families.hpp"

#include <cmath>
#include <numbers>

#include "abelcay/errors.hpp"

namespace abelcay {

namespace {

void require_degree(int n) {
  if (n < 2) throw DomainError("family degree n must be >= 2, got " + std::to_string(n));
}

Integer ipow(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
  if (base < 0 && (e & 1)) r = -r;
  return r;
}

Rational rpow(const Rational& q, unsigned long e) {
  Rational r(1);
  for (unsigned long i = 0; i < e; ++i) r *= q;
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

IntMatrix make_mn(int n) { return make_mnm(n, 1); }

IntMatrix make_mnm(int n, int m) {
  require_degree(n);
  if (m < 1) throw DomainError("scale m must be >= 1");
  IntMatrix a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = i == j ? long(n) * m : -long(m);
  return a;
}

IntMatrix transform_u(int n) {
  require_degree(n);
  IntMatrix u(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u(i, j) = (i == j && i > 0) ? 2 : 1;
  return u;
}

IntMatrix transform_v(int n) {
  require_degree(n);
  IntMatrix v = IntMatrix::identity(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) v(0, j) = -1;
  return v;
}

SnfDecomposition closed_form_snf(int n, int m) {
  std::vector<Integer> s(static_cast<std::size_t>(n), Integer(long(m) * (n + 1)));
  s[0] = m;
  Integer prod = 1;
  for (const auto& x : s) prod *= x;
  return SnfDecomposition{transform_u(n), std::move(s), transform_v(n), prod};
}

namespace {

// All-ones, then all-ones with a 2 in each of positions first..len-1.
std::vector<Element> ones_with_a_two(std::size_t len, std::size_t first) {
  std::vector<Element> gens{Element(len, 1)};
  for (std::size_t j = first; j < len; ++j) {
    Element x(len, 1);
    x[j] = 2;
    gens.push_back(std::move(x));
  }
  return gens;
}

}  // namespace

CayleyDigraph make_dn(int n) {
  require_degree(n);
  const auto len = static_cast<std::size_t>(n - 1);
  return CayleyDigraph(AbelianGroupSpec(std::vector<std::int64_t>(len, n + 1)),
                       ones_with_a_two(len, 0));
}

Rational family_density(int d) {
  require_degree(d);
  Rational q(ipow(2, static_cast<unsigned long>(d)),
             ipow(d, static_cast<unsigned long>(d)) * (d + 1));
  q.canonicalize();
  return q;
}

Rational family_coefficient(int d) {
  require_degree(d);
  Rational q(ipow(2, static_cast<unsigned long>(d)), Integer(d + 1));
  q.canonicalize();
  return q;
}

FamilyInstance make_dnm(int n, int m) {
  require_degree(n);
  if (m < 1) throw DomainError("scale m must be >= 1");
  const auto len = static_cast<std::size_t>(n);
  std::vector<std::int64_t> factors(len, std::int64_t(m) * (n + 1));
  factors[0] = m;
  FamilyInstance f{n,
                   m,
                   make_mnm(n, m),
                   CayleyDigraph(AbelianGroupSpec(std::move(factors)), ones_with_a_two(len, 1)),
                   ipow(m, len) * ipow(n + 1, len - 1),
                   std::int64_t(n) * (n + 1) / 2 * m - n,
                   family_density(n)};
  return f;
}

PredictedMetrics predicted_metrics(int d, std::int64_t k) {
  require_degree(d);
  const std::int64_t c = std::int64_t(d) * (d + 1) / 2;
  if (k < 1 || (k + d) % c != 0 || (k + d) / c < 1)
    throw UnattainableDiameter("no D_{d,m} with d=" + std::to_string(d) +
                               " has diameter " + std::to_string(k));
  PredictedMetrics p;
  p.scale = (k + d) / c;
  Rational base(Integer(std::to_string(k)) + d, Integer(d));
  base.canonicalize();
  p.order = family_coefficient(d) * rpow(base, static_cast<unsigned long>(d));
  p.order.canonicalize();
  p.density = family_density(d);
  return p;
}

std::int64_t nc2_formula(std::int64_t k) {
  if (k < 2) throw DomainError("NC_{2,k} formula needs k >= 2");
  const std::int64_t sq = (k + 2) * (k + 2);
  return (sq + 2) / 3 - 1;
}

std::int64_t na2_formula(std::int64_t k) {
  return nc2_formula(k) + (k % 3 == 1 ? 1 : 0);
}

Integer fiduccia_bound(std::int64_t k) {
  Integer c = k + 3;
  return floor_div(3 * c * c * c, 25);
}

Integer lattice_point_bound(int d, std::int64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k + d), static_cast<unsigned long>(d));
  return r;
}

const std::vector<PrintedTableRow>& printed_table() {
  static const std::vector<PrintedTableRow> rows{
      {1, "0.06250", 1, 1, 7, 4},        {2, "0.07200", 1, 1, 13, 9},
      {3, "0.07407", 3, 4, 24, 16},      {4, "0.07872", 6, 8, 38, 27},
      {5, "0.07812", 11, 15, 56, 40},    {6, "0.07819", 19, 26, 81, 57},
      {7, "0.08400", 29, 42, 111, 84},   {8, "0.08340", 44, 62, 147, 111},
      {9, "0.07986", 62, 88, 192, 138},  {10, "0.08011", 84, 120, 244, 176},
  };
  return rows;
}

std::optional<PrintedTableRow> printed_table_row(std::int64_t k) {
  for (const auto& r : printed_table())
    if (r.k == k) return r;
  return std::nullopt;
}

BoundsReport bounds_report(int d, std::int64_t k) {
  require_degree(d);
  if (k < 1) throw DomainError("diameter k must be >= 1");
  BoundsReport r;
  r.d = d;
  r.k = k;
  const Integer kk(std::to_string(k));
  const auto e = static_cast<unsigned long>(d);
  Integer kd;
  mpz_pow_ui(kd.get_mpz_t(), kk.get_mpz_t(), e);
  r.wc_lower_leading = Rational(kd, ipow(d, e));
  r.wc_lower_leading.canonicalize();
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), e);
  r.wc_upper_leading = Rational(kd, fact);
  r.wc_upper_leading.canonicalize();
  r.lattice_point_bound = lattice_point_bound(d, k);

  if (d == 2 && k >= 2) {
    r.nc2 = nc2_formula(k);
    r.na2 = na2_formula(k);
  }
  if (d == 3) {
    const Integer k3 = kk * kk * kk;
    r.fiduccia_floor = fiduccia_bound(k);
    r.ceil_0084_k3 = ceil_div(84 * k3, 1000);
    r.ceil_3_25_k3 = ceil_div(3 * k3, 25);
    if (auto row = printed_table_row(k)) {
      r.printed_fourth_column = row->fourth_column;
      r.footnotes.push_back(
          "the printed floor(3/25 (k+3)^3) column reads " + std::to_string(row->fourth_column) +
          ", which equals floor((k+3)^3/9) = " +
          floor_div(Integer(k + 3) * (k + 3) * (k + 3), 9).get_str() +
          "; direct evaluation gives " + r.fiduccia_floor->get_str());
    }
  }

  r.family_coefficient = family_coefficient(d);
  r.family_coefficient_value = r.family_coefficient.get_d();
  r.family_coefficient_symbolic = "2^(d - log2(d+1)) = 2^" + std::to_string(d) + "/" +
                                  std::to_string(d + 1);
  r.df_factor_symbolic = "c/sqrt(2 pi) * e^(d - (3/2) ln d - (ln ln d)(1 + log2 e))";
  const double dd = d;
  r.df_factor_without_c =
      std::exp(dd - 1.5 * std::log(dd) - std::log(std::log(dd)) * (1.0 + std::numbers::log2e)) /
      std::sqrt(2.0 * std::numbers::pi);
  r.footnotes.push_back(
      "Dougherty-Faber factor carries an undetermined constant c; shown without c");
  return r;
}

}  // namespace abelcay
