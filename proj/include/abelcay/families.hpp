#pragma once

// Explicit dense families: the circulant matrices M_n = circ(n,-1,...,-1)
// and M_{n,m} = m M_n, the digraphs D_n and D_{n,m} they present, and the
// closed-form order, diameter, density and bound formulas around them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcay/cayley.hpp"
#include "abelcay/intmat.hpp"

namespace abelcay {

/// circ(n, -1, ..., -1). Throws DomainError for n < 2.
IntMatrix make_mn(int n);
/// m * circ(n, -1, ..., -1).
IntMatrix make_mnm(int n, int m);

/// Closed-form unimodular pair with U_n M_{n,m} V_n = diag(m, m(n+1), ...).
IntMatrix transform_u(int n);
IntMatrix transform_v(int n);
SnfDecomposition closed_form_snf(int n, int m = 1);

/// D_n = Cay((n-1) Z_{n+1}; B_n).
CayleyDigraph make_dn(int n);

struct FamilyInstance {
  int n = 0;
  int m = 0;
  IntMatrix matrix;
  CayleyDigraph digraph;  // Z_m + (n-1) Z_{m(n+1)} with generators B'_n
  Integer predicted_order;
  std::int64_t predicted_diameter = 0;
  Rational predicted_density;
};

/// D_{n,m}. The Z_m factor is kept even when m == 1.
FamilyInstance make_dnm(int n, int m);

/// (2/d)^d / (d+1).
Rational family_density(int d);
/// 2^d / (d+1), the leading coefficient of (k/d)^d in the family's order.
Rational family_coefficient(int d);

struct PredictedMetrics {
  std::int64_t scale = 0;  // the m with k = C(d+1,2) m - d
  Rational order;
  Rational density;
};

/// Order and density of the family member of degree d and diameter k.
/// Throws UnattainableDiameter if no scale m >= 1 gives diameter k.
PredictedMetrics predicted_metrics(int d, std::int64_t k);

/// ceil((k+2)^2 / 3) - 1; throws DomainError for k < 2.
std::int64_t nc2_formula(std::int64_t k);
/// nc2_formula(k) + 1 when k = 1 (mod 3), else nc2_formula(k).
std::int64_t na2_formula(std::int64_t k);

/// floor(3 (k+3)^3 / 25).
Integer fiduccia_bound(std::int64_t k);
/// C(k+d, d): lattice points of norm <= k, an upper bound on any
/// d-generated Abelian Cayley digraph of diameter k.
Integer lattice_point_bound(int d, std::int64_t k);

/// One row of the d = 3 density table as printed in the literature.
struct PrintedTableRow {
  int k;
  const char* density;
  std::int64_t ceil_0084_k3;
  std::int64_t ceil_3_25_k3;
  std::int64_t fourth_column;  // headed floor(3/25 (k+3)^3)
  std::int64_t nc3;
};

/// Rows k = 1..10.
const std::vector<PrintedTableRow>& printed_table();
std::optional<PrintedTableRow> printed_table_row(std::int64_t k);

struct BoundsReport {
  int d = 0;
  std::int64_t k = 0;
  Rational wc_lower_leading;  // (k/d)^d
  Rational wc_upper_leading;  // k^d / d!
  Integer lattice_point_bound;
  std::optional<std::int64_t> nc2;
  std::optional<std::int64_t> na2;
  // d = 3 columns
  std::optional<Integer> fiduccia_floor;
  std::optional<Integer> ceil_0084_k3;
  std::optional<Integer> ceil_3_25_k3;
  std::optional<std::int64_t> printed_fourth_column;
  Rational family_coefficient;
  double family_coefficient_value = 0;
  std::string family_coefficient_symbolic;
  std::string df_factor_symbolic;
  double df_factor_without_c = 0;
  std::vector<std::string> footnotes;
};

/// Throws DomainError unless d >= 2 and k >= 1.
BoundsReport bounds_report(int d, std::int64_t k);

}  // namespace abelcay
