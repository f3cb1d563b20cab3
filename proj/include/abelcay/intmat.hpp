#pragma once

// Exact integer linear algebra over arbitrary-precision integers:
// determinants, determinantal divisors, invariant factors and the Smith
// normal form with explicit unimodular transforms.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace abelcay {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Square n x n matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  /// Zero matrix of dimension n (n >= 1).
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  /// Parses `a,b,c;d,e,f;...` (rows by ';', entries by ','); throws ParseError.
  static IntMatrix parse(std::string_view literal);
  std::string to_literal() const;

  std::size_t size() const { return n_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  IntVector column(std::size_t j) const;
  IntVector apply(const IntVector& x) const;
  IntMatrix scaled(const Integer& c) const;
  IntMatrix transposed() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t n_;
  std::vector<Integer> a_;
};

/// Result of a Smith normal form computation: u * m * v == diag(s).
struct SnfDecomposition {
  IntMatrix u;
  std::vector<Integer> s;
  IntMatrix v;
  Integer det_abs;

  bool singular() const { return det_abs == 0; }
  IntMatrix diagonal() const { return IntMatrix::diagonal(s); }
};

/// Exact determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& m);

/// Largest dimension for which determinantal_divisors enumerates minors.
inline constexpr std::size_t kMinorEnumerationMaxDim = 8;

/// d_1..d_n, where d_k is the gcd of all k x k minors. Minors are enumerated
/// for n <= kMinorEnumerationMaxDim; larger inputs fall back to prefix
/// products of the elimination-based invariant factors.
/// Throws SingularMatrix.
std::vector<Integer> determinantal_divisors(const IntMatrix& m);

/// The minor-enumeration route regardless of size.
std::vector<Integer> determinantal_divisors_by_minors(const IntMatrix& m);

/// s_k = d_k / d_{k-1}. Throws SingularMatrix.
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// Smith normal form by gcd-pivoting row/column elimination. Singular input
/// is accepted and yields trailing zero invariant factors.
SnfDecomposition smith_normal_form(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Exact inverse of a unimodular matrix; throws DomainError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Checks every decomposition invariant against m: u*m*v == diag(s),
/// |det u| == |det v| == 1, s_i | s_{i+1}, prod s_i == |det m|.
bool satisfies_snf_invariants(const IntMatrix& m, const SnfDecomposition& snf);

}  // namespace abelcay
