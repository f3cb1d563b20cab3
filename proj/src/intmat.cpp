#include "abelcay/intmat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "abelcay/errors.hpp"

namespace abelcay {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n, Integer(0)) {
  if (n == 0) throw DimensionMismatch("matrix dimension must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("matrix must be square");
    std::size_t j = 0;
    for (long x : row) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw DimensionMismatch("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Integer parse_integer(std::string_view tok) {
  tok = trim(tok);
  std::string_view digits = tok;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad integer entry '" + std::string(tok) + "'");
  std::string text(tok.front() == '+' ? tok.substr(1) : tok);
  return Integer(text, 10);
}

}  // namespace

IntMatrix IntMatrix::parse(std::string_view literal) {
  literal = trim(literal);
  if (literal.empty()) throw ParseError("empty matrix literal");
  std::vector<IntVector> rows;
  for (auto row_text : split(literal, ';')) {
    IntVector row;
    for (auto tok : split(row_text, ',')) row.push_back(parse_integer(tok));
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows)
    if (row.size() != rows.size())
      throw ParseError("matrix literal is not square: " +
                       std::to_string(rows.size()) + " rows, a row has " +
                       std::to_string(row.size()) + " entries");
  return from_rows(rows);
}

std::string IntMatrix::to_literal() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j);
    }
  }
  return out.str();
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != n_) throw DimensionMismatch("vector length differs from matrix dimension");
  IntVector y(n_, Integer(0));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::scaled(const Integer& c) const {
  IntMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix product dimension mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.n_ == b.n_ && a.a_ == b.a_;
}

Integer det(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Advances `idx` (strictly increasing, values < n) to the next k-combination.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  Integer g = 0;
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      IntMatrix sub(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      Integer d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      if (g == 1) return g;
    } while (next_combination(cols, n));
  } while (next_combination(rows, n));
  return g;
}

}  // namespace

std::vector<Integer> determinantal_divisors_by_minors(const IntMatrix& m) {
  if (det(m) == 0) throw SingularMatrix();
  std::vector<Integer> d;
  d.reserve(m.size());
  for (std::size_t k = 1; k <= m.size(); ++k) d.push_back(minor_gcd(m, k));
  return d;
}

std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  if (m.size() <= kMinorEnumerationMaxDim) return determinantal_divisors_by_minors(m);
  auto snf = smith_normal_form(m);
  if (snf.singular()) throw SingularMatrix();
  std::vector<Integer> d;
  Integer acc = 1;
  for (const auto& s : snf.s) d.push_back(acc *= s);
  return d;
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  auto d = determinantal_divisors(m);
  std::vector<Integer> s(d.size());
  Integer prev = 1;
  for (std::size_t k = 0; k < d.size(); ++k) {
    mpz_divexact(s[k].get_mpz_t(), d[k].get_mpz_t(), prev.get_mpz_t());
    prev = d[k];
  }
  return s;
}

namespace {

// Row/column operations applied to the working matrix and its transform.
void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t k = 0; k < a.size(); ++k) a(dst, k) -= q * a(src, k);
}

void add_col_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t k = 0; k < a.size(); ++k) a(k, dst) -= q * a(k, src);
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);
  // Invariant throughout: a == u * m * v.
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi == n || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;  // remaining block is zero
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row_multiple(a, i, t, q);
        add_row_multiple(u, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col_multiple(a, j, t, q);
        add_col_multiple(v, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility fix-up: fold an offending row into the pivot row.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == n) break;
      add_row_multiple(a, t, bad, Integer(-1));
      add_row_multiple(u, t, bad, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t k = 0; k < n; ++k) {
        a(t, k) = -a(t, k);
        u(t, k) = -u(t, k);
      }
    }
  }

  SnfDecomposition out{std::move(u), {}, std::move(v), 0};
  out.s.reserve(n);
  Integer prod = 1;
  for (std::size_t i = 0; i < n; ++i) {
    out.s.push_back(a(i, i));
    prod *= a(i, i);
  }
  out.det_abs = prod;
  return out;
}

bool is_unimodular(const IntMatrix& m) { return abs(det(m)) == 1; }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) throw DomainError("matrix is not unimodular");
  const std::size_t n = m.size();
  // Gauss-Jordan over the rationals on [m | I].
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = m(i, j);
    w[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (w[p][c] == 0) ++p;
    std::swap(w[p], w[c]);
    Rational piv = w[c][c];
    for (auto& x : w[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rational f = w[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  IntMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = w[i][n + j].get_num();
  return inv;
}

bool satisfies_snf_invariants(const IntMatrix& m, const SnfDecomposition& snf) {
  const std::size_t n = m.size();
  if (snf.s.size() != n || snf.u.size() != n || snf.v.size() != n) return false;
  if (!(snf.u * m * snf.v == snf.diagonal())) return false;
  if (!is_unimodular(snf.u) || !is_unimodular(snf.v)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (snf.s[i] < 0) return false;
    if (i + 1 < n &&
        !mpz_divisible_p(snf.s[i + 1].get_mpz_t(), snf.s[i].get_mpz_t()))
      return false;
  }
  Integer prod = 1;
  for (const auto& s : snf.s) prod *= s;
  return prod == abs(det(m)) && snf.det_abs == prod;
}

}  // namespace abelcay
