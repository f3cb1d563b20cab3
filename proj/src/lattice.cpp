#include "abelcay/lattice.hpp"

#include <utility>

#include "abelcay/errors.hpp"

namespace abelcay {

QuotientGroup::QuotientGroup(IntMatrix m)
    : m_(std::move(m)), snf_(smith_normal_form(m_)) {
  if (snf_.singular()) throw SingularMatrix();
}

QuotientGroup::QuotientGroup(IntMatrix m, SnfDecomposition snf)
    : m_(std::move(m)), snf_(std::move(snf)) {
  if (det(m_) == 0) throw SingularMatrix();
  if (!satisfies_snf_invariants(m_, snf_))
    throw DomainError("supplied decomposition is not a Smith normal form of M");
}

std::size_t QuotientGroup::rank() const {
  std::size_t r = 0;
  for (const auto& s : snf_.s)
    if (s > 1) ++r;
  return r;
}

std::vector<Integer> QuotientGroup::torsion() const {
  std::vector<Integer> t;
  for (const auto& s : snf_.s)
    if (s > 1) t.push_back(s);
  return t;
}

IntVector make_vector(std::initializer_list<long> xs) {
  IntVector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

GroupElement canonicalize(const IntVector& x, const QuotientGroup& g) {
  if (x.size() != g.dimension())
    throw DimensionMismatch("vector length " + std::to_string(x.size()) +
                            " differs from group dimension " +
                            std::to_string(g.dimension()));
  GroupElement e{g.snf().u.apply(x)};
  for (std::size_t i = 0; i < e.coords.size(); ++i)
    mpz_fdiv_r(e.coords[i].get_mpz_t(), e.coords[i].get_mpz_t(),
               g.snf().s[i].get_mpz_t());
  return e;
}

bool congruent(const IntVector& a, const IntVector& b, const QuotientGroup& g) {
  if (a.size() != b.size()) throw DimensionMismatch("vectors differ in length");
  IntVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  auto e = canonicalize(diff, g);
  for (const auto& c : e.coords)
    if (c != 0) return false;
  return true;
}

GroupStructure structure(const QuotientGroup& g) {
  GroupStructure st;
  st.torsion = g.torsion();
  st.rank = st.torsion.size();
  st.cyclic = g.cyclic();
  st.order = g.order();
  return st;
}

std::vector<IntVector> basis(const QuotientGroup& g) {
  const std::size_t n = g.dimension();
  const std::size_t r = g.rank();
  IntMatrix inv = unimodular_inverse(g.snf().u);
  std::vector<IntVector> out;
  for (std::size_t j = n - r; j < n; ++j) out.push_back(inv.column(j));
  return out;
}

}  // namespace abelcay
