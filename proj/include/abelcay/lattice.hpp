#pragma once

// The group of integral vectors modulo a nonsingular integer matrix M,
// Z^n / M Z^n, realized in Smith coordinates: x maps to (U x) mod (s_1..s_n).

#include <compare>
#include <cstddef>
#include <vector>

#include "abelcay/intmat.hpp"

namespace abelcay {

/// Canonical coordinates of a residue class; 0 <= coords[i] < s_i, so
/// components with s_i == 1 are always zero.
struct GroupElement {
  IntVector coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.coords <=> b.coords;
  }
};

struct GroupStructure {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, in chain order
  bool cyclic = true;
  Integer order;
};

class QuotientGroup {
 public:
  /// Throws SingularMatrix when det m == 0.
  explicit QuotientGroup(IntMatrix m);
  /// Uses a caller-supplied decomposition (e.g. a hand-derived U, V pair);
  /// throws DomainError if it does not satisfy the SNF invariants for m.
  QuotientGroup(IntMatrix m, SnfDecomposition snf);

  std::size_t dimension() const { return m_.size(); }
  const IntMatrix& modulus() const { return m_; }
  const SnfDecomposition& snf() const { return snf_; }
  const Integer& order() const { return snf_.det_abs; }
  std::size_t rank() const;
  bool cyclic() const { return rank() <= 1; }
  std::vector<Integer> torsion() const;

 private:
  IntMatrix m_;
  SnfDecomposition snf_;
};

IntVector make_vector(std::initializer_list<long> xs);

/// phi(x) = U x reduced componentwise modulo the invariant factors.
GroupElement canonicalize(const IntVector& x, const QuotientGroup& g);

/// a == b (mod M), i.e. a - b lies in the lattice spanned by M's columns.
bool congruent(const IntVector& a, const IntVector& b, const QuotientGroup& g);

GroupStructure structure(const QuotientGroup& g);

/// The last r columns of U^{-1}, r = rank; they generate the group and the
/// i-th has order s_{n-r+i}.
std::vector<IntVector> basis(const QuotientGroup& g);

}  // namespace abelcay
