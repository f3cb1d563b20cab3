#pragma once

// Minimum distance diagrams ("hyper-L" sets) of commutative-step digraphs
// Cay(Z^n / M Z^n; {e_1..e_n}): one nonnegative lattice point of minimal
// l1-norm per residue class modulo M.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abelcay/intmat.hpp"

namespace abelcay {

using LatticePoint = std::vector<std::int64_t>;

struct HyperL {
  std::size_t dimension = 0;
  std::vector<LatticePoint> points;
  std::uint32_t max_norm = 0;
  std::uint64_t max_attainers = 0;
};

inline constexpr std::uint64_t kDefaultClassCap = 1'000'000;

std::int64_t l1_norm(std::span<const std::int64_t> x);

/// BFS over residue classes expanding e_1..e_n in order. Each class keeps the
/// lexicographically smallest representative among the candidates produced
/// by the previous layer. Throws SingularMatrix, InstanceTooLarge.
HyperL minimum_distance_diagram(const IntMatrix& m, std::uint64_t cap = kDefaultClassCap);

/// Entries in [0, n-1] and, for every i in 1..n-1, at most i entries >= n-i.
/// Accepts any length up to n.
bool staircase_member(std::span<const std::int64_t> x, std::int64_t n);

/// staircase_member for a full length-n vector; throws DimensionMismatch.
bool mn_membership(std::span<const std::int64_t> x, std::int64_t n);

/// f(m, n) by the binomial recurrence, f(0, n) = 1. Throws DomainError
/// unless 0 <= m <= n.
Integer f_count(int m, int n);
/// (n - m + 1)(n + 1)^(m - 1), and 1 for m = 0.
Rational f_closed_form(int m, int n);

/// The set {x : mn_membership(x, n)} for circ(n, -1, ..., -1).
HyperL mn_hyperl(int n, std::uint64_t cap = kDefaultClassCap);

struct DiameterWitness {
  std::int64_t diameter = 0;
  LatticePoint witness;
};

/// x* = (mn-1, m(n-1)-1, ..., m-1) and its norm C(n+1,2) m - n.
DiameterWitness mnm_diameter_witness(int n, int m);

/// One `x1,...,xn,norm` row per point, with a header.
std::string to_csv(const HyperL& h);

/// Grid picture of a planar (n = 2) diagram, row x2 = max at the top.
std::string render_ascii(const HyperL& h);

}  // namespace abelcay
