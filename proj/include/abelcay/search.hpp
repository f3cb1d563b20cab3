#pragma once

// Exhaustive search for the largest cyclic (NC_{d,k}) and Abelian
// (NA_{d,k}) Cayley digraphs of degree d and diameter at most k.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelcay/cayley.hpp"

namespace abelcay {

struct Witness {
  AbelianGroupSpec group;
  std::vector<Element> generators;

  CayleyDigraph digraph() const { return CayleyDigraph(group, generators); }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchOptions {
  /// Cap on BFS vertex expansions summed over the whole search.
  std::uint64_t budget = 1'000'000'000;
  /// 1 runs the serial reference scan; 0 lets OpenMP pick.
  int threads = 0;
  /// Also consider generator multisets containing 0 or repeats.
  bool allow_degenerate = false;
  std::size_t max_witnesses = 16;
};

struct SearchResult {
  int d = 0;
  std::int64_t k = 0;
  std::int64_t best_order = 0;  // 0 when nothing was found
  std::vector<Witness> witnesses;
  std::uint64_t explored = 0;  // candidate generator sets checked by BFS
  std::uint64_t visits = 0;    // BFS vertex expansions
  std::int64_t ceiling = 0;
  bool ceiling_proven = false;  // ceiling >= a proven upper bound
  bool exhaustive = false;
};

/// Proven order bound used when no ceiling is given: floor(3/25 (k+3)^3)
/// for d = 3 (capped by C(k+3,3)), C(k+d,d) otherwise.
std::int64_t default_ceiling(int d, std::int64_t k);

/// Scans N from `upper` (0 = default_ceiling) down; the first N with a
/// d-subset A of Z_N \ {0}, canonical under A ~ uA for units u, whose
/// digraph has diameter <= k is NC_{d,k}.
SearchResult nc_search(int d, std::int64_t k, std::int64_t upper = 0,
                       const SearchOptions& opts = {});

/// Same scan over every Abelian group of order N with at most d invariant
/// factors, generator sets canonical under swapping equal factors.
SearchResult na_search(int d, std::int64_t k, std::int64_t upper = 0,
                       const SearchOptions& opts = {});

/// Generators span the group and the BFS diameter is at most k.
bool verify_witness(const CayleyDigraph& g, std::int64_t k);

/// Invariant-factor chains m_1 | ... | m_r with product n and r <= max_rank,
/// m_1 > 1; the trivial group yields one empty chain.
std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n,
                                                               std::size_t max_rank);

/// Lexicographically smallest sorted tuple among u*A mod n, u a unit.
std::vector<std::int64_t> multiplier_canonical(std::int64_t n, std::vector<std::int64_t> a);

}  // namespace abelcay
