#pragma once

// Cayley digraphs Cay(G; A) of finite Abelian groups
// G = Z_{m_1} + ... + Z_{m_t}: construction, BFS distances from the
// identity, diameter, distance distribution and density.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abelcay/intmat.hpp"
#include "abelcay/lattice.hpp"

namespace abelcay {

using Element = std::vector<std::int64_t>;

/// Direct sum Z_{m_1} + ... + Z_{m_t}, factors in the order given.
class AbelianGroupSpec {
 public:
  AbelianGroupSpec() : factors_{1} {}
  explicit AbelianGroupSpec(std::vector<std::int64_t> factors);

  /// `Z84`, `Z4xZ4`, `Z2xZ8xZ8`; throws ParseError.
  static AbelianGroupSpec parse(std::string_view text);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t components() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }

  /// Same group with factors sorted ascending.
  AbelianGroupSpec sorted() const;
  /// Invariant-factor chain s_1 | s_2 | ... with trivial factors dropped;
  /// empty for the trivial group.
  std::vector<std::int64_t> invariant_factors() const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;

 private:
  std::vector<std::int64_t> factors_;
  std::uint64_t order_ = 1;
};

bool is_isomorphic_group(const AbelianGroupSpec& a, const AbelianGroupSpec& b);

/// Cay(G; A): arc u -> v iff v - u is in A. Generators are reduced
/// componentwise on construction; repeats are kept (A is a multiset).
class CayleyDigraph {
 public:
  CayleyDigraph(AbelianGroupSpec group, std::vector<Element> generators);

  const AbelianGroupSpec& group() const { return group_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::size_t degree() const { return generators_.size(); }
  std::uint64_t order() const { return group_.order(); }

  /// Mixed-radix index of an element (first component most significant).
  std::uint64_t index_of(const Element& x) const;
  Element element_at(std::uint64_t index) const;

  /// Writes the components of vertex `index` into `coords` (size t).
  void decode(std::uint64_t index, std::int64_t* coords) const;
  /// Index of coords + generators()[gen].
  std::uint64_t step(const std::int64_t* coords, std::size_t gen) const;
  std::uint64_t neighbor(std::uint64_t index, std::size_t gen) const;

 private:
  AbelianGroupSpec group_;
  std::vector<Element> generators_;
  std::vector<std::uint64_t> stride_;
};

/// BFS layer sizes from the identity.
struct DistanceProfile {
  std::uint32_t diameter = 0;        // index of the last nonempty layer
  std::vector<std::uint64_t> counts;  // counts[j] = vertices at distance j
  std::uint64_t reachable = 0;
  std::uint64_t order = 0;

  bool complete() const { return reachable == order; }
  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;
};

enum class Execution { serial, parallel };

/// Orders at or above this run the OpenMP kernel by default.
inline constexpr std::uint64_t kParallelBfsThreshold = 1u << 16;

/// BFS layers without requiring the generators to span the group.
DistanceProfile explore(const CayleyDigraph& g, Execution exec);
DistanceProfile explore(const CayleyDigraph& g);

/// Like explore, but throws NotGenerating when some vertex is unreachable.
DistanceProfile distance_profile(const CayleyDigraph& g, Execution exec);
DistanceProfile distance_profile(const CayleyDigraph& g);

/// Per-vertex BFS distance from the identity, -1 where unreachable.
std::vector<std::int32_t> distances(const CayleyDigraph& g);

/// In-degree of every vertex, counting arcs with multiplicity.
std::vector<std::uint32_t> in_degrees(const CayleyDigraph& g);

/// delta = N / (k + d)^d, exactly. Throws NotGenerating on incomplete profiles.
Rational density(const CayleyDigraph& g, const DistanceProfile& profile);

/// Decimal rendering with `digits` fractional digits, ties to even.
std::string format_decimal(const Rational& q, int digits);

/// Cay(Z^n / M Z^n; {e_1..e_n}) presented on the torsion part of the Smith
/// form, generators U e_i reduced modulo the invariant factors.
CayleyDigraph from_matrix(const IntMatrix& m);
CayleyDigraph from_group(const QuotientGroup& g);

/// Graphviz rendering; throws InstanceTooLarge above kDotMaxOrder vertices.
inline constexpr std::uint64_t kDotMaxOrder = 200;
std::string to_dot(const CayleyDigraph& g);

std::string element_to_string(const Element& x);

}  // namespace abelcay
