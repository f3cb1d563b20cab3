#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace abelcay::detail {

// Flat description of one group Z_{m_1} + ... + Z_{m_r} for the search
// kernels; elements are mixed-radix indices 0..order-1.
struct GroupTable {
  std::vector<std::int64_t> factors;
  std::int64_t order = 1;
  std::size_t rank = 0;
  std::vector<std::int64_t> stride;
  std::vector<std::int32_t> coords;  // order x rank
  // Automorphisms used for canonical-form pruning, as element index maps.
  std::vector<std::vector<std::int32_t>> symmetries;

  std::int64_t add(std::int64_t x, std::int64_t y) const {
    if (rank == 1) {
      std::int64_t s = x + y;
      return s >= order ? s - order : s;
    }
    std::int64_t idx = 0;
    const auto* cx = &coords[static_cast<std::size_t>(x) * rank];
    const auto* cy = &coords[static_cast<std::size_t>(y) * rank];
    for (std::size_t i = 0; i < rank; ++i) {
      std::int64_t c = cx[i] + cy[i];
      if (c >= factors[i]) c -= factors[i];
      idx += c * stride[i];
    }
    return idx;
  }
};

GroupTable make_group_table(const std::vector<std::int64_t>& factors);

struct Scratch {
  std::vector<std::uint32_t> seen;
  std::uint32_t epoch = 0;
  std::vector<std::int64_t> frontier, next, image;
};

// True iff every element is within distance k of 0.
bool within_diameter(const GroupTable& g, const std::int64_t* gens, std::size_t d,
                     std::int64_t k, Scratch& s, std::uint64_t& visits);

struct ScanShared {
  const GroupTable* group = nullptr;
  std::size_t d = 0;
  std::int64_t k = 0;
  bool degenerate = false;
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> visits{0};
  std::atomic<std::uint64_t> explored{0};
  std::atomic<bool> aborted{false};
};

// Every canonical candidate whose smallest element is `first`; returns the
// successful ones (sorted element index tuples).
void scan_first(ScanShared& sh, std::int64_t first, Scratch& s,
                std::vector<std::vector<std::int64_t>>& hits);

std::vector<std::vector<std::int64_t>> scan_group_serial(ScanShared& sh);
std::vector<std::vector<std::int64_t>> scan_group_omp(ScanShared& sh, int threads);

}  // namespace abelcay::detail
