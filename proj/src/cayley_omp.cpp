// OpenMP level-synchronous BFS. Produces the same DistanceProfile as the
// serial kernel in cayley.cpp; only the order inside a layer differs.

#include <omp.h>

#include <atomic>
#include <cstdint>
#include <vector>

#include "abelcay/cayley.hpp"

namespace abelcay::detail {

DistanceProfile bfs_layers_omp(const CayleyDigraph& g) {
  const std::uint64_t n = g.order();
  const std::size_t t = g.group().components();
  const std::size_t d = g.degree();
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<std::uint64_t> frontier{0}, next;
  visited[0] = 1;

  DistanceProfile p;
  p.order = n;
  p.counts.push_back(1);
  while (!frontier.empty()) {
    next.clear();
    const auto width = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
    {
      std::vector<std::uint64_t> local;
      std::vector<std::int64_t> coords(t);
#pragma omp for schedule(dynamic, 512) nowait
      for (std::int64_t i = 0; i < width; ++i) {
        g.decode(frontier[static_cast<std::size_t>(i)], coords.data());
        for (std::size_t a = 0; a < d; ++a) {
          auto w = g.step(coords.data(), a);
          std::atomic_ref<std::uint8_t> flag(visited[w]);
          if (flag.load(std::memory_order_relaxed) == 0 &&
              flag.exchange(1, std::memory_order_relaxed) == 0)
            local.push_back(w);
        }
      }
#pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
    if (next.empty()) break;
    p.counts.push_back(next.size());
    std::swap(frontier, next);
  }
  p.diameter = static_cast<std::uint32_t>(p.counts.size() - 1);
  for (auto c : p.counts) p.reachable += c;
  return p;
}

}  // namespace abelcay::detail
