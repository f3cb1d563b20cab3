#include "abelcay/search.hpp"

#include <algorithm>
#include <numeric>

#include "abelcay/errors.hpp"
#include "abelcay/families.hpp"
#include "search_internal.hpp"

namespace abelcay {

namespace detail {

namespace {

// Upper limit on symmetry-map storage (entries) per group table.
constexpr std::size_t kSymmetryBudget = std::size_t(1) << 24;

}  // namespace

GroupTable make_group_table(const std::vector<std::int64_t>& factors) {
  GroupTable g;
  g.factors = factors;
  g.rank = factors.size();
  g.order = 1;
  for (auto m : factors) g.order *= m;
  g.stride.assign(g.rank, 1);
  for (std::size_t i = g.rank; i-- > 1;) g.stride[i - 1] = g.stride[i] * factors[i];
  const auto n = static_cast<std::size_t>(g.order);
  g.coords.resize(n * g.rank);
  for (std::size_t x = 0; x < n; ++x) {
    std::int64_t rest = static_cast<std::int64_t>(x);
    for (std::size_t i = g.rank; i-- > 0;) {
      g.coords[x * g.rank + i] = static_cast<std::int32_t>(rest % factors[i]);
      rest /= factors[i];
    }
  }
  if (g.rank == 0) return g;

  auto index = [&](const std::vector<std::int64_t>& c) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < g.rank; ++i) idx += c[i] * g.stride[i];
    return static_cast<std::int32_t>(idx);
  };

  // x -> u x for units u of the exponent (the last invariant factor).
  const std::int64_t exponent = factors.back();
  std::vector<std::int64_t> c(g.rank);
  for (std::int64_t u = 2; u < exponent; ++u) {
    if (std::gcd(u, exponent) != 1) continue;
    if ((g.symmetries.size() + 1) * n > kSymmetryBudget) break;
    std::vector<std::int32_t> map(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < g.rank; ++i)
        c[i] = (g.coords[x * g.rank + i] * u) % factors[i];
      map[x] = index(c);
    }
    g.symmetries.push_back(std::move(map));
  }

  // Coordinate permutations inside runs of equal factors.
  std::vector<std::size_t> perm(g.rank);
  std::iota(perm.begin(), perm.end(), 0);
  auto respects_blocks = [&] {
    for (std::size_t i = 0; i < g.rank; ++i)
      if (factors[perm[i]] != factors[i]) return false;
    return true;
  };
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (!respects_blocks()) continue;
    if ((g.symmetries.size() + 1) * n > kSymmetryBudget) break;
    std::vector<std::int32_t> map(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < g.rank; ++i) c[i] = g.coords[x * g.rank + perm[i]];
      map[x] = index(c);
    }
    g.symmetries.push_back(std::move(map));
  }
  return g;
}

bool within_diameter(const GroupTable& g, const std::int64_t* gens, std::size_t d,
                     std::int64_t k, Scratch& s, std::uint64_t& visits) {
  const auto n = static_cast<std::size_t>(g.order);
  if (s.seen.size() < n) {
    s.seen.assign(n, 0);
    s.epoch = 0;
  }
  if (++s.epoch == 0) {
    std::fill(s.seen.begin(), s.seen.end(), 0);
    s.epoch = 1;
  }
  s.frontier.assign(1, 0);
  s.seen[0] = s.epoch;
  std::size_t reached = 1;
  for (std::int64_t layer = 0; layer < k && reached < n && !s.frontier.empty(); ++layer) {
    s.next.clear();
    for (auto v : s.frontier) {
      ++visits;
      for (std::size_t a = 0; a < d; ++a) {
        auto w = static_cast<std::size_t>(g.add(v, gens[a]));
        if (s.seen[w] != s.epoch) {
          s.seen[w] = s.epoch;
          s.next.push_back(static_cast<std::int64_t>(w));
        }
      }
    }
    reached += s.next.size();
    std::swap(s.frontier, s.next);
  }
  return reached == n;
}

namespace {

bool is_canonical(const GroupTable& g, const std::vector<std::int64_t>& a, Scratch& s) {
  for (const auto& map : g.symmetries) {
    s.image.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s.image[i] = map[static_cast<std::size_t>(a[i])];
    std::sort(s.image.begin(), s.image.end());
    if (s.image < a) return false;
  }
  return true;
}

}  // namespace

void scan_first(ScanShared& sh, std::int64_t first, Scratch& s,
                std::vector<std::vector<std::int64_t>>& hits) {
  const GroupTable& g = *sh.group;
  const std::int64_t n = g.order;
  // A canonical cyclic set starts with a divisor of n: some unit sends the
  // first element to gcd(first, n).
  if (g.rank == 1 && first > 0 && n % first != 0) return;
  std::vector<std::int64_t> a(sh.d);
  a[0] = first;
  std::uint64_t local_visits = 0, local_explored = 0;

  auto check = [&] {
    if (g.rank == 1 && !sh.degenerate) {
      std::int64_t gg = n;
      for (auto x : a) gg = std::gcd(gg, x);
      if (gg != 1) return;
    }
    if (!is_canonical(g, a, s)) return;
    ++local_explored;
    if (within_diameter(g, a.data(), a.size(), sh.k, s, local_visits)) hits.push_back(a);
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (sh.aborted.load(std::memory_order_relaxed)) return;
    if (pos == a.size()) {
      check();
      return;
    }
    const std::int64_t lo = sh.degenerate ? a[pos - 1] : a[pos - 1] + 1;
    for (std::int64_t x = lo; x < n; ++x) {
      a[pos] = x;
      self(self, pos + 1);
      if (local_visits > 4096) {
        auto total = sh.visits.fetch_add(local_visits) + local_visits;
        local_visits = 0;
        if (total > sh.budget) sh.aborted.store(true);
      }
    }
  };
  rec(rec, 1);
  auto total = sh.visits.fetch_add(local_visits) + local_visits;
  if (total > sh.budget) sh.aborted.store(true);
  sh.explored.fetch_add(local_explored);
}

std::vector<std::vector<std::int64_t>> scan_group_serial(ScanShared& sh) {
  std::vector<std::vector<std::int64_t>> hits;
  Scratch s;
  const std::int64_t lo = sh.degenerate ? 0 : 1;
  for (std::int64_t first = lo; first < sh.group->order && !sh.aborted; ++first)
    scan_first(sh, first, s, hits);
  return hits;
}

}  // namespace detail

std::int64_t default_ceiling(int d, std::int64_t k) {
  if (d < 1 || k < 0) throw DomainError("search needs d >= 1 and k >= 0");
  Integer bound = lattice_point_bound(d, k);
  if (d == 3) bound = std::min(bound, fiduccia_bound(k));
  if (!bound.fits_slong_p()) throw InstanceTooLarge("default ceiling overflows");
  return bound.get_si();
}

namespace {

std::vector<Element> to_elements(const detail::GroupTable& g,
                                 const std::vector<std::int64_t>& idx) {
  std::vector<Element> out;
  for (auto x : idx) {
    Element e(g.rank == 0 ? 1 : g.rank, 0);
    for (std::size_t i = 0; i < g.rank; ++i)
      e[i] = g.coords[static_cast<std::size_t>(x) * g.rank + i];
    out.push_back(std::move(e));
  }
  return out;
}

SearchResult run_search(int d, std::int64_t k, std::int64_t upper, const SearchOptions& opts,
                        bool abelian) {
  if (d < 1 || k < 1) throw DomainError("search needs d >= 1 and k >= 1");
  SearchResult r;
  r.d = d;
  r.k = k;
  const std::int64_t proven = default_ceiling(d, k);
  r.ceiling = upper > 0 ? upper : proven;
  r.ceiling_proven = r.ceiling >= proven;

  for (std::int64_t n = r.ceiling; n >= 1; --n) {
    std::vector<std::vector<std::int64_t>> chains;
    if (abelian)
      chains = abelian_groups_of_order(n, static_cast<std::size_t>(d));
    else
      chains.push_back(n == 1 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{n});

    std::vector<Witness> found;
    bool aborted = false;
    for (const auto& chain : chains) {
      const auto table = detail::make_group_table(chain);
      detail::ScanShared sh;
      sh.group = &table;
      sh.d = static_cast<std::size_t>(d);
      sh.k = k;
      sh.degenerate = opts.allow_degenerate;
      sh.budget = opts.budget > r.visits ? opts.budget - r.visits : 0;
      auto hits = opts.threads == 1 ? detail::scan_group_serial(sh)
                                    : detail::scan_group_omp(sh, opts.threads);
      r.visits += sh.visits.load();
      r.explored += sh.explored.load();
      std::sort(hits.begin(), hits.end());
      AbelianGroupSpec spec(chain);
      for (const auto& h : hits) found.push_back(Witness{spec, to_elements(table, h)});
      if (sh.aborted.load()) {
        aborted = true;
        break;
      }
    }
    // Every larger order is already ruled out, so a hit here is the maximum
    // even if the budget ran out before all candidates at n were seen.
    if (!found.empty()) {
      r.best_order = n;
      if (found.size() > opts.max_witnesses) found.resize(opts.max_witnesses);
      r.witnesses = std::move(found);
      r.exhaustive = true;
      return r;
    }
    if (aborted) {
      r.exhaustive = false;
      return r;
    }
  }
  r.exhaustive = true;
  return r;
}

}  // namespace

SearchResult nc_search(int d, std::int64_t k, std::int64_t upper, const SearchOptions& opts) {
  return run_search(d, k, upper, opts, false);
}

SearchResult na_search(int d, std::int64_t k, std::int64_t upper, const SearchOptions& opts) {
  return run_search(d, k, upper, opts, true);
}

bool verify_witness(const CayleyDigraph& g, std::int64_t k) {
  auto p = explore(g);
  return p.complete() && static_cast<std::int64_t>(p.diameter) <= k;
}

std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n,
                                                               std::size_t max_rank) {
  if (n < 1) throw DomainError("group order must be positive");
  std::vector<std::vector<std::int64_t>> out;
  if (n == 1) {
    out.emplace_back();
    return out;
  }
  std::vector<std::int64_t> chain;
  // Each next factor is a multiple of the previous one, and what remains
  // must still be divisible by it.
  auto rec = [&](auto&& self, std::int64_t rest, std::int64_t prev) -> void {
    if (rest == 1) {
      out.push_back(chain);
      return;
    }
    if (chain.size() == max_rank) return;
    for (std::int64_t m = prev; m <= rest; m += prev) {
      if (m < 2 || rest % m != 0) continue;
      const std::int64_t left = rest / m;
      if (left != 1 && left % m != 0) continue;
      chain.push_back(m);
      self(self, left, m);
      chain.pop_back();
    }
  };
  rec(rec, n, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> multiplier_canonical(std::int64_t n, std::vector<std::int64_t> a) {
  if (n < 1) throw DomainError("modulus must be positive");
  for (auto& x : a) x = ((x % n) + n) % n;
  std::sort(a.begin(), a.end());
  auto best = a;
  std::vector<std::int64_t> img(a.size());
  for (std::int64_t u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    for (std::size_t i = 0; i < a.size(); ++i) img[i] = (a[i] * u) % n;
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  }
  return best;
}

}  // namespace abelcay
