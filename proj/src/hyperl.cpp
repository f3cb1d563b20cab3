#include "abelcay/hyperl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "abelcay/cayley.hpp"
#include "abelcay/errors.hpp"
#include "abelcay/lattice.hpp"

namespace abelcay {

std::int64_t l1_norm(std::span<const std::int64_t> x) {
  std::int64_t s = 0;
  for (auto v : x) s += v < 0 ? -v : v;
  return s;
}

namespace {

void summarize(HyperL& h) {
  h.max_norm = 0;
  h.max_attainers = 0;
  for (const auto& p : h.points) {
    auto k = static_cast<std::uint32_t>(l1_norm(p));
    if (k > h.max_norm) {
      h.max_norm = k;
      h.max_attainers = 0;
    }
    if (k == h.max_norm) ++h.max_attainers;
  }
}

}  // namespace

HyperL minimum_distance_diagram(const IntMatrix& m, std::uint64_t cap) {
  QuotientGroup q(m);
  if (q.order() > cap)
    throw InstanceTooLarge("|det M| = " + q.order().get_str() + " exceeds class cap " +
                           std::to_string(cap));
  const CayleyDigraph g = from_group(q);
  const std::size_t n = m.size();
  const std::uint64_t classes = g.order();

  std::vector<std::int64_t> rep(classes * n, 0);
  std::vector<std::int32_t> dist(classes, -1);
  std::vector<std::int64_t> coords(g.group().components());
  std::vector<std::int64_t> cand(n);
  std::vector<std::uint64_t> frontier{0}, next;
  dist[0] = 0;
  for (std::int32_t layer = 0; !frontier.empty(); ++layer) {
    next.clear();
    for (auto v : frontier) {
      g.decode(v, coords.data());
      const auto* base = &rep[v * n];
      for (std::size_t i = 0; i < n; ++i) {
        auto w = g.step(coords.data(), i);
        auto* slot = &rep[w * n];
        std::copy(base, base + n, cand.begin());
        ++cand[i];
        if (dist[w] < 0) {
          dist[w] = layer + 1;
          std::copy(cand.begin(), cand.end(), slot);
          next.push_back(w);
        } else if (dist[w] == layer + 1 &&
                   std::lexicographical_compare(cand.begin(), cand.end(), slot, slot + n)) {
          std::copy(cand.begin(), cand.end(), slot);
        }
      }
    }
    std::swap(frontier, next);
  }

  HyperL h;
  h.dimension = n;
  h.points.reserve(classes);
  for (std::uint64_t c = 0; c < classes; ++c)
    h.points.emplace_back(rep.begin() + static_cast<std::ptrdiff_t>(c * n),
                          rep.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
  summarize(h);
  return h;
}

bool staircase_member(std::span<const std::int64_t> x, std::int64_t n) {
  if (static_cast<std::int64_t>(x.size()) > n) return false;
  // at_least[v] = number of entries >= v
  std::vector<std::int64_t> at_least(static_cast<std::size_t>(n) + 1, 0);
  for (auto v : x) {
    if (v < 0 || v > n - 1) return false;
    ++at_least[static_cast<std::size_t>(v)];
  }
  for (std::int64_t v = n - 1; v > 0; --v)
    at_least[static_cast<std::size_t>(v - 1)] += at_least[static_cast<std::size_t>(v)];
  for (std::int64_t i = 1; i <= n - 1; ++i)
    if (at_least[static_cast<std::size_t>(n - i)] > i) return false;
  return true;
}

bool mn_membership(std::span<const std::int64_t> x, std::int64_t n) {
  if (static_cast<std::int64_t>(x.size()) != n)
    throw DimensionMismatch("membership test needs a vector of length n");
  return staircase_member(x, n);
}

Integer f_count(int m, int n) {
  if (m < 0 || n < 0 || m > n)
    throw DomainError("f(m, n) needs 0 <= m <= n, got m=" + std::to_string(m) +
                      " n=" + std::to_string(n));
  // table[j][i] = f(i, j)
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    auto& row = table[static_cast<std::size_t>(j)];
    row.assign(static_cast<std::size_t>(j) + 1, Integer(0));
    row[0] = 1;
    for (int i = 1; i <= j; ++i) {
      const int top = i < j ? i : i - 1;
      Integer sum = 0;
      for (int l = 0; l <= top; ++l) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i),
                     static_cast<unsigned long>(i - l));
        sum += binom * table[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l)];
      }
      row[static_cast<std::size_t>(i)] = sum;
    }
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

Rational f_closed_form(int m, int n) {
  if (m < 0 || n < 0 || m > n) throw DomainError("f(m, n) needs 0 <= m <= n");
  if (m == 0) return Rational(1);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n + 1),
                static_cast<unsigned long>(m - 1));
  return Rational(Integer(n - m + 1) * p);
}

HyperL mn_hyperl(int n, std::uint64_t cap) {
  if (n < 2) throw DomainError("mn_hyperl needs n >= 2");
  Integer classes;
  mpz_ui_pow_ui(classes.get_mpz_t(), static_cast<unsigned long>(n + 1),
                static_cast<unsigned long>(n - 1));
  if (classes > cap)
    throw InstanceTooLarge("(n+1)^(n-1) = " + classes.get_str() + " exceeds class cap " +
                           std::to_string(cap));
  HyperL h;
  h.dimension = static_cast<std::size_t>(n);
  LatticePoint x(static_cast<std::size_t>(n), 0);
  // Depth-first fill with the staircase test on each prefix.
  auto fill = [&](auto&& self, std::size_t pos) -> void {
    if (pos == x.size()) {
      h.points.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v < n; ++v) {
      x[pos] = v;
      if (staircase_member(std::span<const std::int64_t>(x.data(), pos + 1), n))
        self(self, pos + 1);
    }
    x[pos] = 0;
  };
  fill(fill, 0);
  summarize(h);
  return h;
}

DiameterWitness mnm_diameter_witness(int n, int m) {
  if (n < 2 || m < 1) throw DomainError("witness needs n >= 2, m >= 1");
  DiameterWitness w;
  for (int j = n; j >= 1; --j) w.witness.push_back(std::int64_t(m) * j - 1);
  w.diameter = std::int64_t(n) * (n + 1) / 2 * m - n;
  return w;
}

std::string to_csv(const HyperL& h) {
  std::ostringstream out;
  for (std::size_t i = 0; i < h.dimension; ++i) out << 'x' << i + 1 << ',';
  out << "norm\n";
  for (const auto& p : h.points) {
    for (auto v : p) out << v << ',';
    out << l1_norm(p) << '\n';
  }
  return out.str();
}

std::string render_ascii(const HyperL& h) {
  if (h.dimension != 2) throw DomainError("ASCII rendering is only defined for n = 2");
  std::int64_t w = 0, t = 0;
  for (const auto& p : h.points) {
    w = std::max(w, p[0]);
    t = std::max(t, p[1]);
  }
  std::vector<std::string> grid(static_cast<std::size_t>(t) + 1,
                                std::string(static_cast<std::size_t>(w) + 1, '.'));
  for (const auto& p : h.points)
    grid[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[0])] =
        l1_norm(p) == h.max_norm ? '@' : '#';
  std::ostringstream out;
  for (std::size_t r = grid.size(); r-- > 0;) out << grid[r] << '\n';
  return out.str();
}

}  // namespace abelcay
