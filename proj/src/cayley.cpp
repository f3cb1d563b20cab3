#include "abelcay/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "abelcay/errors.hpp"

namespace abelcay {

namespace detail {
DistanceProfile bfs_layers_omp(const CayleyDigraph& g);
}

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 62;

std::int64_t reduce(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AbelianGroupSpec::AbelianGroupSpec(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) factors_.push_back(1);
  order_ = 1;
  for (auto m : factors_) {
    if (m < 1) throw DomainError("group factors must be positive");
    if (order_ > kMaxOrder / static_cast<std::uint64_t>(m))
      throw InstanceTooLarge("group order overflows");
    order_ *= static_cast<std::uint64_t>(m);
  }
}

AbelianGroupSpec AbelianGroupSpec::parse(std::string_view text) {
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  auto fail = [&] { return ParseError("bad group spec '" + std::string(text) + "'"); };
  for (;;) {
    if (pos >= text.size() || (text[pos] != 'Z' && text[pos] != 'z')) throw fail();
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 18) throw fail();
    factors.push_back(std::stoll(std::string(text.substr(start, pos - start))));
    if (factors.back() < 1) throw fail();
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X') throw fail();
    ++pos;
  }
  return AbelianGroupSpec(std::move(factors));
}

AbelianGroupSpec AbelianGroupSpec::sorted() const {
  auto f = factors_;
  std::sort(f.begin(), f.end());
  return AbelianGroupSpec(std::move(f));
}

std::vector<std::int64_t> AbelianGroupSpec::invariant_factors() const {
  // Prime-power exponents per prime across all factors.
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (auto m : factors_) {
    for (std::int64_t p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      std::int64_t q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (m > 1) powers[m].push_back(m);
  }
  std::size_t len = 0;
  for (auto& [p, qs] : powers) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    len = std::max(len, qs.size());
  }
  // The largest power of each prime goes to the last invariant factor.
  std::vector<std::int64_t> chain(len, 1);
  for (const auto& [p, qs] : powers)
    for (std::size_t i = 0; i < qs.size(); ++i) chain[len - 1 - i] *= qs[i];
  return chain;
}

std::string AbelianGroupSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += 'Z' + std::to_string(factors_[i]);
  }
  return s;
}

bool is_isomorphic_group(const AbelianGroupSpec& a, const AbelianGroupSpec& b) {
  return a.invariant_factors() == b.invariant_factors();
}

CayleyDigraph::CayleyDigraph(AbelianGroupSpec group, std::vector<Element> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("a Cayley digraph needs at least one generator");
  const auto& f = group_.factors();
  for (auto& x : generators_) {
    if (x.size() != f.size())
      throw DimensionMismatch("generator " + element_to_string(x) + " has " +
                              std::to_string(x.size()) + " components, group has " +
                              std::to_string(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) x[i] = reduce(x[i], f[i]);
  }
  stride_.assign(f.size(), 1);
  for (std::size_t i = f.size(); i-- > 1;)
    stride_[i - 1] = stride_[i] * static_cast<std::uint64_t>(f[i]);
}

std::uint64_t CayleyDigraph::index_of(const Element& x) const {
  const auto& f = group_.factors();
  if (x.size() != f.size()) throw DimensionMismatch("element has wrong length");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    idx += static_cast<std::uint64_t>(reduce(x[i], f[i])) * stride_[i];
  return idx;
}

Element CayleyDigraph::element_at(std::uint64_t index) const {
  Element x(group_.components());
  decode(index, x.data());
  return x;
}

void CayleyDigraph::decode(std::uint64_t index, std::int64_t* coords) const {
  const auto& f = group_.factors();
  for (std::size_t i = f.size(); i-- > 0;) {
    coords[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(f[i]));
    index /= static_cast<std::uint64_t>(f[i]);
  }
}

std::uint64_t CayleyDigraph::step(const std::int64_t* coords, std::size_t gen) const {
  const auto& f = group_.factors();
  const auto& a = generators_[gen];
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::int64_t c = coords[i] + a[i];
    if (c >= f[i]) c -= f[i];
    idx += static_cast<std::uint64_t>(c) * stride_[i];
  }
  return idx;
}

std::uint64_t CayleyDigraph::neighbor(std::uint64_t index, std::size_t gen) const {
  std::vector<std::int64_t> c(group_.components());
  decode(index, c.data());
  return step(c.data(), gen);
}

namespace detail {

// Serial reference kernel: level-by-level BFS from the identity.
DistanceProfile bfs_layers_serial(const CayleyDigraph& g) {
  const std::uint64_t n = g.order();
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<std::uint64_t> frontier{0}, next;
  std::vector<std::int64_t> coords(g.group().components());
  visited[0] = 1;
  DistanceProfile p;
  p.order = n;
  p.counts.push_back(1);
  while (!frontier.empty()) {
    next.clear();
    for (auto v : frontier) {
      g.decode(v, coords.data());
      for (std::size_t a = 0; a < g.degree(); ++a) {
        auto w = g.step(coords.data(), a);
        if (!visited[w]) {
          visited[w] = 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    p.counts.push_back(next.size());
    std::swap(frontier, next);
  }
  p.diameter = static_cast<std::uint32_t>(p.counts.size() - 1);
  for (auto c : p.counts) p.reachable += c;
  return p;
}

}  // namespace detail

namespace {

void check_bfs_size(const CayleyDigraph& g) {
  if (g.order() > (std::uint64_t(1) << 34))
    throw InstanceTooLarge("group order " + std::to_string(g.order()) +
                           " too large for BFS");
}

}  // namespace

DistanceProfile explore(const CayleyDigraph& g, Execution exec) {
  check_bfs_size(g);
  return exec == Execution::parallel ? detail::bfs_layers_omp(g)
                                     : detail::bfs_layers_serial(g);
}

DistanceProfile explore(const CayleyDigraph& g) {
  return explore(g, g.order() >= kParallelBfsThreshold ? Execution::parallel
                                                       : Execution::serial);
}

DistanceProfile distance_profile(const CayleyDigraph& g, Execution exec) {
  auto p = explore(g, exec);
  if (!p.complete()) throw NotGenerating(p.reachable, p.order);
  return p;
}

DistanceProfile distance_profile(const CayleyDigraph& g) {
  auto p = explore(g);
  if (!p.complete()) throw NotGenerating(p.reachable, p.order);
  return p;
}

std::vector<std::int32_t> distances(const CayleyDigraph& g) {
  check_bfs_size(g);
  std::vector<std::int32_t> dist(g.order(), -1);
  std::vector<std::uint64_t> queue{0};
  std::vector<std::int64_t> coords(g.group().components());
  dist[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto v = queue[head];
    g.decode(v, coords.data());
    for (std::size_t a = 0; a < g.degree(); ++a) {
      auto w = g.step(coords.data(), a);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> in_degrees(const CayleyDigraph& g) {
  check_bfs_size(g);
  std::vector<std::uint32_t> deg(g.order(), 0);
  std::vector<std::int64_t> coords(g.group().components());
  for (std::uint64_t v = 0; v < g.order(); ++v) {
    g.decode(v, coords.data());
    for (std::size_t a = 0; a < g.degree(); ++a) ++deg[g.step(coords.data(), a)];
  }
  return deg;
}

Rational density(const CayleyDigraph& g, const DistanceProfile& profile) {
  if (!profile.complete()) throw NotGenerating(profile.reachable, profile.order);
  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), profile.diameter + g.degree(), g.degree());
  Integer num;
  mpz_set_ui(num.get_mpz_t(), profile.order);
  Rational q(num, denom);
  q.canonicalize();
  return q;
}

std::string format_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  Integer r, rem;
  mpz_fdiv_qr(r.get_mpz_t(), rem.get_mpz_t(), scaled.get_num_mpz_t(),
              scaled.get_den_mpz_t());
  // Round half to even.
  const int c = cmp(2 * rem, scaled.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(r.get_mpz_t()))) ++r;
  std::string s = r.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (q < 0 ? "-" : "") + s;
}

CayleyDigraph from_group(const QuotientGroup& q) {
  const auto& snf = q.snf();
  const std::size_t n = q.dimension();
  std::vector<std::size_t> keep;
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < n; ++i) {
    if (snf.s[i] <= 1) continue;
    if (!snf.s[i].fits_slong_p()) throw InstanceTooLarge("invariant factor too large");
    keep.push_back(i);
    factors.push_back(snf.s[i].get_si());
  }
  std::vector<Element> gens;
  for (std::size_t j = 0; j < n; ++j) {
    Element x;
    for (auto i : keep) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), snf.u(i, j).get_mpz_t(), snf.s[i].get_mpz_t());
      x.push_back(r.get_si());
    }
    if (keep.empty()) x.push_back(0);
    gens.push_back(std::move(x));
  }
  return CayleyDigraph(AbelianGroupSpec(std::move(factors)), std::move(gens));
}

CayleyDigraph from_matrix(const IntMatrix& m) { return from_group(QuotientGroup(m)); }

std::string element_to_string(const Element& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::string to_dot(const CayleyDigraph& g) {
  if (g.order() > kDotMaxOrder)
    throw InstanceTooLarge("DOT export is limited to " + std::to_string(kDotMaxOrder) +
                           " vertices");
  std::ostringstream out;
  out << "digraph \"Cay(" << g.group().to_string() << ")\" {\n";
  for (std::uint64_t v = 0; v < g.order(); ++v)
    out << "  v" << v << " [label=\"" << element_to_string(g.element_at(v)) << "\"];\n";
  for (std::uint64_t v = 0; v < g.order(); ++v)
    for (std::size_t a = 0; a < g.degree(); ++a)
      out << "  v" << v << " -> v" << g.neighbor(v, a) << " [label=\"" << a << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace abelcay
