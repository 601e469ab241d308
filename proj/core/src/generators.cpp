#include "medeig/generators.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "medeig/rng.hpp"

namespace medeig {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

// Polynomials over GF(p), ascending coefficients, trailing zeros trimmed.
using PPoly = std::vector<int>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, int p) {
  ptrim(a);
  while (a.size() >= m.size()) {
    const int lead = a.back() % p;
    const std::size_t shift = a.size() - m.size();
    // m is monic: subtract lead * m * x^shift
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p * p) % p;
    ptrim(a);
  }
  return a;
}

PPoly pmul(const PPoly& a, const PPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ptrim(c);
  return c;
}

}  // namespace

FieldSpec FieldSpec::for_order(int q) {
  if (q >= 2 && q <= 32 && is_prime(q)) {
    FieldSpec f{q, 1, q, {0, 1}};
    f.validate();
    return f;
  }
  static const std::array<FieldSpec, 7> table = {{
      {2, 2, 4, {1, 1, 1}},        // t^2 + t + 1
      {2, 3, 8, {1, 1, 0, 1}},     // t^3 + t + 1
      {3, 2, 9, {1, 0, 1}},        // t^2 + 1
      {2, 4, 16, {1, 1, 0, 0, 1}}, // t^4 + t + 1
      {5, 2, 25, {1, 1, 1}},       // t^2 + t + 1
      {3, 3, 27, {1, 2, 0, 1}},    // t^3 + 2t + 1
      {2, 5, 32, {1, 0, 1, 0, 0, 1}},  // t^5 + t^2 + 1
  }};
  for (const auto& f : table)
    if (f.q == q) {
      f.validate();
      return f;
    }
  throw UnsupportedError("finite field: order must be a prime power q <= 32");
}

void FieldSpec::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("finite field: characteristic is not prime");
  if (k < 1 || static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1)
    throw std::invalid_argument("finite field: modulus is not monic of degree k");
  int qq = 1;
  for (int i = 0; i < k; ++i) qq *= p;
  if (qq != q) throw std::invalid_argument("finite field: order does not match p^k");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("finite field: modulus coefficient out of range");

  // Exhaustive irreducibility check: no monic factor of degree 1..k/2.
  for (int deg = 1; 2 * deg <= k; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      PPoly candidate(deg + 1, 0);
      int c = code;
      for (int i = 0; i < deg; ++i) {
        candidate[i] = c % p;
        c /= p;
      }
      candidate[deg] = 1;
      if (pmod(modulus, candidate, p).empty())
        throw std::invalid_argument("finite field: modulus is reducible");
    }
  }
}

GaloisField::GaloisField(FieldSpec spec) : q_(spec.q) {
  spec.validate();
  const int p = spec.p, k = spec.k, q = spec.q;
  auto digits = [&](int x) {
    PPoly d(k, 0);
    for (int i = 0; i < k; ++i) {
      d[i] = x % p;
      x /= p;
    }
    ptrim(d);
    return d;
  };
  auto encode = [&](const PPoly& d) {
    int x = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
    return x;
  };
  add_.resize(static_cast<std::size_t>(q) * q);
  mul_.resize(static_cast<std::size_t>(q) * q);
  for (int x = 0; x < q; ++x) {
    const PPoly dx = digits(x);
    for (int y = 0; y < q; ++y) {
      const PPoly dy = digits(y);
      PPoly sum(std::max(dx.size(), dy.size()), 0);
      for (std::size_t i = 0; i < sum.size(); ++i) {
        int v = 0;
        if (i < dx.size()) v += dx[i];
        if (i < dy.size()) v += dy[i];
        sum[i] = v % p;
      }
      ptrim(sum);
      add_[static_cast<std::size_t>(x) * q + y] = encode(sum);
      mul_[static_cast<std::size_t>(x) * q + y] = encode(pmod(pmul(dx, dy, p), spec.modulus, p));
    }
  }
}

Graph projective_plane_incidence(int q) {
  const GaloisField field(FieldSpec::for_order(q));

  // Canonical projective representatives: first nonzero coordinate is 1.
  std::vector<std::array<int, 3>> classes;
  classes.reserve(static_cast<std::size_t>(q) * q + q + 1);
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) classes.push_back({1, y, z});
  for (int z = 0; z < q; ++z) classes.push_back({0, 1, z});
  classes.push_back({0, 0, 1});

  const int points = static_cast<int>(classes.size());  // q^2 + q + 1
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(points) * (q + 1));
  for (int pi = 0; pi < points; ++pi)
    for (int li = 0; li < points; ++li) {
      int dot = 0;
      for (int t = 0; t < 3; ++t)
        dot = field.add(dot, field.mul(classes[pi][t], classes[li][t]));
      if (dot == 0) edges.emplace_back(pi, points + li);
    }
  return Graph::from_edge_list(2 * points, edges);
}

Graph circulant(int n, std::span<const int> connection_set) {
  if (n <= 0) throw std::invalid_argument("circulant: order must be positive");
  std::set<int> s;
  for (int x : connection_set) {
    if (x <= 0 || x >= n)
      throw std::invalid_argument("circulant: residues must lie in 1..n-1");
    s.insert(x);
  }
  for (int x : s)
    if (!s.count(n - x))
      throw std::invalid_argument("circulant: connection set not closed under negation");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int x : s) edges.emplace_back(i, (i + x) % n);
  return Graph::from_edge_list(n, edges);
}

Graph circulant(int n, std::initializer_list<int> connection_set) {
  return circulant(n, std::span<const int>(connection_set.begin(), connection_set.size()));
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle: needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edge_list(k, edges);
}

Graph matching(int pairs) {
  if (pairs < 0) throw std::invalid_argument("matching: negative size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edge_list(2 * pairs, edges);
}

Graph empty_graph(int n) {
  if (n < 0) throw std::invalid_argument("empty graph: negative order");
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>{});
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("complete bipartite: negative part size");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, edges);
}

Graph triangle_union(int triangles, int single_edges) {
  if (triangles < 0 || single_edges < 0)
    throw std::invalid_argument("triangle union: negative count");
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < triangles; ++t) {
    const int base = 3 * t;
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base + 1, base + 2);
    edges.emplace_back(base, base + 2);
  }
  for (int e = 0; e < single_edges; ++e) {
    const int base = 3 * triangles + 2 * e;
    edges.emplace_back(base, base + 1);
  }
  return Graph::from_edge_list(3 * triangles + 2 * single_edges, edges);
}

namespace {

Graph random_capped(int n, int d, std::uint64_t seed, bool bipartite, int part_a) {
  // bipartite: u in [0, part_a), v in [part_a, n); otherwise draws over all pairs.
  if (n < 0) throw std::invalid_argument("random graph: negative order");
  if (d < 1) throw std::invalid_argument("random graph: degree cap must be >= 1");
  std::vector<std::vector<int>> adj(n);
  if ((bipartite && part_a > 0 && part_a < n) || (!bipartite && n >= 2)) {
    SplitMix64 rng(seed);
    const long long budget = 20LL * n * d;
    for (long long t = 0; t < budget; ++t) {
      int u, v;
      if (bipartite) {
        u = static_cast<int>(rng.uniform_below(part_a));
        v = part_a + static_cast<int>(rng.uniform_below(n - part_a));
      } else {
        u = static_cast<int>(rng.uniform_below(n));
        v = static_cast<int>(rng.uniform_below(n));
        if (u == v) continue;
      }
      if (static_cast<int>(adj[u].size()) >= d || static_cast<int>(adj[v].size()) >= d) continue;
      if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace

Graph random_bounded_degree(int n, int d, std::uint64_t seed) {
  return random_capped(n, d, seed, false, 0);
}

Graph random_bipartite(int a, int b, int d, std::uint64_t seed) {
  if (a < 0 || b < 0) throw std::invalid_argument("random bipartite: negative part size");
  return random_capped(a + b, d, seed, true, a);
}

}  // namespace medeig
