#include "medeig/graph.hpp"

#include <algorithm>

namespace medeig {

namespace {

constexpr long long kGraph6MaxOrder = 258048;  // 4-byte header limit

}  // namespace

Graph::Graph(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {
  const int n = order();
  std::size_t degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const auto& nb = adj_[v];
    degree_sum += nb.size();
    int prev = -1;
    for (int w : nb) {
      if (w < 0 || w >= n) throw std::invalid_argument("graph: neighbor index out of range");
      if (w == v) throw std::invalid_argument("graph: self-loops are not allowed");
      if (w <= prev) throw std::invalid_argument("graph: neighbor list not strictly sorted");
      prev = w;
    }
  }
  for (int v = 0; v < n; ++v)
    for (int w : adj_[v])
      if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v))
        throw std::invalid_argument("graph: adjacency is not symmetric");
  edge_count_ = degree_sum / 2;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("graph: negative order");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return Graph(std::move(adj));
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::from_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto next = [&]() -> long long {
    if (pos >= text.size()) throw ParseError("graph6: truncated input");
    const unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of printable range");
    return c - 63;
  };

  if (text.empty()) throw ParseError("graph6: empty input");
  long long n = next();
  if (n == 63) {  // '~': multi-byte order
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw UnsupportedError("graph6: orders >= 258048 are not supported");
    const long long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }

  const long long bits_needed = n * (n - 1) / 2;
  const long long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes_needed)
    throw ParseError("graph6: adjacency bit field has wrong length");

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  long long acc = 0;
  int have = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        acc = next();
        have = 6;
      }
      const int bit = static_cast<int>((acc >> (have - 1)) & 1);
      --have;
      if (bit) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  return Graph(std::move(adj));
}

std::string Graph::to_graph6() const {
  const long long n = order();
  if (n >= kGraph6MaxOrder)
    throw UnsupportedError("graph6: orders >= 258048 are not supported");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }

  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

DegreeSummary degree_stats(const Graph& g) {
  DegreeSummary s;
  const int n = g.order();
  s.edge_count = g.edge_count();
  for (int v = 0; v < n; ++v) s.max_degree = std::max(s.max_degree, g.degree(v));

  // Each triangle {u < v < w} is counted once, at its smallest edge (u, v).
  long long triangles = 0;
  for (int u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (int v : nu) {
      if (v <= u) continue;
      const auto& nv = g.neighbors(v);
      auto iu = std::upper_bound(nu.begin(), nu.end(), v);
      auto iv = std::upper_bound(nv.begin(), nv.end(), v);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          ++triangles;
          ++iu;
          ++iv;
        }
      }
    }
  }
  s.triangle_count = triangles;
  s.avg_degree_num = 2 * static_cast<long long>(s.edge_count);
  s.avg_degree_den = n > 0 ? n : 1;
  return s;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(a.edge_count() + b.edge_count());
  for (int u = 0; u < na; ++u)
    for (int v : a.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  for (int u = 0; u < nb; ++u)
    for (int v : b.neighbors(u))
      if (u < v) edges.emplace_back(na + u, na + v);
  return Graph::from_edge_list(na + nb, edges);
}

}  // namespace medeig
