#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "medeig/graph.hpp"

namespace medeig {

/// Description of GF(p^k): characteristic, extension degree and the monic
/// irreducible modulus (ascending coefficients over GF(p)). Irreducibility is
/// re-verified at construction by exhaustive trial division, which is cheap
/// for every supported order q <= 32.
struct FieldSpec {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;

  /// Builtin table covering all prime powers q <= 32.
  static FieldSpec for_order(int q);

  void validate() const;
};

/// Finite field arithmetic over GF(q) with precomputed tables.
/// Elements are integers in [0, q) encoding polynomial coefficients base p.
class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec);

  int order() const noexcept { return q_; }
  int add(int x, int y) const { return add_[static_cast<std::size_t>(x) * q_ + y]; }
  int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x) * q_ + y]; }

 private:
  int q_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
};

/// Point-line incidence graph of PG(2, q): bipartite, (q+1)-regular, girth 6,
/// on 2(q^2+q+1) vertices. Points occupy vertices 0..q^2+q, lines the rest.
Graph projective_plane_incidence(int q);

/// Circulant graph: vertex i adjacent to i+s mod n for every s in the set.
/// The set must lie in 1..n-1 and be closed under negation mod n.
Graph circulant(int n, std::span<const int> connection_set);
Graph circulant(int n, std::initializer_list<int> connection_set);

Graph cycle_graph(int k);                    // k >= 3
Graph matching(int pairs);                   // `pairs` disjoint edges
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph triangle_union(int triangles, int single_edges);

/// Random graph with max degree <= d: uniform candidate edge draws with
/// rejection on caps and duplicates, attempt budget 20*n*d. Deterministic for
/// a fixed seed. No uniformity claim.
Graph random_bounded_degree(int n, int d, std::uint64_t seed);

/// Bipartite (hence triangle-free) variant on parts of size a and b.
Graph random_bipartite(int a, int b, int d, std::uint64_t seed);

}  // namespace medeig
