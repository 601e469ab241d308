#include "medeig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace medeig {

namespace {

void jacobi_inplace(std::vector<double>& a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double norm2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) norm2 += a[k] * a[k];
  const double stop2 = norm2 * 1e-26;  // (1e-13 * ||A||_F)^2

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off2 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off2 += 2.0 * at(i, j) * at(i, j);
    if (off2 <= stop2) return;

    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = theta >= 0.0
                             ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                             : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
  }
}

}  // namespace

Spectrum eigenvalues(const Graph& g) {
  const int n = g.order();
  Spectrum s;
  if (n == 0) return s;
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) a[static_cast<std::size_t>(v) * n + w] = 1.0;
  jacobi_inplace(a, n);
  s.values.resize(n);
  for (int i = 0; i < n; ++i) s.values[i] = a[static_cast<std::size_t>(i) * n + i];
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

Spectrum eigenvalues_oracle(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw UnsupportedError("eigenvalues_oracle: order cap is 64");
  Spectrum s;
  if (n == 0) return s;
  const ExactCharPoly cp = char_poly_exact(g);
  std::vector<double> roots = real_roots_exact(cp.coeffs, 1e-12);
  if (static_cast<int>(roots.size()) != n)
    throw std::logic_error("eigenvalues_oracle: characteristic polynomial lost real roots");
  std::sort(roots.begin(), roots.end(), std::greater<>());
  s.values = std::move(roots);
  return s;
}

SpectralSummary summarize(const Graph& g, const Spectrum& s) {
  SpectralSummary r;
  const int n = s.n();
  r.n = n;
  r.triangle_count = degree_stats(g).triangle_count;
  if (n == 0) return r;
  r.h = (n + 1) / 2;
  r.l = (n + 2) / 2;
  r.lambda_h = s.values[r.h - 1];
  r.lambda_l = s.values[r.l - 1];
  double energy = 0.0;
  for (double x : s.values) {
    const double x2 = x * x;
    r.p1 += x;
    r.p2 += x2;
    r.p3 += x2 * x;
    r.p4 += x2 * x2;
    energy += std::abs(x);
  }
  r.avg_energy = energy / n;
  return r;
}

MomentReport moment_report(const Graph& g, const Spectrum& s) {
  const DegreeSummary ds = degree_stats(g);
  const int n = s.n();
  MomentReport r;
  r.tol = 1e-6 * n * static_cast<double>(ds.max_degree + 1) * (ds.max_degree + 1);
  if (n == 0) return r;

  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
  for (double x : s.values) {
    const double x2 = x * x;
    p1 += x;
    p2 += x2;
    p3 += x2 * x;
    p4 += x2 * x2;
  }
  const double dbar = ds.average_degree();
  r.p1_dev = p1;
  r.p2_dev = p2 - 2.0 * static_cast<double>(ds.edge_count);
  r.p3_dev = p3 - 6.0 * static_cast<double>(ds.triangle_count);
  r.p4_slack = p4 - (2.0 * dbar * dbar - dbar) * n;

  if (std::abs(r.p1_dev) > r.tol)
    throw InconsistencyError("moment identity violated: sum of eigenvalues is not 0");
  if (std::abs(r.p2_dev) > r.tol)
    throw InconsistencyError("moment identity violated: sum of squares is not 2|E|");
  if (std::abs(r.p3_dev) > r.tol)
    throw InconsistencyError("moment identity violated: sum of cubes is not 6*triangles");
  if (r.p4_slack < -r.tol)
    throw InconsistencyError("moment inequality violated: fourth power sum below (2d^2-d)n");
  return r;
}

ExactCharPoly char_poly_exact(const Graph& g) {
  const int n = g.order();
  if (n > 200) throw UnsupportedError("char_poly_exact: order cap is 200");
  ZPoly c(static_cast<std::size_t>(n) + 1);
  c[n] = 1;
  if (n == 0) return {std::move(c)};

  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<BigInt> m(nn * nn), prod(nn * nn);
  for (int i = 0; i < n; ++i) m[i * nn + i] = 1;

  for (int k = 1; k <= n; ++k) {
    // prod = A * m; row i of prod is the sum of m's rows over the neighbors of i
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) prod[i * nn + j] = 0;
      for (int w : g.neighbors(i))
        for (int j = 0; j < n; ++j) prod[i * nn + j] += m[w * nn + j];
    }
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += prod[i * nn + i];
    BigInt ck = -trace / k;
    if (ck * k != -trace)
      throw std::logic_error("char_poly_exact: non-exact division in Faddeev-LeVerrier");
    c[n - k] = ck;
    if (k < n) {
      m.swap(prod);
      for (int i = 0; i < n; ++i) m[i * nn + i] += c[n - k];
    }
  }

  if (c[n - 1] != 0)
    throw std::logic_error("char_poly_exact: trace coefficient is nonzero");
  if (n >= 2 && c[n - 2] != -BigInt(static_cast<unsigned long>(g.edge_count())))
    throw std::logic_error("char_poly_exact: x^(n-2) coefficient disagrees with edge count");
  return {std::move(c)};
}

IntegralityWitness witness_from_char_poly(const ExactCharPoly& cp, int d) {
  if (d < 2) throw std::invalid_argument("integrality witness: requires d >= 2");
  IntegralityWitness w;
  w.d = d;
  const BigInt big_d(d - 1);
  ZPoly reduced = cp.coeffs;

  if (mpz_perfect_square_p(big_d.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), big_d.get_mpz_t());
    int mult_plus = 0, mult_minus = 0;
    for (;;) {
      auto [q, rem] = poly_divide_linear(reduced, root);
      if (rem != 0 || q.empty()) break;
      reduced = std::move(q);
      ++mult_plus;
    }
    const BigInt neg_root = -root;
    for (;;) {
      auto [q, rem] = poly_divide_linear(reduced, neg_root);
      if (rem != 0 || q.empty()) break;
      reduced = std::move(q);
      ++mult_minus;
    }
    w.square_factor_multiplicity = std::min(mult_plus, mult_minus);
    const BigInt at_plus = poly_eval(reduced, root);
    BigInt at_minus = poly_eval(reduced, neg_root);
    w.witness = at_plus * at_minus;
    w.witness_b = std::move(at_minus);
  } else {
    for (;;) {
      auto [q, rem] = poly_divide_quadratic(reduced, big_d);
      if (rem.r1 != 0 || rem.r0 != 0 || q.empty()) break;
      reduced = std::move(q);
      ++w.square_factor_multiplicity;
    }
    const QuadInt v = poly_eval_at_sqrt(reduced, big_d);
    w.witness = v.a * v.a - big_d * v.b * v.b;
  }

  w.reduced_degree = poly_degree(reduced);
  if (w.witness == 0)
    throw std::logic_error("integrality witness: vanished despite maximal division");
  return w;
}

IntegralityWitness integrality_witness(const Graph& g, int d) {
  return witness_from_char_poly(char_poly_exact(g), d);
}

}  // namespace medeig
