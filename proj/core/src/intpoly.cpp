#include "medeig/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace medeig {

int poly_degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void poly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly poly_derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

BigInt poly_eval(const ZPoly& p, const BigInt& x) {
  BigInt r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

std::pair<ZPoly, BigInt> poly_divide_linear(const ZPoly& p, const BigInt& r) {
  if (p.empty()) return {ZPoly{}, BigInt(0)};
  ZPoly q(p.size() - 1);
  BigInt carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  BigInt rem = carry * r + p[0];
  poly_trim(q);
  return {std::move(q), std::move(rem)};
}

std::pair<ZPoly, QuadRemainder> poly_divide_quadratic(const ZPoly& p, const BigInt& s) {
  // p = q * (x^2 - s) + r1*x + r0
  if (p.size() <= 2) {
    QuadRemainder rem{p.size() > 1 ? p[1] : BigInt(0), p.empty() ? BigInt(0) : p[0]};
    return {ZPoly{}, std::move(rem)};
  }
  ZPoly q(p.size() - 2, BigInt(0));
  ZPoly work = p;
  for (std::size_t i = work.size(); i-- > 2;) {
    q[i - 2] = work[i];
    work[i - 2] += work[i] * s;
    work[i] = 0;
  }
  poly_trim(q);
  QuadRemainder rem{work[1], work[0]};
  return {std::move(q), std::move(rem)};
}

QuadInt poly_eval_at_sqrt(const ZPoly& p, const BigInt& s) {
  // Horner over pairs (a, b) representing a + b*sqrt(s).
  QuadInt v{0, 0};
  for (std::size_t i = p.size(); i-- > 0;) {
    // multiply by sqrt(s): (a + b sqrt(s)) * sqrt(s) = b*s + a*sqrt(s)
    BigInt na = v.b * s + p[i];
    BigInt nb = v.a;
    v.a = std::move(na);
    v.b = std::move(nb);
  }
  return v;
}

namespace {

// ---- rational polynomial helpers (exact arithmetic for gcd / Sturm) ----

using Q = mpq_class;
using QPoly = std::vector<Q>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly to_q(const ZPoly& p) {
  QPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = Q(p[i]);
  return r;
}

QPoly qderiv(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Q(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

QPoly qmonic(QPoly p) {
  if (p.empty()) return p;
  const Q lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly qrem(QPoly a, const QPoly& b) {
  qtrim(a);
  while (qdeg(a) >= qdeg(b) && !a.empty()) {
    const Q factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.back() = 0;  // kill rounding-free leading term exactly
    qtrim(a);
  }
  return a;
}

QPoly qdiv_exact(const QPoly& a, const QPoly& b) {
  QPoly rem = a;
  qtrim(rem);
  QPoly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Q(0));
  while (qdeg(rem) >= qdeg(b) && !rem.empty()) {
    const Q factor = rem.back() / b.back();
    const std::size_t shift = rem.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    rem.back() = 0;
    qtrim(rem);
  }
  if (!rem.empty()) throw std::logic_error("intpoly: division expected to be exact");
  qtrim(q);
  return q;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return qmonic(std::move(a));
}

ZPoly to_z_exact(const QPoly& p) {
  ZPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1)
      throw std::logic_error("intpoly: expected integral polynomial");
    r[i] = p[i].get_num();
  }
  return r;
}

// Scale a rational polynomial by a positive rational so it becomes a
// primitive integer polynomial. Positive scaling preserves all signs, which
// is the only property Sturm counting needs.
ZPoly to_z_primitive(const QPoly& p) {
  if (p.empty()) return {};
  mpz_class lcm_den = 1;
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly r(p.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpq_class scaled = p[i] * Q(lcm_den);
    r[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& c : r) c /= content;
  return r;
}

int sign_of(const mpz_class& x) { return mpz_sgn(x.get_mpz_t()); }

// Exact sign of an integer polynomial at a rational point u/v (v > 0).
int sign_at(const ZPoly& p, const Q& x) {
  if (p.empty()) return 0;
  const mpz_class& u = x.get_num();
  const mpz_class& v = x.get_den();
  mpz_class r = p.back(), vp = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    vp *= v;
    r = r * u + p[i] * vp;
  }
  return sign_of(r);
}

struct SturmChain {
  std::vector<ZPoly> seq;

  explicit SturmChain(const ZPoly& squarefree) {
    QPoly s0 = to_q(squarefree);
    QPoly s1 = qderiv(s0);
    seq.push_back(to_z_primitive(s0));
    while (!s1.empty()) {
      seq.push_back(to_z_primitive(s1));
      QPoly r = qrem(s0, s1);
      for (auto& c : r) c = -c;
      s0 = std::move(s1);
      s1 = std::move(r);
    }
  }

  int sign_changes(const Q& x) const {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
      const int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  // Number of distinct roots in the half-open interval (a, b].
  int count_in(const Q& a, const Q& b) const { return sign_changes(a) - sign_changes(b); }
};

struct RootCollector {
  const ZPoly& poly;
  const SturmChain& chain;
  Q tol;
  std::vector<double>* out;

  void refine(Q lo, Q hi) {
    // exactly one root in (lo, hi]
    if (sign_at(poly, hi) == 0) {
      out->push_back(Q(hi).get_d());
      return;
    }
    int slo = sign_at(poly, lo);
    const int shi = sign_at(poly, hi);
    const bool sign_bisect = (slo != 0 && slo != shi);
    while (hi - lo >= tol) {
      Q mid = (lo + hi) / 2;
      const int smid = sign_at(poly, mid);
      if (smid == 0) {
        out->push_back(mid.get_d());
        return;
      }
      if (sign_bisect) {
        if (smid == slo) {
          lo = std::move(mid);
        } else {
          hi = std::move(mid);
        }
      } else {
        if (chain.count_in(lo, mid) == 1) {
          hi = std::move(mid);
        } else {
          lo = std::move(mid);
        }
      }
    }
    out->push_back(Q((lo + hi) / 2).get_d());
  }

  void isolate(const Q& lo, const Q& hi, int count) {
    if (count <= 0) return;
    if (count == 1) {
      refine(lo, hi);
      return;
    }
    const Q mid = (lo + hi) / 2;
    const int left = chain.count_in(lo, mid);
    isolate(lo, mid, left);
    isolate(mid, hi, count - left);
  }
};

void roots_of_squarefree(const ZPoly& f, double width_tol, std::vector<double>& out) {
  const int deg = poly_degree(f);
  if (deg <= 0) return;
  if (deg == 1) {
    out.push_back(Q(Q(-f[0]) / Q(f[1])).get_d());
    return;
  }
  SturmChain chain(f);
  mpz_class bound = 1;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    mpz_class a = abs(f[i]);
    if (a > bound) bound = a;
  }
  bound += 1;  // Cauchy bound for monic f, padded
  const Q lo = Q(-bound), hi = Q(bound);
  RootCollector rc{f, chain, Q(width_tol), &out};
  rc.isolate(lo, hi, chain.count_in(lo, hi));
}

}  // namespace

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
  if (p.empty() || p.back() != 1)
    throw std::invalid_argument("squarefree decomposition: polynomial must be monic");
  std::vector<std::pair<ZPoly, int>> out;
  if (poly_degree(p) == 0) return out;

  QPoly f = to_q(p);
  QPoly fp = qderiv(f);
  QPoly g = qgcd(f, fp);
  if (qdeg(g) == 0) {
    out.emplace_back(p, 1);
    return out;
  }
  QPoly a = qdiv_exact(f, g);
  QPoly b = qdiv_exact(fp, g);
  QPoly c = qsub(std::move(b), qderiv(a));
  for (int i = 1; qdeg(a) > 0; ++i) {
    QPoly pi = qgcd(a, c);
    if (pi.empty()) pi = QPoly{Q(1)};
    if (qdeg(pi) > 0) out.emplace_back(to_z_exact(pi), i);
    a = qdiv_exact(a, pi);
    b = qdiv_exact(c, pi);
    c = qsub(std::move(b), qderiv(a));
  }
  return out;
}

std::vector<double> real_roots_exact(const ZPoly& p, double width_tol) {
  if (p.empty() || p.back() != 1)
    throw std::invalid_argument("real roots: polynomial must be monic");
  std::vector<double> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    std::vector<double> part;
    roots_of_squarefree(factor, width_tol, part);
    for (double r : part)
      for (int i = 0; i < mult; ++i) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace medeig
