#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace medeig {

using BigInt = mpz_class;

/// Integer polynomial, ascending coefficients, leading coefficient nonzero.
/// The empty vector is the zero polynomial.
using ZPoly = std::vector<BigInt>;

int poly_degree(const ZPoly& p);
void poly_trim(ZPoly& p);
ZPoly poly_derivative(const ZPoly& p);
ZPoly poly_mul(const ZPoly& a, const ZPoly& b);
BigInt poly_eval(const ZPoly& p, const BigInt& x);

/// Quotient and remainder of p by (x - r); the remainder equals p(r).
std::pair<ZPoly, BigInt> poly_divide_linear(const ZPoly& p, const BigInt& r);

/// Quotient and remainder (r1*x + r0) of p by (x^2 - s).
struct QuadRemainder {
  BigInt r1, r0;
};
std::pair<ZPoly, QuadRemainder> poly_divide_quadratic(const ZPoly& p, const BigInt& s);

/// Evaluation in the quadratic integer ring Z[sqrt(s)]: p(sqrt(s)) = a + b*sqrt(s).
struct QuadInt {
  BigInt a, b;
};
QuadInt poly_eval_at_sqrt(const ZPoly& p, const BigInt& s);

/// Yun square-free decomposition of a monic integer polynomial: pairwise
/// coprime monic factors f_i with multiplicities m_i such that p = prod f_i^{m_i}.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p);

/// Real roots (with multiplicity, ascending) of a monic integer polynomial.
/// Roots are isolated by exact Sturm-sequence sign counting and refined by
/// bisection in rational arithmetic; each returned value lies within
/// width_tol of the true root. Rational roots hit exactly are returned exactly.
std::vector<double> real_roots_exact(const ZPoly& p, double width_tol = 1e-12);

}  // namespace medeig
