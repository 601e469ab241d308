#include "medeig/polynomials.hpp"

#include <cmath>
#include <stdexcept>

namespace medeig {

namespace {

// Term-magnitude scale: evaluation error of either form is bounded by a few
// ulps of this, so it is the right yardstick near roots where both forms
// cancel to ~0.
double quartic_scale(double x, double a4, double a3, double a2, double a1, double a0) {
  const double ax = std::abs(x);
  return std::abs(a4) * ax * ax * ax * ax + std::abs(a3) * ax * ax * ax +
         std::abs(a2) * ax * ax + std::abs(a1) * ax + std::abs(a0) + 1.0;
}

}  // namespace

MagicPolynomial build_magic(int d) {
  if (d < 3) throw std::domain_error("magic polynomial: requires d >= 3");
  MagicPolynomial p;
  p.d = d;
  p.eps0 = std::sqrt(static_cast<double>(d - 1));
  const double e0 = p.eps0;
  p.alpha = (d * static_cast<double>(d) + 2.0 * d * e0 + 2.0 * e0 * e0) / (d + 2.0 * e0);
  p.c3 = p.alpha - (d + 2.0 * e0);
  p.c2 = p.alpha * (d + 2.0 * e0) - 2.0 * d * e0 - e0 * e0;
  p.c1 = p.alpha * (e0 * e0 + 2.0 * d * e0) - d * e0 * e0;
  p.c0 = p.alpha * d * e0 * e0;

  // Transcription check: the two forms must agree across [-d, alpha].
  for (int i = 0; i <= 20; ++i) {
    const double x = -d + (p.alpha + d) * i / 20.0;
    const double scale = quartic_scale(x, 1.0, p.c3, p.c2, p.c1, p.c0);
    if (std::abs(eval_magic(p, x) - eval_magic_product(p, x)) > 1e-9 * scale)
      throw std::logic_error("magic polynomial: coefficient and product forms disagree");
  }
  return p;
}

double eval_magic(const MagicPolynomial& p, double x) {
  return (((-x + p.c3) * x + p.c2) * x + p.c1) * x + p.c0;
}

double eval_magic_product(const MagicPolynomial& p, double x) {
  return (p.alpha - x) * (x + p.eps0) * (x + p.eps0) * (x + p.d);
}

MuDistribution mu_distribution(int d) {
  if (d < 2) throw std::domain_error("mu distribution: requires d >= 2");
  MuDistribution mu;
  mu.d = d;
  mu.eps0 = std::sqrt(static_cast<double>(d - 1));
  const double denom = 2.0 * (static_cast<double>(d) * d - d + 1);
  mu.p_extreme = 1.0 / denom;
  mu.p_inner = (static_cast<double>(d) * d - d) / denom;
  return mu;
}

std::array<double, 4> mu_moments(int d) {
  const MuDistribution mu = mu_distribution(d);
  const double dd = mu.d, e0 = mu.eps0;
  std::array<double, 4> m{};
  // Symmetric support points are paired so odd moments cancel exactly.
  double pd = 1.0, pe = 1.0;
  for (int k = 0; k < 4; ++k) {
    pd *= dd;
    pe *= e0;
    if (k % 2 == 0) {
      m[k] = (mu.p_extreme * -pd + mu.p_extreme * pd) + (mu.p_inner * -pe + mu.p_inner * pe);
    } else {
      m[k] = 2.0 * mu.p_extreme * pd + 2.0 * mu.p_inner * pe;
    }
  }
  return m;
}

double magic_mu_expectation(const MagicPolynomial& p) {
  const MuDistribution mu = mu_distribution(p.d);
  return mu.p_extreme * (eval_magic(p, -p.d) + eval_magic(p, p.d)) +
         mu.p_inner * (eval_magic(p, -p.eps0) + eval_magic(p, p.eps0));
}

EnergyPolynomial build_energy_poly(int d) {
  if (d < 2) throw std::domain_error("energy polynomial: requires d >= 2");
  EnergyPolynomial p;
  p.d = d;
  p.eps0 = std::sqrt(static_cast<double>(d - 1));
  const double e0 = p.eps0, dd = d;
  p.alpha_e = dd * dd + 3.0 * dd - 3.0 + 2.0 * dd * e0;
  p.beta = 2.0 * e0 * (dd + e0) * (dd + e0);
  p.gamma = dd * (dd - 1.0) * (dd + 2.0 * e0);

  for (int i = 0; i <= 10; ++i) {
    const double x = -(dd + 2.0 * e0) + (2.0 * dd + 2.0 * e0) * i / 10.0;
    const double a = eval_energy_poly(p, x);
    const double b = eval_energy_poly_product(p, x);
    const double scale = quartic_scale(x, 1.0, 0.0, p.alpha_e, p.beta, p.gamma);
    if (std::abs(a - b) > 1e-8 * scale)
      throw std::logic_error("energy polynomial: coefficient and product forms disagree");
  }
  return p;
}

double eval_energy_poly(const EnergyPolynomial& p, double x) {
  const double x2 = x * x;
  return x2 * x2 - p.alpha_e * x2 + p.beta * x - p.gamma;
}

double eval_energy_poly_product(const EnergyPolynomial& p, double x) {
  const double r = x - p.eps0;
  return (x - p.d) * r * r * (x + p.d + 2.0 * p.eps0);
}

double energy_bound_gap(int d, const Graph& g, const Spectrum& s) {
  if (d < 3) throw std::domain_error("energy bound: requires d >= 3");
  const DegreeSummary ds = degree_stats(g);
  if (ds.max_degree > d)
    throw std::invalid_argument("energy bound: graph exceeds the degree cap d");
  const int n = s.n();
  if (n == 0) throw std::invalid_argument("energy bound: empty spectrum");

  const EnergyPolynomial p = build_energy_poly(d);
  double lhs = 0.0, energy = 0.0;
  for (double x : s.values) {
    lhs += eval_energy_poly(p, std::abs(x));
    energy += std::abs(x);
  }
  lhs /= n;
  energy /= n;
  const double rhs = p.beta * (energy - p.eps0 - 1.0 / (d + p.eps0));
  return lhs - rhs;
}

}  // namespace medeig
