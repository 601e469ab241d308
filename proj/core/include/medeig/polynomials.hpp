#pragma once

#include <array>

#include "medeig/graph.hpp"
#include "medeig/spectral.hpp"

namespace medeig {

/// The quartic f(x) = (alpha - x)(x + eps0)^2 (x + d) with eps0 = sqrt(d-1)
/// and alpha chosen so that f(eps0) = f(d). Stored both ways: Viete
/// coefficients (f = -x^4 + c3 x^3 + c2 x^2 + c1 x + c0) and the product
/// form; construction cross-checks the two on a fixed grid.
struct MagicPolynomial {
  int d = 0;
  double eps0 = 0.0;
  double alpha = 0.0;
  double c3 = 0.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;
};

MagicPolynomial build_magic(int d);  // d >= 3

double eval_magic(const MagicPolynomial& p, double x);          // coefficient form
double eval_magic_product(const MagicPolynomial& p, double x);  // product form

/// Four-point distribution on {+-d, +-sqrt(d-1)} matching the spectrum of a
/// projective-plane incidence graph of order d-1.
struct MuDistribution {
  int d = 0;
  double eps0 = 0.0;
  double p_extreme = 0.0;  // mass at each of -d, d
  double p_inner = 0.0;    // mass at each of -eps0, eps0
};

MuDistribution mu_distribution(int d);  // d >= 2

/// First four moments (E mu, E mu^2, E mu^3, E mu^4), computed literally from
/// the distribution; they equal (0, d, 0, d(2d-1)).
std::array<double, 4> mu_moments(int d);

/// Expectation of the magic polynomial under mu; equals f(d)/2.
double magic_mu_expectation(const MagicPolynomial& p);

/// The quartic (x - d)(x - sqrt(d-1))^2 (x + d + 2 sqrt(d-1)) expanded as
/// x^4 - alpha_e x^2 + beta x - gamma (no cubic term).
struct EnergyPolynomial {
  int d = 0;
  double eps0 = 0.0;
  double alpha_e = 0.0, beta = 0.0, gamma = 0.0;
};

EnergyPolynomial build_energy_poly(int d);  // d >= 2

double eval_energy_poly(const EnergyPolynomial& p, double x);
double eval_energy_poly_product(const EnergyPolynomial& p, double x);

/// LHS minus RHS of the per-graph average-energy inequality
///   (1/n) sum f(|lambda_i|) >= 2 sqrt(d-1) (d + sqrt(d-1))^2
///                              * (energy - sqrt(d-1) - 1/(d + sqrt(d-1))).
/// Nonnegative (within 1e-8) for every graph of maximum degree <= d.
double energy_bound_gap(int d, const Graph& g, const Spectrum& s);

}  // namespace medeig
