#pragma once

#include <optional>
#include <vector>

#include "medeig/graph.hpp"
#include "medeig/intpoly.hpp"

namespace medeig {

/// Adjacency eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> values;

  int n() const noexcept { return static_cast<int>(values.size()); }
};

/// All eigenvalues of the adjacency matrix, via cyclic Jacobi rotations.
/// Deterministic sweep order; stops when the off-diagonal Frobenius norm
/// drops below 1e-13 times the Frobenius norm of the input.
Spectrum eigenvalues(const Graph& g);

/// Independent cross-check of the main eigensolver for n <= 64: roots of the
/// exact integer characteristic polynomial, isolated by Sturm sign counting
/// and refined by exact bisection.
Spectrum eigenvalues_oracle(const Graph& g);

/// Median indices are 1-indexed into the descending order, following the
/// convention h = floor((n+1)/2), l = ceil((n+1)/2).
struct SpectralSummary {
  int n = 0;
  int h = 0, l = 0;
  double lambda_h = 0.0, lambda_l = 0.0;
  double avg_energy = 0.0;
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
  long long triangle_count = 0;
};

SpectralSummary summarize(const Graph& g, const Spectrum& s);

/// Closed-walk identities: p1 = 0, p2 = 2|E|, p3 = 6*triangles, and the
/// fourth-moment lower bound p4 >= (2*avg^2 - avg)*n.
struct MomentReport {
  double p1_dev = 0.0;   // p1 - 0
  double p2_dev = 0.0;   // p2 - 2|E|
  double p3_dev = 0.0;   // p3 - 6*triangles
  double p4_slack = 0.0; // p4 - (2*avg^2 - avg)*n
  double tol = 0.0;      // 1e-6 * n * (max_degree + 1)^2
};

struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Returns the slacks; throws InconsistencyError naming the violated identity
/// if any deviation exceeds the tolerance.
MomentReport moment_report(const Graph& g, const Spectrum& s);

/// Integer characteristic polynomial det(xI - A), monic, ascending coefficients.
struct ExactCharPoly {
  ZPoly coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// Faddeev-LeVerrier over arbitrary-precision integers; every division by k
/// is exact on integer matrices and is verified. Capped at n <= 200.
ExactCharPoly char_poly_exact(const Graph& g);

/// The exact nonzero integer behind the proofs: with D = d-1, divide the
/// maximal power of (x^2 - D) out of the characteristic polynomial, and
/// evaluate the reduced polynomial R at +-sqrt(D) in Z[sqrt(D)].
///
///   witness   = R(sqrt(D)) * R(-sqrt(D)) = a^2 - D*b^2
///             = product over I of (lambda_i^2 - D),  I = {i : |lambda_i| != sqrt(D)}
///
/// When D is a perfect square the roots +sqrt(D) and -sqrt(D) are divided out
/// individually (their multiplicities may differ), and witness_b = R(-sqrt(D))
/// is additionally reported as a plain integer.
struct IntegralityWitness {
  int d = 0;
  int square_factor_multiplicity = 0;  // power of (x^2 - (d-1)) divided out
  int reduced_degree = 0;              // |I|
  BigInt witness;
  std::optional<BigInt> witness_b;     // set when d-1 is a perfect square
};

IntegralityWitness integrality_witness(const Graph& g, int d);
IntegralityWitness witness_from_char_poly(const ExactCharPoly& cp, int d);

}  // namespace medeig
