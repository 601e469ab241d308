#pragma once

#include <string>
#include <vector>

#include "medeig/graph.hpp"
#include "medeig/spectral.hpp"

namespace medeig {

struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-d evaluation of the four-variable product bound at its stagewise
/// maximizer. certified means the maximum is strictly below 1.
struct CertificationRecord {
  int d = 0;
  int regime = 0;       // 1 for 75 <= d <= 139, 2 for d >= 140
  double eps0 = 0.0;    // sqrt(d-1)
  double eps1 = 0.0;    // sqrt(d-1) + 1/(d + sqrt(d-1))
  double delta = 0.0;
  double alpha_delta = 0.0;
  double z_star = 0.0;  // 1/(delta - eps0)^2
  double objective = 0.0;
  bool constraint_ok = false;  // alpha(delta)*(eps1-eps0) >= 1/5 and delta-eps0 >= sqrt(2)
  bool certified = false;      // objective < 1
  double margin = 0.0;         // 1 - objective
};

/// alpha(delta) = 2 eps0 (d+eps0)^2 / ((d-delta)(d + 2 eps0 + delta)),
/// defined for delta in (eps0, d).
double alpha_delta(int d, double delta);

/// The regime delta: solves alpha(delta)*(eps1-eps0) = 1/4 for 75 <= d <= 139
/// and = 1/5 for d >= 140, in closed form.
double delta_for_regime(int d);

/// The full four-variable objective
///   (2 eps0)^{x+y+z} ((eps0+eps1)/(2 eps0)) (eps-eps0)^x
///   (alpha(delta)(eps1-eps)/y)^{y/2} (d-eps0)^z
/// with the limit conventions: the y-factor is 1 at y = 0 and the whole
/// product vanishes at eps = eps0 or (eps = eps1, y > 0). Computed in the
/// log domain. Throws std::domain_error outside the constraint region.
double objective_full(int d, double delta, double eps, double x, double y, double z);

/// Stagewise closed form at the regime delta (x = 1/2, eps and y at their
/// maximizers, z = z*); the global maximum over the constraint region.
CertificationRecord objective_closed_form(int d);

/// One record per d in [d_lo, d_hi]; throws CertificationError if any record
/// fails to certify.
std::vector<CertificationRecord> certify_range(int d_lo, int d_hi);

/// The analytic three-factor chain for d >= 140:
///   (eps0+eps1)/sqrt(d+eps0) <= 2 + 1/444
///   sqrt(5)/(15/2 - 5 z*)^{3/4 - z*/2} <= 1/(2 + 1/40)
///   exp(ln(d-eps0)/(delta-eps0)^2) <= 111/110
/// and their product <= 889/891 < 1. Throws CertificationError on violation.
struct AsymptoticFactors {
  int d = 0;
  double z_star = 0.0;
  double factor_ratio = 0.0;
  double factor_z = 0.0;
  double factor_exp = 0.0;
  double product = 0.0;
  bool zstar_ok = false;  // z* <= 9/d^2
  bool ok = false;
};

AsymptoticFactors certify_asymptotic(int d);

/// Brute-force maximization of objective_full over the constraint region,
/// on a (resolution+1)^3 grid in (eps, y, z) with x collapsed to 1/2 after a
/// runtime monotone-decrease check over x in {1/2, 1, 2, 4}.
struct GridOracleResult {
  int d = 0;
  double delta = 0.0;
  int resolution = 0;
  double max_value = 0.0;
  double arg_eps = 0.0, arg_x = 0.0, arg_y = 0.0, arg_z = 0.0;
  bool below_one = false;
  bool x_decrease_verified = false;
};

GridOracleResult grid_oracle(int d, double delta, int resolution);

/// Sampled non-decrease checks for the helper monotonicity claims, each with
/// the instantiated parameter. Two of the lemmas need the regime delta
/// and are reported inapplicable for d < 75.
struct MonotonicityCheck {
  std::string name;
  bool applicable = false;
  bool condition_ok = false;  // the lemma's side condition on its parameters
  bool holds = false;
};

std::vector<MonotonicityCheck> monotonicity_lemmas(int d);

/// Log-domain evaluation of the factored product A * B_J * B_K * B_L on a
/// concrete graph, with the hypothesis-free inequality checks and the exact
/// witness comparison. Steps that assume the contradiction hypothesis
/// (lambda_l < -eps0) are reported but not checked.
struct DiagnosticCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  double slack = 0.0;
  std::string notes;
};

struct ProofDiagnostics {
  int d = 0;
  double delta = 0.0;
  int size_i = 0, size_j = 0, size_k = 0, size_l = 0;
  double log_a = 0.0, log_bj = 0.0, log_bk = 0.0, log_bl = 0.0;
  std::vector<DiagnosticCheck> checks;
};

ProofDiagnostics proof_diagnostics(const Graph& g, int d, double delta);

}  // namespace medeig
