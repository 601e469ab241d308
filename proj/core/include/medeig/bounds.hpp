#pragma once

#include <optional>
#include <string>
#include <vector>

#include "medeig/graph.hpp"
#include "medeig/spectral.hpp"

namespace medeig {

enum class TheoremId {
  MedianUpper,            // T1.1: lambda_h <= sqrt(d-1), max degree d >= 3
  MedianLowerTriangleFree,// T1.2: lambda_l >= -sqrt(d-1), triangle-free
  MedianLowerSquare,      // T1.3: lambda_l >= -sqrt(d-1), d-1 a perfect square, average degree <= d
  MedianLowerLargeD,      // T1.4: lambda_l >= -sqrt(d-1), d >= 75
  AvgEnergy,              // T1.5: energy <= sqrt(d-1) + 1/(d+sqrt(d-1))
  MedianEnergyCorollary,  // C1.6: |median| <= sqrt(d-1) + 1/(d+sqrt(d-1))
  McClelland,             // T3.1: energy <= sqrt(average degree)
  MedianVsEnergy,         // |median| <= energy
};

const char* theorem_name(TheoremId id);  // "T1.1", ..., "T3.1", "T_median_energy"

constexpr double kSlackTol = 1e-8;

/// One executable inequality instance. The slack is oriented so that
/// satisfied <=> slack >= -tol regardless of the inequality's direction.
/// Inapplicable hypotheses yield vacuous satisfaction so corpus sweeps run
/// uniformly.
struct BoundReport {
  TheoremId id{};
  bool applicable = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = true;
  std::string notes;
  std::optional<bool> equality_classified;  // McClelland only
};

BoundReport check_median_upper(const Graph& g, const Spectrum& s, int d, double tol = kSlackTol);
BoundReport check_median_lower_triangle_free(const Graph& g, const Spectrum& s, int d,
                                             double tol = kSlackTol);
BoundReport check_median_lower_perfect_square(const Graph& g, const Spectrum& s, int d,
                                              double tol = kSlackTol);
BoundReport check_median_lower_large_d(const Graph& g, const Spectrum& s, int d,
                                       double tol = kSlackTol);
BoundReport check_mcclelland(const Graph& g, const Spectrum& s, double tol = kSlackTol);
BoundReport check_avg_energy(const Graph& g, const Spectrum& s, int d, double tol = kSlackTol);
BoundReport check_median_vs_energy(const Graph& g, const Spectrum& s, double tol = kSlackTol);
BoundReport check_corollary(const Graph& g, const Spectrum& s, int d, double tol = kSlackTol);

/// Runs every checker. A violation in the result indicates an artifact bug
/// (the theorems are proved); callers are expected to fail loudly on one.
std::vector<BoundReport> check_all(const Graph& g, const Spectrum& s, int d,
                                   double tol = kSlackTol);
std::vector<BoundReport> check_all(const Graph& g, int d, double tol = kSlackTol);

}  // namespace medeig
