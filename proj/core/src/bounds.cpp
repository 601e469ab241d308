#include "medeig/bounds.hpp"

#include <cmath>

namespace medeig {

namespace {

bool is_perfect_square(int x) {
  if (x < 0) return false;
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(x))));
  for (int c = std::max(0, r - 1); c <= r + 1; ++c)
    if (c * c == x) return true;
  return false;
}

BoundReport not_applicable(TheoremId id, std::string why) {
  BoundReport r;
  r.id = id;
  r.applicable = false;
  r.satisfied = true;
  r.notes = std::move(why);
  return r;
}

BoundReport finish(BoundReport r, double tol) {
  r.applicable = true;
  r.satisfied = r.slack >= -tol;
  return r;
}

double median_abs(const SpectralSummary& sum) {
  return std::max(std::abs(sum.lambda_h), std::abs(sum.lambda_l));
}

}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::MedianUpper: return "T1.1";
    case TheoremId::MedianLowerTriangleFree: return "T1.2";
    case TheoremId::MedianLowerSquare: return "T1.3";
    case TheoremId::MedianLowerLargeD: return "T1.4";
    case TheoremId::AvgEnergy: return "T1.5";
    case TheoremId::MedianEnergyCorollary: return "C1.6";
    case TheoremId::McClelland: return "T3.1";
    case TheoremId::MedianVsEnergy: return "T_median_energy";
  }
  return "?";
}

BoundReport check_median_upper(const Graph& g, const Spectrum& s, int d, double tol) {
  const TheoremId id = TheoremId::MedianUpper;
  if (d < 3) return not_applicable(id, "requires d >= 3");
  const DegreeSummary ds = degree_stats(g);
  if (ds.max_degree > d) return not_applicable(id, "max degree exceeds d");
  if (s.n() == 0) return not_applicable(id, "empty spectrum");
  BoundReport r;
  r.id = id;
  r.lhs = summarize(g, s).lambda_h;
  r.rhs = std::sqrt(static_cast<double>(d - 1));
  r.slack = r.rhs - r.lhs;
  r.notes = "max degree " + std::to_string(ds.max_degree) + " <= d = " + std::to_string(d);
  return finish(std::move(r), tol);
}

BoundReport check_median_lower_triangle_free(const Graph& g, const Spectrum& s, int d,
                                             double tol) {
  const TheoremId id = TheoremId::MedianLowerTriangleFree;
  if (d < 3) return not_applicable(id, "requires d >= 3");
  const DegreeSummary ds = degree_stats(g);
  if (ds.max_degree > d) return not_applicable(id, "max degree exceeds d");
  if (ds.triangle_count > 0) return not_applicable(id, "graph has triangles");
  if (s.n() == 0) return not_applicable(id, "empty spectrum");
  BoundReport r;
  r.id = id;
  r.lhs = summarize(g, s).lambda_l;
  r.rhs = -std::sqrt(static_cast<double>(d - 1));
  r.slack = r.lhs - r.rhs;
  r.notes = "triangle-free, max degree " + std::to_string(ds.max_degree) +
            " <= d = " + std::to_string(d);
  return finish(std::move(r), tol);
}

BoundReport check_median_lower_perfect_square(const Graph& g, const Spectrum& s, int d,
                                              double tol) {
  const TheoremId id = TheoremId::MedianLowerSquare;
  if (d < 2) return not_applicable(id, "requires d >= 2");
  if (!is_perfect_square(d - 1)) return not_applicable(id, "d-1 is not a perfect square");
  const DegreeSummary ds = degree_stats(g);
  // Exact rational comparison: 2|E| <= d * n.
  if (ds.avg_degree_num > static_cast<long long>(d) * ds.avg_degree_den)
    return not_applicable(id, "average degree exceeds d");
  if (s.n() == 0) return not_applicable(id, "empty spectrum");
  BoundReport r;
  r.id = id;
  r.lhs = summarize(g, s).lambda_l;
  r.rhs = -std::sqrt(static_cast<double>(d - 1));
  r.slack = r.lhs - r.rhs;
  r.notes = "average degree " + std::to_string(ds.avg_degree_num) + "/" +
            std::to_string(ds.avg_degree_den) + " <= d = " + std::to_string(d);
  return finish(std::move(r), tol);
}

BoundReport check_median_lower_large_d(const Graph& g, const Spectrum& s, int d, double tol) {
  const TheoremId id = TheoremId::MedianLowerLargeD;
  if (d < 75) return not_applicable(id, "requires d >= 75");
  const DegreeSummary ds = degree_stats(g);
  if (ds.max_degree > d) return not_applicable(id, "max degree exceeds d");
  if (s.n() == 0) return not_applicable(id, "empty spectrum");
  BoundReport r;
  r.id = id;
  r.lhs = summarize(g, s).lambda_l;
  r.rhs = -std::sqrt(static_cast<double>(d - 1));
  r.slack = r.lhs - r.rhs;
  r.notes = "d = " + std::to_string(d) + " >= 75";
  return finish(std::move(r), tol);
}

BoundReport check_mcclelland(const Graph& g, const Spectrum& s, double tol) {
  const TheoremId id = TheoremId::McClelland;
  BoundReport r;
  r.id = id;
  const DegreeSummary ds = degree_stats(g);
  const int n = s.n();
  const SpectralSummary sum = summarize(g, s);
  r.lhs = sum.avg_energy;
  r.rhs = std::sqrt(ds.average_degree());
  r.slack = r.rhs - r.lhs;

  // Equality holds exactly for the empty graph and for perfect matchings:
  // every component has at most 2 vertices (degree cap 1) and no isolated
  // vertices mix with edges (average degree 0 or 1).
  bool small_components = true;
  for (int v = 0; v < n && small_components; ++v)
    if (g.degree(v) > 1) small_components = false;
  const bool degree_uniform =
      ds.edge_count == 0 || 2 * static_cast<long long>(ds.edge_count) == n;
  r.equality_classified = small_components && degree_uniform;
  r.notes = *r.equality_classified ? "equality family (empty graph or perfect matching)"
                                   : "strict inequality expected";
  return finish(std::move(r), tol);
}

BoundReport check_avg_energy(const Graph& g, const Spectrum& s, int d, double tol) {
  const TheoremId id = TheoremId::AvgEnergy;
  if (d < 3) return not_applicable(id, "requires d >= 3");
  const DegreeSummary ds = degree_stats(g);
  if (ds.max_degree > d) return not_applicable(id, "max degree exceeds d");
  if (s.n() == 0) return not_applicable(id, "empty spectrum");
  const double e0 = std::sqrt(static_cast<double>(d - 1));
  BoundReport r;
  r.id = id;
  r.lhs = summarize(g, s).avg_energy;
  r.rhs = e0 + 1.0 / (d + e0);
  r.slack = r.rhs - r.lhs;
  r.notes = "max degree " + std::to_string(ds.max_degree) + " <= d = " + std::to_string(d);
  return finish(std::move(r), tol);
}

BoundReport check_median_vs_energy(const Graph& g, const Spectrum& s, double tol) {
  const TheoremId id = TheoremId::MedianVsEnergy;
  BoundReport r;
  r.id = id;
  const SpectralSummary sum = summarize(g, s);
  r.lhs = median_abs(sum);
  r.rhs = sum.avg_energy;
  r.slack = r.rhs - r.lhs;
  r.notes = "holds for every graph";
  return finish(std::move(r), tol);
}

BoundReport check_corollary(const Graph& g, const Spectrum& s, int d, double tol) {
  const TheoremId id = TheoremId::MedianEnergyCorollary;
  if (d < 3) return not_applicable(id, "requires d >= 3");
  const DegreeSummary ds = degree_stats(g);
  if (ds.max_degree > d) return not_applicable(id, "max degree exceeds d");
  if (s.n() == 0) return not_applicable(id, "empty spectrum");
  const double e0 = std::sqrt(static_cast<double>(d - 1));
  BoundReport r;
  r.id = id;
  r.lhs = median_abs(summarize(g, s));
  r.rhs = e0 + 1.0 / (d + e0);
  r.slack = r.rhs - r.lhs;
  r.notes = "max degree " + std::to_string(ds.max_degree) + " <= d = " + std::to_string(d);
  return finish(std::move(r), tol);
}

std::vector<BoundReport> check_all(const Graph& g, const Spectrum& s, int d, double tol) {
  std::vector<BoundReport> out;
  out.reserve(8);
  out.push_back(check_median_upper(g, s, d, tol));
  out.push_back(check_median_lower_triangle_free(g, s, d, tol));
  out.push_back(check_median_lower_perfect_square(g, s, d, tol));
  out.push_back(check_median_lower_large_d(g, s, d, tol));
  out.push_back(check_avg_energy(g, s, d, tol));
  out.push_back(check_corollary(g, s, d, tol));
  out.push_back(check_mcclelland(g, s, tol));
  out.push_back(check_median_vs_energy(g, s, tol));
  return out;
}

std::vector<BoundReport> check_all(const Graph& g, int d, double tol) {
  return check_all(g, eigenvalues(g), d, tol);
}

}  // namespace medeig
