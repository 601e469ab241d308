#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "medeig/bounds.hpp"

namespace medeig::cli {

enum class Format { Text, Json, Csv };

/// Everything a subcommand needs; filled by the argument parser in main.cpp
/// and by tests directly.
struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;  // graph6 files; empty means stdin
  Format format = Format::Text;
  std::uint64_t seed = 0;
  int d = 3;
  int trials = 1000;
  std::optional<double> tolerance;  // slack tolerance override (default 1e-8)
  int threads = 0;                  // 0 = hardware concurrency

  // generate
  std::string family;
  int q = 2;
  int n = 12;
  int count = 1;
  int part_a = 5, part_b = 5;
  std::vector<int> connection_set;

  // spectrum
  bool with_eigenvalues = false;

  // certify
  int from_d = 75, to_d = 139;
  bool chain = false;
  bool oracle = false;
  int resolution = 200;

  // plot
  int samples = 500;

  // search
  std::string leaderboard_path;
  int top_k = 20;
  int max_n = 20;
};

double tol_of(const RunConfig& cfg);

// Exit codes: 0 = all checks pass, 1 = violation / certification failure,
// 2 = usage or IO error.
int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_spectrum(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int run_check(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int run_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_search(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

/// 0 when every report is satisfied, 1 otherwise. Factored out so the
/// violation path is testable (no real graph can violate a proved theorem).
int exit_code_from_reports(const std::vector<BoundReport>& reports);

/// One line per record, fixed JSON schema. Timestamps live only here, never
/// in the deterministic report streams.
struct LeaderboardEntry {
  std::string graph6;
  int n = 0;
  int d = 0;
  double lambda_h = 0.0, lambda_l = 0.0;
  double slack_upper = 0.0, slack_lower = 0.0;
  std::string timestamp;
};

std::vector<LeaderboardEntry> load_leaderboard(const std::string& path);
void save_leaderboard(const std::string& path, const std::vector<LeaderboardEntry>& entries);

/// Trimmed nonempty graph6 lines; tolerates the ">>graph6<<" file header.
std::vector<std::string> read_graph6_lines(std::istream& in);

}  // namespace medeig::cli
