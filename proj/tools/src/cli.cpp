#include "cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "medeig/certification.hpp"
#include "medeig/generators.hpp"
#include "medeig/polynomials.hpp"
#include "medeig/rng.hpp"
#include "medeig/spectral.hpp"

namespace medeig::cli {

using nlohmann::json;

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

/// Runs work(0..count-1) on a small pool; results must be written to
/// per-index slots so callers can emit them in input order.
template <typename Work>
void parallel_indexed(std::size_t count, int threads, Work&& work) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp<int>(threads, 1, count > 0 ? static_cast<int>(count) : 1);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) work(i);
    });
  for (auto& th : pool) th.join();
}

struct LineSource {
  std::string text;
  std::size_t line_no;
};

/// Collects graph6 lines from the configured files, or from `in` when no
/// files were given. Throws std::ios_base::failure on unreadable files.
std::vector<LineSource> collect_input_lines(const RunConfig& cfg, std::istream& in) {
  std::vector<LineSource> lines;
  auto drain = [&lines](std::istream& s) {
    std::string raw;
    std::size_t no = 0;
    while (std::getline(s, raw)) {
      ++no;
      std::string t = trim(raw);
      if (t.rfind(">>graph6<<", 0) == 0) t = t.substr(10);
      if (!t.empty()) lines.push_back({std::move(t), no});
    }
  };
  if (cfg.inputs.empty()) {
    drain(in);
  } else {
    for (const auto& path : cfg.inputs) {
      if (path == "-") {
        drain(in);
        continue;
      }
      std::ifstream f(path);
      if (!f) throw std::ios_base::failure("cannot open input file: " + path);
      drain(f);
    }
  }
  return lines;
}

json report_to_json(const BoundReport& r, const RunConfig& cfg) {
  json j{{"theorem_id", theorem_name(r.id)},
         {"applicable", r.applicable},
         {"satisfied", r.satisfied},
         {"notes", r.notes}};
  if (r.applicable) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
  }
  if (r.equality_classified) j["equality_classified"] = *r.equality_classified;
  if (cfg.tolerance) j["tolerance"] = *cfg.tolerance;
  return j;
}

}  // namespace

double tol_of(const RunConfig& cfg) {
  if (cfg.tolerance) {
    if (*cfg.tolerance <= 0.0) throw std::invalid_argument("tolerance override must be positive");
    return *cfg.tolerance;
  }
  return kSlackTol;
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string t = trim(raw);
    if (t.rfind(">>graph6<<", 0) == 0) t = t.substr(10);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

int exit_code_from_reports(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports)
    if (!r.satisfied) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Graph> graphs;
  const std::string& fam = cfg.family;
  try {
    if (fam == "plane") {
      graphs.push_back(projective_plane_incidence(cfg.q));
    } else if (fam == "circulant") {
      // close the set under negation so `--set 3,4,6` means {±3, ±4, 6}
      std::vector<int> closed = cfg.connection_set;
      for (int s : cfg.connection_set)
        if (s % cfg.n != 0) closed.push_back(cfg.n - (s % cfg.n));
      graphs.push_back(circulant(cfg.n, closed));
    } else if (fam == "cycle") {
      graphs.push_back(cycle_graph(cfg.n));
    } else if (fam == "matching") {
      graphs.push_back(matching(cfg.n));
    } else if (fam == "empty") {
      graphs.push_back(empty_graph(cfg.n));
    } else if (fam == "complete-bipartite") {
      graphs.push_back(complete_bipartite(cfg.part_a, cfg.part_b));
    } else if (fam == "triangle-union") {
      graphs.push_back(triangle_union(cfg.part_a, cfg.part_b));
    } else if (fam == "random") {
      for (int i = 0; i < cfg.count; ++i)
        graphs.push_back(random_bounded_degree(cfg.n, cfg.d, SplitMix64::derive(cfg.seed, i)));
    } else if (fam == "bipartite") {
      for (int i = 0; i < cfg.count; ++i)
        graphs.push_back(
            random_bipartite(cfg.part_a, cfg.part_b, cfg.d, SplitMix64::derive(cfg.seed, i)));
    } else {
      err << "generate: unknown family '" << fam << "'\n";
      return 2;
    }
  } catch (const std::exception& e) {
    err << "generate: " << e.what() << "\n";
    return 2;
  }
  for (const auto& g : graphs) out << g.to_graph6() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

int run_spectrum(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<LineSource> lines;
  try {
    lines = collect_input_lines(cfg, in);
  } catch (const std::exception& e) {
    err << "spectrum: " << e.what() << "\n";
    return 2;
  }

  if (cfg.format == Format::Csv) {
    if (cfg.tolerance) out << "# tolerance " << fmt(*cfg.tolerance) << "\n";
    out << "index,n,edges,max_degree,avg_degree,h,l,lambda_h,lambda_l,avg_energy,"
           "p1,p2,p3,p4,error\n";
  }

  std::vector<std::string> rows(lines.size());
  parallel_indexed(lines.size(), cfg.threads, [&](std::size_t i) {
    std::ostringstream row;
    try {
      const Graph g = Graph::from_graph6(lines[i].text);
      const Spectrum s = eigenvalues(g);
      const SpectralSummary sum = summarize(g, s);
      const DegreeSummary ds = degree_stats(g);
      const MomentReport mr = moment_report(g, s);
      switch (cfg.format) {
        case Format::Json: {
          json j{{"index", i},
                 {"n", sum.n},
                 {"edges", ds.edge_count},
                 {"max_degree", ds.max_degree},
                 {"avg_degree", ds.average_degree()},
                 {"h", sum.h},
                 {"l", sum.l},
                 {"lambda_h", sum.lambda_h},
                 {"lambda_l", sum.lambda_l},
                 {"avg_energy", sum.avg_energy},
                 {"moments",
                  {{"p1", sum.p1},
                   {"p2", sum.p2},
                   {"p3", sum.p3},
                   {"p4", sum.p4},
                   {"p1_dev", mr.p1_dev},
                   {"p2_dev", mr.p2_dev},
                   {"p3_dev", mr.p3_dev},
                   {"p4_slack", mr.p4_slack},
                   {"tol", mr.tol}}}};
          if (cfg.with_eigenvalues) j["eigenvalues"] = s.values;
          if (cfg.tolerance) j["tolerance"] = *cfg.tolerance;
          row << j.dump() << "\n";
          break;
        }
        case Format::Csv:
          row << i << "," << sum.n << "," << ds.edge_count << "," << ds.max_degree << ","
              << fmt(ds.average_degree()) << "," << sum.h << "," << sum.l << ","
              << fmt(sum.lambda_h) << "," << fmt(sum.lambda_l) << "," << fmt(sum.avg_energy)
              << "," << fmt(sum.p1) << "," << fmt(sum.p2) << "," << fmt(sum.p3) << ","
              << fmt(sum.p4) << ",\n";
          break;
        case Format::Text:
          row << "graph " << i << ": n=" << sum.n << " edges=" << ds.edge_count
              << " median=(" << fmt(sum.lambda_h) << ", " << fmt(sum.lambda_l)
              << ") avg_energy=" << fmt(sum.avg_energy) << "\n";
          if (cfg.with_eigenvalues) {
            row << "  eigenvalues:";
            for (double v : s.values) row << " " << fmt(v);
            row << "\n";
          }
          break;
      }
    } catch (const std::exception& e) {
      switch (cfg.format) {
        case Format::Json: {
          json j{{"index", i}, {"line", lines[i].line_no}, {"error", e.what()}};
          row << j.dump() << "\n";
          break;
        }
        case Format::Csv:
          row << i << ",,,,,,,,,,,,,," << '"' << e.what() << '"' << "\n";
          break;
        case Format::Text:
          row << "graph " << i << ": error: " << e.what() << "\n";
          break;
      }
    }
    rows[i] = row.str();
  });
  for (const auto& r : rows) out << r;
  return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

int run_check(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  double tol;
  std::vector<LineSource> lines;
  try {
    tol = tol_of(cfg);
    lines = collect_input_lines(cfg, in);
  } catch (const std::exception& e) {
    err << "check: " << e.what() << "\n";
    return 2;
  }

  if (cfg.format == Format::Csv) {
    if (cfg.tolerance) out << "# tolerance " << fmt(*cfg.tolerance) << "\n";
    out << "index,theorem_id,applicable,lhs,rhs,slack,satisfied,notes\n";
  }

  struct PerGraph {
    std::string rows;
    std::vector<BoundReport> reports;
    bool parse_error = false;
  };
  std::vector<PerGraph> results(lines.size());

  parallel_indexed(lines.size(), cfg.threads, [&](std::size_t i) {
    PerGraph& pg = results[i];
    std::ostringstream row;
    try {
      const Graph g = Graph::from_graph6(lines[i].text);
      pg.reports = check_all(g, cfg.d, tol);
      for (const auto& r : pg.reports) {
        switch (cfg.format) {
          case Format::Json: {
            json j = report_to_json(r, cfg);
            j["index"] = i;
            row << j.dump() << "\n";
            break;
          }
          case Format::Csv:
            row << i << "," << theorem_name(r.id) << "," << (r.applicable ? 1 : 0) << ",";
            if (r.applicable)
              row << fmt(r.lhs) << "," << fmt(r.rhs) << "," << fmt(r.slack);
            else
              row << ",,";
            row << "," << (r.satisfied ? 1 : 0) << "," << '"' << r.notes << '"' << "\n";
            break;
          case Format::Text:
            row << "graph " << i << " " << theorem_name(r.id) << ": "
                << (r.applicable ? (r.satisfied ? "ok" : "VIOLATED") : "n/a");
            if (r.applicable) row << " slack=" << fmt(r.slack);
            row << "\n";
            break;
        }
      }
    } catch (const std::exception& e) {
      pg.parse_error = true;
      if (cfg.format == Format::Json) {
        json j{{"index", i}, {"line", lines[i].line_no}, {"error", e.what()}};
        row << j.dump() << "\n";
      } else if (cfg.format == Format::Csv) {
        row << i << ",error,,,,,," << '"' << e.what() << '"' << "\n";
      } else {
        row << "graph " << i << ": error: " << e.what() << "\n";
      }
    }
    pg.rows = row.str();
  });

  std::size_t violations = 0, parse_errors = 0;
  std::map<std::string, double> min_slack;
  for (const auto& pg : results) {
    out << pg.rows;
    if (pg.parse_error) ++parse_errors;
    for (const auto& r : pg.reports) {
      if (!r.satisfied) ++violations;
      if (r.applicable) {
        auto [it, fresh] = min_slack.try_emplace(theorem_name(r.id), r.slack);
        if (!fresh) it->second = std::min(it->second, r.slack);
      }
    }
  }

  if (cfg.format == Format::Json) {
    json j{{"summary",
            {{"graphs", lines.size()},
             {"violations", violations},
             {"parse_errors", parse_errors},
             {"d", cfg.d},
             {"tolerance", tol},
             {"min_slack", min_slack}}}};
    out << j.dump() << "\n";
  } else {
    out << (cfg.format == Format::Csv ? "# " : "") << "summary: graphs=" << lines.size()
        << " violations=" << violations << " parse_errors=" << parse_errors << " d=" << cfg.d
        << " tolerance=" << fmt(tol);
    for (const auto& [name, slack] : min_slack) out << " min_slack[" << name << "]=" << fmt(slack);
    out << "\n";
  }
  return violations > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

int run_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.from_d < 75 || cfg.from_d > cfg.to_d) {
    err << "certify: need 75 <= from <= to\n";
    return 2;
  }
  bool all_ok = true;
  if (cfg.format == Format::Csv) {
    out << "d,regime,delta,alpha_delta,z_star,objective,margin,constraint_ok,certified";
    if (cfg.oracle) out << ",oracle_max,oracle_below_one";
    if (cfg.chain) out << ",factor_ratio,factor_z,factor_exp,factor_product,chain_ok";
    out << "\n";
  }
  for (int d = cfg.from_d; d <= cfg.to_d; ++d) {
    CertificationRecord r;
    try {
      r = objective_closed_form(d);
    } catch (const std::exception& e) {
      err << "certify: " << e.what() << "\n";
      return 2;
    }
    all_ok = all_ok && r.certified && r.constraint_ok;

    std::optional<GridOracleResult> oracle;
    if (cfg.oracle) {
      oracle = grid_oracle(d, r.delta, cfg.resolution);
      all_ok = all_ok && oracle->below_one && oracle->x_decrease_verified;
    }
    std::optional<AsymptoticFactors> factors;
    if (cfg.chain && d >= 140) {
      try {
        factors = certify_asymptotic(d);
      } catch (const CertificationError& e) {
        err << "certify: " << e.what() << "\n";
        all_ok = false;
      }
    }

    switch (cfg.format) {
      case Format::Json: {
        json j{{"d", r.d},          {"regime", r.regime},
               {"delta", r.delta},  {"alpha_delta", r.alpha_delta},
               {"z_star", r.z_star},{"objective", r.objective},
               {"margin", r.margin},{"constraint_ok", r.constraint_ok},
               {"certified", r.certified}};
        if (oracle)
          j["oracle"] = {{"max", oracle->max_value},
                         {"below_one", oracle->below_one},
                         {"resolution", oracle->resolution},
                         {"arg_eps", oracle->arg_eps},
                         {"arg_x", oracle->arg_x},
                         {"arg_y", oracle->arg_y},
                         {"arg_z", oracle->arg_z},
                         {"x_decrease_verified", oracle->x_decrease_verified}};
        if (factors)
          j["chain"] = {{"factor_ratio", factors->factor_ratio},
                        {"factor_z", factors->factor_z},
                        {"factor_exp", factors->factor_exp},
                        {"product", factors->product},
                        {"z_star", factors->z_star},
                        {"ok", factors->ok}};
        out << j.dump() << "\n";
        break;
      }
      case Format::Csv: {
        out << r.d << "," << r.regime << "," << fmt(r.delta) << "," << fmt(r.alpha_delta) << ","
            << fmt(r.z_star) << "," << fmt(r.objective) << "," << fmt(r.margin) << ","
            << (r.constraint_ok ? 1 : 0) << "," << (r.certified ? 1 : 0);
        if (cfg.oracle) {
          if (oracle)
            out << "," << fmt(oracle->max_value) << "," << (oracle->below_one ? 1 : 0);
          else
            out << ",,";
        }
        if (cfg.chain) {
          if (factors)
            out << "," << fmt(factors->factor_ratio) << "," << fmt(factors->factor_z) << ","
                << fmt(factors->factor_exp) << "," << fmt(factors->product) << ","
                << (factors->ok ? 1 : 0);
          else
            out << ",,,,,";
        }
        out << "\n";
        break;
      }
      case Format::Text:
        out << "d=" << r.d << " regime=" << r.regime << " delta=" << fmt(r.delta)
            << " objective=" << fmt(r.objective) << " margin=" << fmt(r.margin)
            << (r.certified && r.constraint_ok ? " certified" : " NOT CERTIFIED");
        if (oracle) out << " oracle_max=" << fmt(oracle->max_value);
        if (factors) out << " chain_product=" << fmt(factors->product);
        out << "\n";
        break;
    }
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// plot
// ---------------------------------------------------------------------------

int run_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.d < 3) {
    err << "plot: requires d >= 3\n";
    return 2;
  }
  if (cfg.samples < 2) {
    err << "plot: needs at least 2 samples\n";
    return 2;
  }
  const MagicPolynomial p = build_magic(cfg.d);
  out << "# magic polynomial, d=" << cfg.d << "\n";
  out << "# root x=" << fmt(-cfg.d) << "\n";
  out << "# root x=" << fmt(-p.eps0) << "\n";
  out << "# level f(d)=" << fmt(eval_magic(p, cfg.d)) << " attained at x=" << fmt(p.eps0)
      << " and x=" << fmt(cfg.d) << "\n";
  out << "x,f\n";
  // product form: exactly zero at the marked roots
  const double lo = -cfg.d, hi = p.alpha;
  for (int i = 0; i < cfg.samples; ++i) {
    const double x = lo + (hi - lo) * i / (cfg.samples - 1);
    out << fmt(x) << "," << fmt(eval_magic_product(p, x)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

namespace {

json leaderboard_entry_to_json(const LeaderboardEntry& e) {
  return json{{"graph6", e.graph6},
              {"n", e.n},
              {"d", e.d},
              {"lambda_h", e.lambda_h},
              {"lambda_l", e.lambda_l},
              {"slack_upper", e.slack_upper},
              {"slack_lower", e.slack_lower},
              {"timestamp", e.timestamp}};
}

LeaderboardEntry leaderboard_entry_from_json(const json& j) {
  LeaderboardEntry e;
  e.graph6 = j.at("graph6").get<std::string>();
  e.n = j.at("n").get<int>();
  e.d = j.at("d").get<int>();
  e.lambda_h = j.at("lambda_h").get<double>();
  e.lambda_l = j.at("lambda_l").get<double>();
  e.slack_upper = j.at("slack_upper").get<double>();
  e.slack_lower = j.at("slack_lower").get<double>();
  e.timestamp = j.value("timestamp", "");
  return e;
}

}  // namespace

std::vector<LeaderboardEntry> load_leaderboard(const std::string& path) {
  std::vector<LeaderboardEntry> entries;
  std::ifstream f(path);
  if (!f) return entries;
  std::string line;
  while (std::getline(f, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    entries.push_back(leaderboard_entry_from_json(json::parse(t)));
  }
  return entries;
}

void save_leaderboard(const std::string& path, const std::vector<LeaderboardEntry>& entries) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw std::ios_base::failure("cannot write leaderboard file: " + path);
  for (const auto& e : entries) f << leaderboard_entry_to_json(e).dump() << "\n";
}

int run_search(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  double tol;
  std::vector<LineSource> corpus;
  try {
    tol = tol_of(cfg);
    if (!cfg.inputs.empty()) corpus = collect_input_lines(cfg, in);
    if (cfg.d < 2) throw std::invalid_argument("search: requires d >= 2");
  } catch (const std::exception& e) {
    err << "search: " << e.what() << "\n";
    return 2;
  }
  const double e0 = std::sqrt(static_cast<double>(cfg.d - 1));
  const std::size_t total = static_cast<std::size_t>(cfg.trials) + corpus.size();

  struct Item {
    LeaderboardEntry entry;
    bool valid = false;
    bool confirmed_violation = false;
    std::string error;
  };
  std::vector<Item> items(total);

  parallel_indexed(total, cfg.threads, [&](std::size_t i) {
    Item& item = items[i];
    try {
      Graph g;
      if (i < static_cast<std::size_t>(cfg.trials)) {
        SplitMix64 rng(SplitMix64::derive(cfg.seed, i));
        const int span = std::max(1, cfg.max_n - 3);
        const int n = 4 + static_cast<int>(rng.uniform_below(span));
        g = random_bounded_degree(n, cfg.d, rng.next());
      } else {
        g = Graph::from_graph6(corpus[i - cfg.trials].text);
      }
      const Spectrum s = eigenvalues(g);
      const SpectralSummary sum = summarize(g, s);
      LeaderboardEntry e;
      e.graph6 = g.to_graph6();
      e.n = g.order();
      e.d = cfg.d;
      e.lambda_h = sum.lambda_h;
      e.lambda_l = sum.lambda_l;
      e.slack_upper = e0 - sum.lambda_h;
      e.slack_lower = sum.lambda_l + e0;
      item.entry = std::move(e);
      item.valid = true;

      // A near-violation is "interesting"; an actual claim must survive the
      // exact Sturm oracle first, because a falsified theorem means a bug.
      if (item.entry.slack_lower < -10.0 * tol && g.order() <= 64) {
        const Spectrum exact = eigenvalues_oracle(g);
        const SpectralSummary esum = summarize(g, exact);
        if (esum.lambda_l + e0 < -10.0 * tol) item.confirmed_violation = true;
      }
    } catch (const std::exception& ex) {
      item.error = ex.what();
    }
  });

  if (cfg.format == Format::Csv)
    out << "index,graph6,n,d,lambda_h,lambda_l,slack_upper,slack_lower\n";

  bool violation = false;
  std::vector<LeaderboardEntry> board = load_leaderboard(cfg.leaderboard_path);
  std::ofstream append_file;
  if (!cfg.leaderboard_path.empty())
    append_file.open(cfg.leaderboard_path, std::ios::app);

  auto keep_top_k = [&](std::vector<LeaderboardEntry>& v) {
    std::stable_sort(v.begin(), v.end(), [](const LeaderboardEntry& a, const LeaderboardEntry& b) {
      return a.slack_lower < b.slack_lower;
    });
    if (static_cast<int>(v.size()) > cfg.top_k) v.resize(cfg.top_k);
  };
  keep_top_k(board);

  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& item = items[i];
    if (!item.error.empty()) {
      if (cfg.format == Format::Json)
        out << json{{"index", i}, {"error", item.error}}.dump() << "\n";
      else if (cfg.format == Format::Csv)
        out << i << ",,,,,,," << '"' << item.error << '"' << "\n";
      else
        out << "search " << i << ": error: " << item.error << "\n";
      continue;
    }
    const LeaderboardEntry& e = item.entry;
    switch (cfg.format) {
      case Format::Json: {
        json j{{"index", i},
               {"graph6", e.graph6},
               {"n", e.n},
               {"d", e.d},
               {"lambda_h", e.lambda_h},
               {"lambda_l", e.lambda_l},
               {"slack_upper", e.slack_upper},
               {"slack_lower", e.slack_lower}};
        if (item.confirmed_violation) j["confirmed_violation"] = true;
        out << j.dump() << "\n";
        break;
      }
      case Format::Csv:
        out << i << "," << e.graph6 << "," << e.n << "," << e.d << "," << fmt(e.lambda_h) << ","
            << fmt(e.lambda_l) << "," << fmt(e.slack_upper) << "," << fmt(e.slack_lower) << "\n";
        break;
      case Format::Text:
        out << "search " << i << ": n=" << e.n << " slack_lower=" << fmt(e.slack_lower)
            << " slack_upper=" << fmt(e.slack_upper) << (item.confirmed_violation ? " COUNTEREXAMPLE" : "")
            << "\n";
        break;
    }
    if (item.confirmed_violation) {
      violation = true;
      err << "search: exact-oracle-confirmed violation at index " << i << ": " << e.graph6
          << "\n";
    }

    // append-then-compact persistence: interesting records are appended as
    // they appear, then the file is rewritten with exactly the top k.
    const bool enters = static_cast<int>(board.size()) < cfg.top_k ||
                        e.slack_lower < board.back().slack_lower;
    if (enters) {
      LeaderboardEntry stamped = e;
      stamped.timestamp = utc_timestamp();
      board.push_back(stamped);
      keep_top_k(board);
      if (append_file.is_open())
        append_file << leaderboard_entry_to_json(stamped).dump() << "\n";
    }
  }

  if (!cfg.leaderboard_path.empty()) {
    append_file.close();
    try {
      save_leaderboard(cfg.leaderboard_path, board);
    } catch (const std::exception& e) {
      err << "search: " << e.what() << "\n";
      return 2;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : board) best = std::min(best, e.slack_lower);
  if (cfg.format == Format::Json) {
    json j{{"summary",
            {{"trials", cfg.trials},
             {"corpus", corpus.size()},
             {"d", cfg.d},
             {"tolerance", tol},
             {"best_slack_lower", board.empty() ? json() : json(best)},
             {"leaderboard_size", board.size()}}}};
    out << j.dump() << "\n";
  } else {
    out << (cfg.format == Format::Csv ? "# " : "") << "summary: trials=" << cfg.trials
        << " corpus=" << corpus.size() << " d=" << cfg.d << " leaderboard=" << board.size();
    if (!board.empty()) out << " best_slack_lower=" << fmt(best);
    out << "\n";
  }
  return violation ? 1 : 0;
}

}  // namespace medeig::cli
