#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cli.hpp"

using medeig::cli::Format;
using medeig::cli::RunConfig;

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("MEDEIG_SEED"))
    cfg.seed = std::strtoull(env, nullptr, 10);

  CLI::App app{
      "medeig - verification toolkit for median-eigenvalue and average-energy "
      "bounds of bounded-degree graphs"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  const std::map<std::string, Format> format_map{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("-o,--output", output_path, "write output to a file instead of stdout");
    cmd->add_option("--threads", cfg.threads, "worker pool size (0 = hardware)");
  };
  double tolerance = 0.0;

  auto* generate = app.add_subcommand("generate", "emit graph6 lines for a graph family");
  generate
      ->add_option("family", cfg.family,
                   "plane|circulant|cycle|matching|empty|complete-bipartite|"
                   "triangle-union|random|bipartite")
      ->required();
  generate->add_option("--q", cfg.q, "projective plane order (prime power <= 32)");
  generate->add_option("--n", cfg.n, "vertex count / cycle length / matching size");
  generate->add_option("--d", cfg.d, "degree cap for random families");
  generate->add_option("--a", cfg.part_a, "first part size / triangle count");
  generate->add_option("--b", cfg.part_b, "second part size / single-edge count");
  generate->add_option("--set", cfg.connection_set, "circulant connection residues")
      ->delimiter(',');
  generate->add_option("--count", cfg.count, "number of random graphs");
  generate->add_option("--seed", cfg.seed, "random seed (default: MEDEIG_SEED or 0)");
  add_common(generate);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, medians, energy, moment report");
  spectrum->add_option("inputs", cfg.inputs, "graph6 files ('-' for stdin)");
  spectrum->add_flag("--eigenvalues", cfg.with_eigenvalues, "include the full spectrum");
  add_common(spectrum);

  auto* check = app.add_subcommand("check", "run every theorem checker over a graph6 corpus");
  check->add_option("inputs", cfg.inputs, "graph6 files ('-' for stdin)");
  check->add_option("--d", cfg.d, "degree parameter of the theorems")->required();
  check->add_option("--tol", tolerance, "slack tolerance override (default 1e-8)");
  add_common(check);

  auto* certify = app.add_subcommand("certify", "reproduce the product-bound certification");
  certify->add_option("--from", cfg.from_d, "first d (>= 75)");
  certify->add_option("--to", cfg.to_d, "last d");
  certify->add_flag("--chain", cfg.chain, "check the analytic three-factor chain (d >= 140)");
  certify->add_flag("--oracle", cfg.oracle, "run the brute-force grid oracle per d");
  certify->add_option("--resolution", cfg.resolution, "grid oracle resolution per axis");
  add_common(certify);

  auto* plot = app.add_subcommand("plot", "CSV samples of the quartic used by the median bound");
  plot->add_option("--d", cfg.d, "degree parameter (>= 3)")->required();
  plot->add_option("--samples", cfg.samples, "sample count over [-d, alpha]");
  add_common(plot);

  auto* search = app.add_subcommand("search", "random search for median-eigenvalue extremes");
  search->add_option("inputs", cfg.inputs, "extra graph6 corpora to include");
  search->add_option("--d", cfg.d, "degree cap")->required();
  search->add_option("--trials", cfg.trials, "number of random graphs");
  search->add_option("--seed", cfg.seed, "random seed (default: MEDEIG_SEED or 0)");
  search->add_option("--max-n", cfg.max_n, "largest random graph order");
  search->add_option("--leaderboard", cfg.leaderboard_path, "persisted top-k JSONL file");
  search->add_option("--top", cfg.top_k, "leaderboard size");
  search->add_option("--tol", tolerance, "slack tolerance override (default 1e-8)");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.format = format_map.at(format);
  if (tolerance != 0.0) cfg.tolerance = tolerance;

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output_path.empty() && output_path != "-") {
    file_out.open(output_path);
    if (!file_out) {
      std::cerr << "cannot open output file: " << output_path << "\n";
      return 2;
    }
    out = &file_out;
  }

  try {
    if (generate->parsed()) return medeig::cli::run_generate(cfg, *out, std::cerr);
    if (spectrum->parsed()) return medeig::cli::run_spectrum(cfg, std::cin, *out, std::cerr);
    if (check->parsed()) return medeig::cli::run_check(cfg, std::cin, *out, std::cerr);
    if (certify->parsed()) return medeig::cli::run_certify(cfg, *out, std::cerr);
    if (plot->parsed()) return medeig::cli::run_plot(cfg, *out, std::cerr);
    if (search->parsed()) return medeig::cli::run_search(cfg, std::cin, *out, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << argv[0] << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}
