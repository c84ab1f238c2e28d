// quotdt: degree-zero DT invariants of Quot schemes of points on toric 3-folds.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "quotdt/cli.hpp"

int main(int argc, char** argv) {
  using namespace quotdt::cli;

  CLI::App app{"Exact localization engine for higher-rank degree-zero DT invariants"};
  app.set_version_flag("--version", "quotdt 0.1.0");

  RunConfig flags;
  std::string command;
  std::string config_path;
  std::string output_path;
  std::uint64_t seed = 0;
  int nmax = 0, rank = 0, trials = 0, chart_index = 0;
  unsigned threads = 0;
  std::string format, space, bundle, point, builtin, lambda;
  std::vector<std::string> charts, bundle_charts;
  bool timing = false;

  app.add_option("command", command, "toric | vertex | chern | cobordism | macmahon")
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);
  auto* o_space = app.add_option("--space", space, "p3, p2xp1, p1cubed, blp3 (chern: also quadric, blp3conic)");
  auto* o_chart = app.add_option("--chart", charts, "inline chart 'a1,a2,a3;b1,b2,b3;c1,c2,c3' (repeatable)");
  auto* o_bundle = app.add_option("--bundle", bundle, "line bundle summands, e.g. O,O1 or O(1,0),O(0,1)");
  auto* o_bchart = app.add_option("--bundle-chart", bundle_charts, "per-chart twists 'm;m' (repeatable)");
  auto* o_nmax = app.add_option("--nmax", nmax, "highest number of points");
  auto* o_rank = app.add_option("--rank", rank, "bundle rank r");
  auto* o_seed = app.add_option("--seed", seed, "parameter sampling seed");
  auto* o_trials = app.add_option("--trials", trials, "independent parameter points (>= 2)");
  auto* o_format = app.add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}));
  auto* o_threads = app.add_option("--threads", threads, "worker threads (fallback: QUOTDT_THREADS)");
  auto* o_point = app.add_option("--point", point, "fixed point, boxes 'i,j,k;...' with colours split by '|'");
  auto* o_index = app.add_option("--chart-index", chart_index, "chart used by the vertex command");
  auto* o_builtin = app.add_option("--builtin", builtin, "built-in double point relation");
  auto* o_lambda = app.add_option("--lambda", lambda, "partition of 3 selecting P^lambda");
  auto* o_timing = app.add_flag("--timing", timing, "record elapsed_ms in JSON output");
  app.add_option("--output", output_path, "write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*o_space) flags.space = space;
  if (*o_chart) flags.charts = charts;
  if (*o_bundle) flags.bundle = bundle;
  if (*o_bchart) flags.bundle_charts = bundle_charts;
  if (*o_nmax) flags.nmax = nmax;
  if (*o_rank) flags.rank = rank;
  if (*o_seed) flags.seed = seed;
  if (*o_trials) flags.trials = trials;
  if (*o_format) flags.format = format;
  if (*o_threads) flags.threads = threads;
  if (*o_point) flags.point = point;
  if (*o_index) flags.chart_index = chart_index;
  if (*o_builtin) flags.builtin = builtin;
  if (*o_lambda) flags.lambda = lambda;
  if (*o_timing) flags.timing = timing;
  if (!command.empty()) flags.command = command;

  try {
    if (!config_path.empty()) flags.merge_defaults_from(load_config_file(config_path));
    if (!flags.command) {
      std::cerr << "error: no command given\n" << app.help();
      return kExitUsage;
    }
    const CommandResult result = run_command(flags);
    const std::string text = result.render(flags.format.value_or("table"));
    if (output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output_path, std::ios::binary);
      out << text;
      if (!out) {
        std::cerr << "error: cannot write '" << output_path << "'\n";
        return kExitUsage;
      }
    }
    return result.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
