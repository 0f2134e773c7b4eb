#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "swarmtsp/swarmtsp.hpp"

namespace swarmtsp::cli {
namespace {

// Bad flag combinations found after CLI11 has accepted the syntax.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct InputOptions {
  std::string path;
  bool builtin = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "Instance file (.tsp TSPLIB or .csv coordinates)");
    cmd->add_flag("--builtin-paper", builtin, "Use the bundled 5-city instance");
  }

  Instance load() const {
    if (builtin == !path.empty()) throw UsageError("give exactly one of an input file or --builtin-paper");
    if (builtin) return builtin_instance();
    return load_instance_file(path).instance;
  }
};

struct SolverOptions {
  std::string algo = "pso";
  std::uint64_t seed = 0;
  SwarmConfig pso;
  GaConfig ga;
  SaConfig sa;
  std::optional<double> inertia_end;
  std::string local_search = std::string(to_string(SwarmConfig{}.local_search));

  void attach(CLI::App* cmd) {
    cmd->add_option("--algo", algo, "Solver")->check(CLI::IsMember({"pso", "ga", "sa"}))->capture_default_str();
    cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

    auto* pso_group = cmd->add_option_group("PSO");
    pso_group->add_option("--particles", pso.n_particles, "Swarm size")->capture_default_str();
    pso_group->add_option("--iterations", pso.max_iter, "Maximum iterations")->capture_default_str();
    pso_group->add_option("--inertia", pso.w, "Inertia weight w")->capture_default_str();
    pso_group->add_option("--inertia-end", inertia_end, "Final inertia; enables linear decay");
    pso_group->add_option("--c1", pso.c1, "Cognitive coefficient")->capture_default_str();
    pso_group->add_option("--c2", pso.c2, "Social coefficient")->capture_default_str();
    pso_group->add_option("--local-search", local_search, "none | 2opt-gbest | 2opt-all | 3opt-gbest")
        ->capture_default_str();
    pso_group->add_option("--stagnation", pso.stagnation_limit, "Stop after this many non-improving iterations");
    pso_group->add_flag("--nn-seed", pso.nearest_neighbor_seed, "Start particle 0 from the nearest-neighbour tour");

    auto* ga_group = cmd->add_option_group("GA");
    ga_group->add_option("--population", ga.population, "Population size")->capture_default_str();
    ga_group->add_option("--generations", ga.generations, "Generations")->capture_default_str();
    ga_group->add_option("--crossover-rate", ga.crossover_rate, "OX1 probability")->capture_default_str();
    ga_group->add_option("--mutation-rate", ga.mutation_rate, "Swap-mutation probability")->capture_default_str();
    ga_group->add_option("--tournament", ga.tournament_k, "Tournament size")->capture_default_str();
    ga_group->add_option("--elitism", ga.elitism, "Elite carry-over count")->capture_default_str();

    auto* sa_group = cmd->add_option_group("SA");
    sa_group->add_option("--initial-temp", sa.initial_temp, "Starting temperature (default: sampled)");
    sa_group->add_option("--cooling", sa.cooling, "Geometric cooling factor")->capture_default_str();
    sa_group->add_option("--iters-per-temp", sa.iters_per_temp, "Moves per temperature level (default: n^2)");
    sa_group->add_option("--min-temp", sa.min_temp, "Stop temperature (default: initial/1000)");
  }

  RunResult solve(const Instance& instance) {
    if (algo == "ga") {
      ga.seed = seed;
      return run_ga(instance, ga);
    }
    if (algo == "sa") {
      sa.seed = seed;
      return run_sa(instance, sa);
    }
    pso.seed = seed;
    pso.local_search = parse_local_search(local_search);
    if (inertia_end) {
      pso.w_schedule = InertiaSchedule::kLinearDecay;
      pso.w_end = *inertia_end;
    }
    return run_pso(instance, pso);
  }
};

std::string one_based(const Tour& tour, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < tour.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(tour[k] + 1);
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !file.write(contents.data(), static_cast<std::streamsize>(contents.size())) || !file.flush()) {
    throw UsageError("cannot write '" + path + "'");
  }
}

Tour parse_tour_list(const std::string& text, std::size_t n) {
  std::vector<std::size_t> order;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    long long id = 0;
    try {
      id = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed --tour entry '" + item + "'");
    }
    if (used != item.size() || id < 1 || static_cast<std::size_t>(id) > n) {
      throw UsageError("--tour entry '" + item + "' is not a city id in 1.." + std::to_string(n));
    }
    order.push_back(static_cast<std::size_t>(id - 1));
  }
  if (order.size() != n || !is_permutation_of_indices(order)) {
    throw UsageError("--tour must list each city 1.." + std::to_string(n) + " exactly once");
  }
  return Tour(std::move(order));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Travelling-salesman solvers: discrete PSO, GA, SA and exact enumeration", "swarmtsp"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run a metaheuristic and report the best tour");
  InputOptions solve_input;
  solve_input.attach(solve_cmd);
  SolverOptions solver;
  solver.attach(solve_cmd);
  std::string format = "text";
  solve_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "Enumerate all tours (n <= 12) for the optimum");
  InputOptions exact_input;
  exact_input.attach(exact_cmd);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run a multi-trial experiment from a JSON spec");
  std::string spec_path, out_csv, out_json;
  std::size_t threads = default_thread_count();
  bench_cmd->add_option("spec", spec_path, "Experiment spec (JSON)")->required();
  bench_cmd->add_option("--out-csv", out_csv, "Write per-trial records as CSV");
  bench_cmd->add_option("--out-json", out_json, "Write records and summary as JSON");
  bench_cmd->add_option("--threads", threads, "Worker threads (default: $SWARMTSP_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "Rewrite an instance as CSV or TSPLIB");
  InputOptions convert_input;
  convert_input.attach(convert_cmd);
  std::string convert_to = "csv", convert_out;
  convert_cmd->add_option("--to", convert_to, "Output format")->check(CLI::IsMember({"csv", "tsplib"}))->capture_default_str();
  convert_cmd->add_option("--out", convert_out, "Output path (default: stdout)");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Draw an instance and tour as SVG");
  InputOptions plot_input;
  plot_input.attach(plot_cmd);
  std::string tour_list, plot_out;
  bool solve_first = false;
  auto* tour_opt = plot_cmd->add_option("--tour", tour_list, "Comma-separated 1-based city ids");
  auto* solve_first_flag = plot_cmd->add_flag("--solve-first", solve_first, "Solve with --algo/--seed and draw the result");
  tour_opt->excludes(solve_first_flag);
  SolverOptions plot_solver;
  plot_cmd->add_option("--algo", plot_solver.algo, "Solver for --solve-first")
      ->check(CLI::IsMember({"pso", "ga", "sa"}))
      ->capture_default_str();
  plot_cmd->add_option("--seed", plot_solver.seed, "Seed for --solve-first")->capture_default_str();
  plot_cmd->add_option("--out", plot_out, "SVG output path")->required();

  std::vector<const char*> argv{"swarmtsp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const Instance instance = solve_input.load();
      const RunResult result = solver.solve(instance);
      if (format == "json") {
        nlohmann::ordered_json doc;
        doc["algorithm"] = solver.algo;
        doc["instance"] = instance.name();
        doc["n"] = instance.size();
        doc["seed"] = solver.seed;
        doc["best_cost"] = result.best_cost;
        doc["best_tour"] = std::vector<std::size_t>(result.best_tour.begin(), result.best_tour.end());
        doc["iterations"] = result.iterations_run;
        doc["evaluations"] = result.evaluations;
        doc["wall_time_s"] = result.wall_time;
        out << doc.dump(2) << '\n';
      } else {
        out << fmt::format(
            "algorithm:   {}\ninstance:    {} ({} cities)\nseed:        {}\nbest cost:   {:.5f}\ntour:        {}\n"
            "iterations:  {}\nevaluations: {}\nwall time:   {:.4f} s\n",
            solver.algo, instance.name(), instance.size(), solver.seed, result.best_cost,
            one_based(result.best_tour, " -> ") + " -> " + std::to_string(result.best_tour[0] + 1),
            result.iterations_run, result.evaluations, result.wall_time);
      }
    } else if (*exact_cmd) {
      const Instance instance = exact_input.load();
      const ExactSolution best = brute_force_optimal(instance);
      out << fmt::format("instance:     {} ({} cities)\noptimal cost: {:.5f}\ntour:         {} -> {}\n", instance.name(),
                         instance.size(), best.length, one_based(best.tour, " -> "), best.tour[0] + 1);
    } else if (*bench_cmd) {
      const ExperimentSpec spec = load_experiment_spec(spec_path);
      const Instance instance = load_experiment_instance(spec);
      const auto records = run_experiment(spec, instance, threads);
      const auto stats = summarize(records, spec.reference_cost);
      if (!out_csv.empty()) write_file(out_csv, emit_csv(records));
      if (!out_json.empty()) write_file(out_json, emit_json(records, stats));
      out << fmt::format("instance: {} ({} cities), {} run(s) per algorithm, base seed {}\n", instance.name(),
                         instance.size(), spec.runs_per_algorithm, spec.base_seed);
      out << format_summary_table(stats);
    } else if (*convert_cmd) {
      const Instance instance = convert_input.load();
      const std::string text = convert_to == "tsplib" ? write_tsplib(instance) : write_coords_csv(instance);
      if (convert_out.empty()) {
        out << text;
      } else {
        write_file(convert_out, text);
      }
    } else if (*plot_cmd) {
      const Instance instance = plot_input.load();
      std::optional<Tour> tour;
      if (!tour_list.empty()) {
        tour = parse_tour_list(tour_list, instance.size());
      } else if (solve_first) {
        tour = plot_solver.solve(instance).best_tour;
      }
      write_file(plot_out, render_svg(instance, tour));
      out << "wrote " << plot_out << '\n';
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InstanceTooLargeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInstanceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace swarmtsp::cli
