#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "dspc/congestion_transform.hpp"
#include "dspc/dsp_exact.hpp"
#include "dspc/edge_disjoint.hpp"
#include "dspc/errors.hpp"
#include "dspc/hardness_gen.hpp"
#include "dspc/io.hpp"
#include "dspc/kernelizer.hpp"
#include "dspc/random_instance.hpp"
#include "dspc/verify.hpp"

namespace dspc::cli {

namespace {

std::shared_ptr<spdlog::logger> make_logger() {
  auto logger = spdlog::get("dspc");
  if (!logger) logger = spdlog::stderr_color_mt("dspc");
  logger->set_pattern("[%l] %v");
  const char* env = std::getenv("DSPC_LOG");
  const std::string level = env ? env : "info";
  if (level == "quiet") {
    logger->set_level(spdlog::level::off);
  } else if (level == "debug") {
    logger->set_level(spdlog::level::debug);
  } else {
    logger->set_level(spdlog::level::info);
  }
  return logger;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string join(const std::vector<int>& values) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? " " : "") << values[i];
  return s.str();
}

struct SolveArgs {
  std::string algo = "dnc";
  std::string mode;
  std::string input;
  std::string output;
  int max_pairs = DspOptions{}.max_pairs;
};

int do_solve(const SolveArgs& a, std::ostream& out, spdlog::logger& log) {
  InstanceFile file = parse_instance(read_file(a.input));
  Instance& inst = file.instance;
  if (!a.mode.empty()) inst.mode = *parse_mode(a.mode);
  const DspOptions dsp{a.max_pairs};
  log.info("solving n={} m={} k={} c={} mode={} algo={}", inst.dag.vertex_count(),
           inst.dag.edge_count(), inst.k(), inst.congestion, mode_name(inst.mode), a.algo);
  const auto start = std::chrono::steady_clock::now();
  std::optional<Solution> sol;
  if (inst.mode == CongestionMode::kEdge) {
    sol = solve_edsp(inst, EdspOptions{dsp, a.algo == "kernel"});
  } else if (a.algo == "kernel") {
    sol = solve_kdspc(inst, dsp);
  } else {
    sol = solve_with_congestion(inst, dsp);
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  log.info("{} in {:.1f} ms", sol ? "feasible" : "infeasible", ms.count());
  emit(a.output, format_solution(sol), out);
  return sol ? kFeasible : kInfeasible;
}

int do_verify(const std::string& input, const std::string& solution, std::ostream& out) {
  const InstanceFile file = parse_instance(read_file(input));
  const auto sol = parse_solution(read_file(solution));
  if (!sol) {
    out << "solution claims infeasibility; nothing to verify\n";
    return kInfeasible;
  }
  if (static_cast<int>(sol->paths.size()) != file.instance.k()) {
    out << "refuted: " << sol->paths.size() << " paths for " << file.instance.k() << " demands\n";
    return kInfeasible;
  }
  const VerifyReport report = verify_solution(file.instance, *sol);
  for (const Violation& v : report.violations) out << "violation: " << v.describe() << '\n';
  out << (report.feasible ? "verified" : "refuted") << '\n';
  return report.feasible ? kFeasible : kInfeasible;
}

int do_oracle(const std::string& input, const std::string& output, std::int64_t bound,
              std::ostream& out) {
  const InstanceFile file = parse_instance(read_file(input));
  const auto sol = brute_force_oracle(file.instance, OracleOptions{bound});
  emit(output, format_solution(sol), out);
  return sol ? kFeasible : kInfeasible;
}

struct GenArgs {
  std::string family;
  std::uint64_t seed = 1;
  std::string output;
  // random
  int n = 8, k = 2, c = 1, wmax = 2, density = 40;
  std::string mode = "vertex";
  // mcc
  bool plant = false;
  // psi
  std::string pattern = "k33";
  int class_size = 1;
};

int do_gen(const GenArgs& a, std::ostream& out) {
  std::vector<std::string> comments{"family " + a.family, "seed " + std::to_string(a.seed)};
  std::string text;
  if (a.family == "random") {
    RandomDagParams p{a.n, a.k, a.c, a.wmax, a.density, *parse_mode(a.mode), true};
    comments.push_back("params n=" + std::to_string(a.n) + " k=" + std::to_string(a.k) +
                       " c=" + std::to_string(a.c) + " wmax=" + std::to_string(a.wmax) +
                       " density=" + std::to_string(a.density) + " mode=" + a.mode);
    text = format_instance(random_instance(p, a.seed), comments);
  } else if (a.family == "mcc") {
    const ColoredGraph cg = random_colored_graph({a.n, a.k, a.density, a.plant}, a.seed);
    const MccInstance gen = mcc_to_planar_edsp(cg, a.k);
    comments.push_back("params n=" + std::to_string(a.n) + " k=" + std::to_string(a.k) +
                       " density=" + std::to_string(a.density) + " plant=" + std::to_string(a.plant));
    comments.push_back("colors " + join({cg.color.begin() + 1, cg.color.end()}));
    std::string edges = "source-edges";
    for (auto [u, v] : cg.graph.edges) edges += " " + std::to_string(u) + "-" + std::to_string(v);
    comments.push_back(edges);
    const auto witness = find_colorful_clique(cg, a.k);
    comments.push_back(witness ? "witness clique " + join(witness->clique) : "witness none");
    comments.push_back("report vertices=" + std::to_string(gen.report.vertex_count) +
                       " edges=" + std::to_string(gen.report.edge_count) +
                       " merged=" + std::to_string(gen.report.merged) +
                       " distance=" + std::to_string(gen.report.demand_distance));
    text = format_instance(gen.instance, comments);
  } else if (a.family == "psi") {
    const PatternGraph pattern =
        a.pattern == "cube" ? PatternGraph::cube() : PatternGraph::complete_bipartite_3_3();
    const HostGraph host = random_host_graph(pattern, {a.class_size, a.density, a.plant}, a.seed);
    const PsiInstance gen = psi_to_dspc(pattern, host, a.c);
    comments.push_back("params pattern=" + a.pattern + " class-size=" + std::to_string(a.class_size) +
                       " density=" + std::to_string(a.density) + " c=" + std::to_string(a.c) +
                       " plant=" + std::to_string(a.plant));
    std::string edges = "host-edges";
    for (const auto& [x, y] : host.edges) {
      edges += " " + std::to_string(x.cls) + "." + std::to_string(x.index) + "-" +
               std::to_string(y.cls) + "." + std::to_string(y.index);
    }
    comments.push_back(edges);
    const auto witness = find_partitioned_homomorphism(pattern, host);
    comments.push_back(witness ? "witness homomorphism " + join(witness->image) : "witness none");
    comments.push_back("report vertices=" + std::to_string(gen.report.vertex_count) +
                       " bound=" + std::to_string(gen.report.vertex_bound) +
                       " demands=" + std::to_string(gen.report.demand_count));
    text = format_instance(gen.instance, comments);
  } else {
    throw CLI::ValidationError("family", "unknown family " + a.family);
  }
  emit(a.output, text, out);
  return kFeasible;
}

struct SuiteResult {
  int instances = 0;
  int agree = 0;
  int feasible = 0;
};

// Each suite draws its instances from the seed sequence base, base+1, ...
SuiteResult run_suite(const std::string& name, int count, std::uint64_t base) {
  SuiteResult r;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base + static_cast<std::uint64_t>(i);
    Rng pick(seed ^ 0x9e3779b97f4a7c15ULL);
    bool a = false, b = false;
    if (name == "dnc") {
      RandomDagParams p{pick.uniform(2, 8), pick.uniform(1, 3), 1, 2, 45, CongestionMode::kVertex, true};
      const Instance inst = random_instance(p, seed);
      a = solve_disjoint_shortest(inst.dag, inst.demands).has_value();
      b = brute_force_oracle(inst).has_value();
    } else if (name == "congestion") {
      RandomDagParams p{pick.uniform(2, 6), pick.uniform(1, 3), pick.uniform(1, 2), 2, 45,
                        CongestionMode::kVertex, true};
      const Instance inst = random_instance(p, seed);
      a = solve_with_congestion(inst).has_value();
      b = brute_force_oracle(inst).has_value();
    } else if (name == "kernel") {
      const int k = pick.uniform(4, 5);
      RandomDagParams p{pick.uniform(3, 8), k, k - 1, 2, 45, CongestionMode::kVertex, true};
      const Instance inst = random_instance(p, seed);
      a = solve_kdspc(inst).has_value();
      b = solve_with_congestion(inst).has_value();
    } else if (name == "mcc") {
      const ColoredGraph cg = random_colored_graph({pick.uniform(2, 5), 2, 40, false}, seed);
      const MccInstance gen = mcc_to_planar_edsp(cg, 2);
      a = solve_edsp(gen.instance).has_value();
      b = find_colorful_clique(cg, 2).has_value();
    } else if (name == "psi") {
      // Two-vertex classes on the cube overflow the oracle, so only K_{3,3} gets them.
      const bool cube = pick.chance(1, 2);
      const PatternGraph pattern = cube ? PatternGraph::cube() : PatternGraph::complete_bipartite_3_3();
      const HostGraph host =
          random_host_graph(pattern, {cube ? 1 : pick.uniform(1, 2), 60, pick.chance(1, 3)}, seed);
      const PsiInstance gen = psi_to_dspc(pattern, host, pick.uniform(1, 2));
      a = brute_force_oracle(gen.instance, OracleOptions{100'000'000}).has_value();
      b = find_partitioned_homomorphism(pattern, host).has_value();
    } else {
      throw CLI::ValidationError("suite", "unknown suite " + name);
    }
    ++r.instances;
    r.agree += a == b;
    r.feasible += a;
  }
  return r;
}

int do_bench(const std::string& suite, int count, std::uint64_t seed, std::ostream& out,
             spdlog::logger& log) {
  const std::vector<std::string> suites =
      suite == "all" ? std::vector<std::string>{"dnc", "congestion", "kernel", "mcc", "psi"}
                     : std::vector<std::string>{suite};
  bool all_agree = true;
  for (const auto& name : suites) {
    const auto start = std::chrono::steady_clock::now();
    const SuiteResult r = run_suite(name, count, seed);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    out << "suite " << name << " instances " << r.instances << " agree " << r.agree << " feasible "
        << r.feasible << '\n';
    log.info("suite {} took {:.1f} ms", name, ms.count());
    all_agree = all_agree && r.agree == r.instances;
  }
  return all_agree ? kFeasible : kInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger();
  CLI::App app{"Disjoint shortest paths with congestion on DAGs", "dspc"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--algo", solve_args.algo, "dnc or kernel")->check(CLI::IsMember({"dnc", "kernel"}));
  solve->add_option("--mode", solve_args.mode, "override the file's congestion mode")
      ->check(CLI::IsMember({"vertex", "edge"}));
  solve->add_option("-i,--input", solve_args.input, "instance file")->required();
  solve->add_option("-o,--output", solve_args.output, "solution file (default stdout)");
  solve->add_option("--max-pairs", solve_args.max_pairs, "cap on demands for the exact solver");

  std::string verify_input, verify_solution_path;
  auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
  verify->add_option("-i,--input", verify_input, "instance file")->required();
  verify->add_option("-s,--solution", verify_solution_path, "solution file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", gen_args.family, "psi, mcc or random")
      ->required()
      ->check(CLI::IsMember({"psi", "mcc", "random"}));
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("-o,--output", gen_args.output, "instance file (default stdout)");
  gen->add_option("--n", gen_args.n, "vertices (random, mcc)");
  gen->add_option("--k", gen_args.k, "demands (random) or colors (mcc)");
  gen->add_option("--c", gen_args.c, "congestion (random, psi)");
  gen->add_option("--wmax", gen_args.wmax, "maximum edge weight (random)");
  gen->add_option("--density", gen_args.density, "edge percentage");
  gen->add_option("--mode", gen_args.mode, "vertex or edge (random)")->check(CLI::IsMember({"vertex", "edge"}));
  gen->add_flag("--plant,!--no-plant", gen_args.plant, "plant a clique or homomorphism (mcc, psi)");
  gen->add_option("--pattern", gen_args.pattern, "k33 or cube (psi)")->check(CLI::IsMember({"k33", "cube"}));
  gen->add_option("--class-size", gen_args.class_size, "host class size (psi)");

  std::string oracle_input, oracle_output;
  std::int64_t oracle_bound = OracleOptions{}.max_combinations;
  auto* oracle = app.add_subcommand("oracle", "Solve by exhaustive enumeration");
  oracle->add_option("-i,--input", oracle_input, "instance file")->required();
  oracle->add_option("-o,--output", oracle_output, "solution file (default stdout)");
  oracle->add_option("--max-combinations", oracle_bound, "enumeration bound");

  std::string suite;
  int bench_count = 50;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Cross-check solvers on seeded random suites");
  bench->add_option("--suite", suite, "dnc, congestion, kernel, mcc, psi or all")
      ->required()
      ->check(CLI::IsMember({"dnc", "congestion", "kernel", "mcc", "psi", "all"}));
  bench->add_option("--count", bench_count, "instances per suite");
  bench->add_option("--seed", bench_seed, "first seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFeasible;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (*solve) return do_solve(solve_args, out, *log);
    if (*verify) return do_verify(verify_input, verify_solution_path, out);
    if (*gen) return do_gen(gen_args, out);
    if (*oracle) return do_oracle(oracle_input, oracle_output, oracle_bound, out);
    if (*bench) return do_bench(suite, bench_count, bench_seed, out, *log);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dspc::cli
