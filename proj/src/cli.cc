#include "cspath/cli.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cspath/analysis.h"
#include "cspath/engine.h"
#include "cspath/error.h"
#include "cspath/generators.h"
#include "cspath/instance_io.h"
#include "cspath/oracle.h"
#include "cspath/reconstruct.h"

namespace cspath {
namespace {

using nlohmann::json;

const char* StatusName(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kReached:
      return "reached";
    case OutcomeKind::kInfeasible:
      return "infeasible";
    case OutcomeKind::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

// "const:C", "uniform:LO:HI" or "bernoulli:P".
ValueRule ParseValueRule(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  try {
    if (parts.size() == 2 && parts[0] == "const") return ValueRule::Constant(std::stoll(parts[1]));
    if (parts.size() == 3 && parts[0] == "uniform") {
      return ValueRule::Uniform(std::stoll(parts[1]), std::stoll(parts[2]));
    }
    if (parts.size() == 2 && parts[0] == "bernoulli") return ValueRule::Bernoulli(std::stod(parts[1]));
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::kBadSpec, "bad value rule '" + text +
                                       "' (want const:C, uniform:LO:HI or bernoulli:P)");
}

std::vector<int32_t> ParseIntList(const std::string& text) {
  std::vector<int32_t> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kBadSpec, "bad integer list '" + text + "'");
    }
  }
  return out;
}

std::string LevelPath(const std::string& path, int level) {
  const size_t dot = path.find_last_of('.');
  const size_t slash = path.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  const std::string suffix = ".level" + std::to_string(level);
  return has_ext ? path.substr(0, dot) + suffix + path.substr(dot) : path + suffix;
}

struct EngineFlags {
  std::string mode = "jump";
  int workers = 1;

  void Add(CLI::App* app) {
    app->add_option("--mode", mode, "Clock advance: unit or jump")
        ->check(CLI::IsMember({"unit", "jump"}));
    app->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 1024));
  }
  SolverConfig Config() const {
    SolverConfig c;
    c.time_mode = mode == "unit" ? TimeMode::kUnit : TimeMode::kJump;
    c.workers = workers;
    return c;
  }
};

json OutcomeJson(const SolveOutcome& o) {
  json j;
  j["format"] = 1;
  j["status"] = StatusName(o.kind);
  if (o.reached()) {
    j["F1"] = o.f1;
    j["F2"] = o.f2;
    j["terminal"] = o.terminal;
  } else {
    j["F1"] = nullptr;
    j["F2"] = nullptr;
    j["terminal"] = nullptr;
  }
  j["cycles"] = o.cycles;
  return j;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Weight-constrained fastest path search on undirected graphs", "cspath");
  app.require_subcommand(1);

  // solve
  std::string solve_file;
  EngineFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Run the search and print the optimum as JSON");
  solve->add_option("FILE", solve_file, "Instance file")->required();
  solve_flags.Add(solve);

  // reconstruct
  std::string recon_file;
  EngineFlags recon_flags;
  CLI::App* recon = app.add_subcommand("reconstruct", "Recover an optimal path as JSON");
  recon->add_option("FILE", recon_file, "Instance file")->required();
  recon_flags.Add(recon);

  // oracle
  std::string oracle_file;
  CLI::App* oracle = app.add_subcommand("oracle", "Exact optimum via the product-graph search");
  oracle->add_option("FILE", oracle_file, "Instance file")->required();

  // verify
  std::vector<std::string> verify_files;
  int verify_grids = 0;
  uint64_t verify_seed = 1;
  EngineFlags verify_flags;
  CLI::App* verify =
      app.add_subcommand("verify", "Compare engine and oracle; exit 3 on any mismatch");
  verify->add_option("FILE", verify_files, "Instance files");
  verify->add_option("--grids", verify_grids, "Also check this many seeded suite instances")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", verify_seed, "Seed for --grids");
  verify_flags.Add(verify);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Write generated instances");
  gen->require_subcommand(1);
  std::string gen_out;
  std::string grid_dims = "5,5";
  std::string grid_f1 = "uniform:1:5";
  std::string grid_f2 = "const:1";
  std::string grid_sources = "boundary";
  std::string grid_targets = "center";
  std::string budget_text = "inf";
  uint64_t gen_seed = 1;
  CLI::App* gen_grid = gen->add_subcommand("grid", "Nearest-neighbour lattice");
  gen_grid->add_option("--dims", grid_dims, "Side lengths, comma separated");
  gen_grid->add_option("--f1", grid_f1, "Time rule: const:C, uniform:LO:HI, bernoulli:P");
  gen_grid->add_option("--f2", grid_f2, "Weight rule");
  gen_grid->add_option("--sources", grid_sources, "boundary or axis-x")
      ->check(CLI::IsMember({"boundary", "axis-x"}));
  gen_grid->add_option("--targets", grid_targets,
                       "center (odd sides only) or center-floor (side/2 per axis)")
      ->check(CLI::IsMember({"center", "center-floor"}));
  gen_grid->add_option("--budget", budget_text, "M, or inf");
  gen_grid->add_option("--seed", gen_seed, "RNG seed");
  gen_grid->add_option("-o,--output", gen_out, "Output file")->required();

  int32_t speedway_n = 8;
  CLI::App* gen_speedway = gen->add_subcommand("speedway", "Fast y axis on [-n,n]x[0,n]");
  gen_speedway->add_option("--n", speedway_n, "Half width")->check(CLI::Range(4, 1 << 14));
  gen_speedway->add_option("-o,--output", gen_out, "Output file")->required();

  int32_t fractal_k = 3;
  int32_t fractal_n = 0;
  bool fractal_levels = false;
  CLI::App* gen_fractal = gen->add_subcommand("fractal", "Recursive triangle construction");
  gen_fractal->add_option("--k", fractal_k, "t = 2^k")->check(CLI::Range(1, 12));
  gen_fractal->add_option("--n", fractal_n, "Half width (default 2t)");
  gen_fractal->add_flag("--levels", fractal_levels, "Also write every level to FILE.levelJ");
  gen_fractal->add_option("-o,--output", gen_out, "Output file")->required();

  RandomGraphSpec random_spec;
  std::string random_budget = "10";
  CLI::App* gen_random = gen->add_subcommand("random", "Random sparse graph");
  gen_random->add_option("--n", random_spec.n, "Vertices");
  gen_random->add_option("--components", random_spec.components, "Tree components");
  gen_random->add_option("--extra", random_spec.extra_edges, "Extra chords");
  gen_random->add_option("--fmax", random_spec.f_hi, "f1, f2 drawn from 1..fmax");
  gen_random->add_option("--sources", random_spec.num_sources, "|A|");
  gen_random->add_option("--targets", random_spec.num_targets, "|B|");
  gen_random->add_option("--budget", random_budget, "M, or inf");
  gen_random->add_option("--seed", random_spec.seed, "RNG seed");
  gen_random->add_option("-o,--output", gen_out, "Output file")->required();

  // trace
  std::string trace_file;
  std::string trace_out;
  int32_t trace_plane = 0;
  EngineFlags trace_flags;
  CLI::App* trace = app.add_subcommand("trace", "Per-cycle working-set sizes as CSV");
  trace->add_option("FILE", trace_file, "Instance file")->required();
  trace->add_option("--plane", trace_plane,
                    "Instance is a half plane of this half width; adds the N_t column");
  trace->add_option("-o,--output", trace_out, "CSV file (default stdout)");
  trace_flags.Add(trace);

  // bench
  std::string bench_sides = "20,30,40,50";
  std::string bench_fractal;
  bool bench_json = false;
  BenchConfig bench_config;
  CLI::App* bench = app.add_subcommand("bench", "Cube timings as CSV, or fractal counts");
  bench->add_option("--sides", bench_sides, "Cube sides, comma separated");
  bench->add_option("--workers", bench_config.workers, "Worker threads")->check(CLI::Range(1, 1024));
  bench->add_option("--reps", bench_config.repetitions, "Timed runs per cube (median reported)")
      ->check(CLI::Range(1, 100));
  bench->add_option("--seed", bench_config.seed, "Seed for the passage times");
  bench->add_option("--fractal", bench_fractal,
                    "Instead of cubes, measure N_t for these k (comma separated)");
  bench->add_flag("--json", bench_json, "JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      const ProblemInstance inst = ReadInstanceFile(solve_file);
      const SolveOutcome o = Solve(inst, solve_flags.Config());
      out << OutcomeJson(o).dump() << '\n';
      return o.reached() ? kExitOk : kExitInfeasible;
    }

    if (*recon) {
      const ProblemInstance inst = ReadInstanceFile(recon_file);
      try {
        const PathWitness w = ReconstructPath(inst, recon_flags.Config());
        out << json{{"format", 1}, {"vertices", w.vertices}, {"F1", w.f1}, {"F2", w.f2}}.dump()
            << '\n';
        return kExitOk;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotReached) throw;
        out << json{{"format", 1}, {"vertices", nullptr}, {"F1", nullptr}, {"F2", nullptr}}.dump()
            << '\n';
        return kExitInfeasible;
      }
    }

    if (*oracle) {
      const ProblemInstance inst = ReadInstanceFile(oracle_file);
      const OracleResult r = DpConstrainedShortest(inst);
      json j{{"format", 1}, {"feasible", r.feasible}};
      if (r.feasible) {
        j["F1"] = r.f1;
        j["F2"] = r.f2;
        j["path"] = r.path;
      }
      out << j.dump() << '\n';
      return r.feasible ? kExitOk : kExitInfeasible;
    }

    if (*verify) {
      if (verify_files.empty() && verify_grids == 0) {
        err << "verify: nothing to check (give FILEs or --grids N)\n";
        return kExitUsage;
      }
      int mismatches = 0;
      int checked = 0;
      auto check = [&](const std::string& name, const ProblemInstance& inst) {
        const AgreementReport report =
            Compare(inst, Solve(inst, verify_flags.Config()), DpConstrainedShortest(inst));
        ++checked;
        if (!report.agree) {
          ++mismatches;
          err << name << ": " << report.summary << '\n' << report.dump;
        }
      };
      for (const std::string& f : verify_files) check(f, ReadInstanceFile(f));
      for (int i = 0; i < verify_grids; ++i) {
        check("suite[" + std::to_string(i) + "]", SuiteInstance(verify_seed, i));
      }
      out << json{{"format", 1}, {"checked", checked}, {"mismatches", mismatches}}.dump() << '\n';
      return mismatches == 0 ? kExitOk : kExitMismatch;
    }

    if (*gen) {
      auto budget_of = [](const std::string& text, const Graph& g) -> Label {
        if (text == "inf") return InfiniteBudget(g);
        try {
          return std::stoll(text);
        } catch (const std::logic_error&) {
          throw Error(ErrorCode::kBadSpec, "bad budget '" + text + "'");
        }
      };
      if (*gen_grid) {
        GridSpec spec;
        spec.dims = ParseIntList(grid_dims);
        spec.f1 = ParseValueRule(grid_f1);
        spec.f2 = ParseValueRule(grid_f2);
        spec.sources = grid_sources == "boundary" ? SourceRule::kBoundary : SourceRule::kAxisX;
        spec.targets = grid_targets == "center" ? TargetRule::kCenter : TargetRule::kCenterFloor;
        spec.seed = gen_seed;
        ProblemInstance inst = GenGrid(spec);
        inst.budget = budget_of(budget_text, inst.graph);
        RequireValidInstance(inst);
        WriteInstanceFile(gen_out, inst);
      } else if (*gen_speedway) {
        WriteInstanceFile(gen_out, GenSpeedway(speedway_n));
      } else if (*gen_fractal) {
        FractalSpec spec;
        spec.k = fractal_k;
        spec.n = fractal_n;
        const FractalFamily family = GenFractal(spec);
        WriteInstanceFile(gen_out, family.instance());
        if (fractal_levels) {
          for (size_t j = 0; j < family.environments.size(); ++j) {
            WriteInstanceFile(LevelPath(gen_out, static_cast<int>(j + 1)),
                              family.environments[j]);
          }
        }
      } else if (*gen_random) {
        random_spec.budget = 1;
        ProblemInstance inst = GenRandomGraph(random_spec);
        inst.budget = budget_of(random_budget, inst.graph);
        RequireValidInstance(inst);
        WriteInstanceFile(gen_out, inst);
      }
      return kExitOk;
    }

    if (*trace) {
      const ProblemInstance inst = ReadInstanceFile(trace_file);
      std::optional<HalfPlane> plane;
      if (trace_plane > 0) {
        plane.emplace(trace_plane);
        if (plane->num_vertices() != inst.graph.num_vertices()) {
          throw Error(ErrorCode::kBadSpec, "--plane does not match the instance size");
        }
      }
      const TraceResult r = TraceRun(inst, trace_flags.Config(), plane);
      if (trace_out.empty()) {
        WriteTraceCsv(out, r.rows);
      } else {
        std::ofstream f(trace_out);
        if (!f) throw Error(ErrorCode::kParse, "cannot write " + trace_out);
        WriteTraceCsv(f, r.rows);
      }
      return r.outcome.reached() ? kExitOk : kExitInfeasible;
    }

    if (*bench) {
      if (!bench_fractal.empty()) {
        const std::vector<FractalRow> rows =
            MeasureFractal(ParseIntList(bench_fractal), bench_config.workers);
        if (bench_json) {
          json j{{"format", 1}, {"rows", json::array()}};
          for (const FractalRow& r : rows) {
            j["rows"].push_back({{"k", r.k},
                                 {"t", r.t},
                                 {"level", r.level},
                                 {"N_t", r.n_t},
                                 {"expected", r.expected.value()},
                                 {"ratio", r.ratio},
                                 {"fast_edges", r.fast_edges}});
          }
          out << j.dump(2) << '\n';
        } else {
          WriteFractalCsv(out, rows);
        }
        return kExitOk;
      }
      const std::vector<BenchRow> rows = Bench(ParseIntList(bench_sides), bench_config);
      if (bench_json) {
        WriteBenchJson(out, rows, bench_config);
      } else {
        WriteBenchCsv(out, rows);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cspath
