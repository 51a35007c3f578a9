#include "cspath/analysis.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <ostream>

#include <json.hpp>

#include "cspath/error.h"

namespace cspath {
namespace {

int64_t CountWindow(const Solver& solver, const HalfPlane& plane, int64_t t) {
  int64_t count = 0;
  for (VertexId v : solver.state().active_vertices) {
    if (std::abs(plane.At(v).x) <= t) ++count;
  }
  return count;
}

// Unit-mode solver advanced to exactly `clock`.
std::unique_ptr<Solver> SolverAtClock(const ProblemInstance& inst, int64_t clock, int workers) {
  SolverConfig config;
  config.time_mode = TimeMode::kUnit;
  config.workers = workers;
  auto solver = std::make_unique<Solver>(inst, config);
  while (solver->state().clock < clock) {
    if (solver->RunCycle()) break;
  }
  if (solver->state().clock != clock) {
    throw Error(ErrorCode::kBadSpec, "search terminated at clock " +
                                         std::to_string(solver->state().clock) + " before " +
                                         std::to_string(clock));
  }
  return solver;
}

}  // namespace

TraceResult TraceRun(const ProblemInstance& inst, const SolverConfig& config,
                     const std::optional<HalfPlane>& plane) {
  SolverConfig traced = config;
  traced.trace = true;
  Solver solver(inst, traced);
  TraceResult result;
  for (;;) {
    if (config.cycle_budget && solver.cycles() >= *config.cycle_budget) {
      result.outcome.kind = OutcomeKind::kBudgetExceeded;
      result.outcome.cycles = solver.cycles();
      break;
    }
    std::optional<SolveOutcome> verdict = solver.RunCycle();
    const CycleRecord& rec = solver.trace().back();
    CycleStats row{rec.t, rec.delta, rec.active_vertices, rec.active_edges, rec.phantoms,
                   rec.triggered, std::nullopt};
    if (plane) row.n_t = CountWindow(solver, *plane, row.t);
    result.rows.push_back(row);
    if (verdict) {
      result.outcome = *verdict;
      break;
    }
  }
  return result;
}

std::vector<VertexId> ActiveSetAtClock(const ProblemInstance& inst, int64_t clock, int workers) {
  std::unique_ptr<Solver> solver = SolverAtClock(inst, clock, workers);
  std::vector<VertexId> active = solver->state().active_vertices;
  std::sort(active.begin(), active.end());
  return active;
}

int64_t WindowedActiveCount(const ProblemInstance& inst, const HalfPlane& plane, int64_t t,
                            int workers) {
  return CountWindow(*SolverAtClock(inst, t, workers), plane, t);
}

std::vector<FractalRow> MeasureFractal(const std::vector<int32_t>& ks, int workers) {
  std::vector<FractalRow> rows;
  for (int32_t k : ks) {
    if (k < 1 || k > 7) throw Error(ErrorCode::kBadSpec, "measure_fractal needs 1 <= k <= 7");
    FractalSpec spec;
    spec.k = k;
    const FractalFamily family = GenFractal(spec);
    const int64_t t = spec.t();
    for (int32_t level = 1; level <= k; ++level) {
      FractalRow row;
      row.k = k;
      row.t = t;
      row.level = level;
      row.n_t = WindowedActiveCount(family.environments[level - 1], family.plane, t, workers);
      row.expected = FractalExpectedCount(level, t);
      row.ratio = static_cast<double>(row.n_t) / row.expected.value();
      row.fast_edges = static_cast<int64_t>(family.fast_edges[level - 1].size());
      rows.push_back(row);
    }
  }
  return rows;
}

GridSpec BenchCubeSpec(int32_t side, const BenchConfig& config) {
  GridSpec spec;
  spec.dims = {side, side, side};
  spec.f1 = ValueRule::Bernoulli(config.p_fast);
  spec.f2 = ValueRule::Constant(1);
  spec.sources = SourceRule::kBoundary;
  spec.targets = TargetRule::kCenterFloor;
  spec.seed = config.seed;
  return spec;
}

std::vector<BenchRow> Bench(const std::vector<int32_t>& sides, const BenchConfig& config) {
  if (config.repetitions < 1) throw Error(ErrorCode::kBadSpec, "bench needs >= 1 repetition");
  std::vector<BenchRow> rows;
  for (int32_t side : sides) {
    if (side < 8) throw Error(ErrorCode::kBadSpec, "bench cube side below 8");
    const ProblemInstance inst = GenGrid(BenchCubeSpec(side, config));
    BenchRow row;
    row.graph = std::to_string(side) + "x" + std::to_string(side) + "x" + std::to_string(side);
    row.side = side;
    row.vertices = inst.graph.num_vertices();
    row.edges = inst.graph.num_edges();

    SolverConfig solver_config;
    solver_config.workers = config.workers;
    std::vector<CycleRecord> trace;
    const SolveOutcome warm = Solve(inst, solver_config, &trace);
    row.cycles = warm.cycles;
    row.f1 = warm.f1;
    for (const CycleRecord& r : trace) {
      row.peak_active_vertices = std::max(row.peak_active_vertices, r.active_vertices);
      row.peak_active_edges = std::max(row.peak_active_edges, r.active_edges);
      row.peak_phantoms = std::max(row.peak_phantoms, r.phantoms);
    }

    for (int rep = 0; rep < config.repetitions; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const SolveOutcome out = Solve(inst, solver_config);
      const auto stop = std::chrono::steady_clock::now();
      if (!(out == warm)) throw Error(ErrorCode::kBadSpec, "bench run not reproducible");
      row.samples.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::vector<double> sorted = row.samples;
    std::sort(sorted.begin(), sorted.end());
    row.wall_seconds = sorted[sorted.size() / 2];
    rows.push_back(row);
  }
  return rows;
}

void WriteTraceCsv(std::ostream& out, const std::vector<CycleStats>& rows) {
  const bool windowed = std::any_of(rows.begin(), rows.end(),
                                    [](const CycleStats& r) { return r.n_t.has_value(); });
  out << "# format 1\n";
  out << "t,delta,active_vertices,active_edges,phantoms,triggered";
  if (windowed) out << ",N_t";
  out << '\n';
  for (const CycleStats& r : rows) {
    out << r.t << ',' << r.delta << ',' << r.active_vertices << ',' << r.active_edges << ','
        << r.phantoms << ',' << r.triggered;
    if (windowed) out << ',' << r.n_t.value_or(0);
    out << '\n';
  }
}

void WriteFractalCsv(std::ostream& out, const std::vector<FractalRow>& rows) {
  out << "# format 1\n";
  out << "k,t,level,N_t,expected,ratio,fast_edges\n";
  for (const FractalRow& r : rows) {
    out << r.k << ',' << r.t << ',' << r.level << ',' << r.n_t << ',' << r.expected.value() << ','
        << r.ratio << ',' << r.fast_edges << '\n';
  }
}

void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "# format 1\n";
  out << "Graph,CPU time (s),vertices,edges,cycles,F1,peak_active_vertices,peak_active_edges,"
         "peak_phantoms\n";
  for (const BenchRow& r : rows) {
    out << r.graph << ',' << r.wall_seconds << ',' << r.vertices << ',' << r.edges << ','
        << r.cycles << ',' << r.f1 << ',' << r.peak_active_vertices << ','
        << r.peak_active_edges << ',' << r.peak_phantoms << '\n';
  }
}

void WriteBenchJson(std::ostream& out, const std::vector<BenchRow>& rows,
                    const BenchConfig& config) {
  nlohmann::json j;
  j["format"] = 1;
  j["workers"] = config.workers;
  j["repetitions"] = config.repetitions;
  j["seed"] = config.seed;
  j["p_fast"] = config.p_fast;
  j["rows"] = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    j["rows"].push_back({{"graph", r.graph},
                         {"side", r.side},
                         {"vertices", r.vertices},
                         {"edges", r.edges},
                         {"wall_seconds", r.wall_seconds},
                         {"samples", r.samples},
                         {"cycles", r.cycles},
                         {"F1", r.f1},
                         {"peak_active_vertices", r.peak_active_vertices},
                         {"peak_active_edges", r.peak_active_edges},
                         {"peak_phantoms", r.peak_phantoms}});
  }
  out << j.dump(2) << '\n';
}

}  // namespace cspath
