// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cspath/analysis.h"
#include "cspath/engine.h"
#include "cspath/generators.h"
#include "cspath/oracle.h"
#include "cspath/reconstruct.h"

namespace cspath {
namespace {

constexpr uint64_t kSuiteSeed = 20240601;
constexpr int kSuiteSize = 600;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void Fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string Show(const std::vector<Point>& pts) {
  std::ostringstream s;
  for (size_t i = 0; i < pts.size(); ++i) s << (i ? " " : "") << '(' << pts[i].x << ',' << pts[i].y << ')';
  return s.str();
}

// 1. Engine against the product-graph oracle.
void OracleAgreement(Verdict& v) {
  const auto start = std::chrono::steady_clock::now();
  int infeasible = 0;
  int mismatches = 0;
  for (int i = 0; i < kSuiteSize; ++i) {
    const ProblemInstance inst = SuiteInstance(kSuiteSeed, i);
    const SolveOutcome e = Solve(inst);
    const AgreementReport r = Compare(inst, e, DpConstrainedShortest(inst));
    if (!r.agree) {
      ++mismatches;
      v.Fail("instance " + std::to_string(i) + ": " + r.summary);
    }
    infeasible += !e.reached();
  }
  const double secs = Seconds(start);
  const double frac = static_cast<double>(infeasible) / kSuiteSize;
  if (frac < 0.10) v.Fail("infeasible fraction below 10%");
  if (secs > 120) v.Fail("suite took longer than 2 minutes");
  v.detail << kSuiteSize << " instances, " << mismatches << " mismatches, " << infeasible
           << " infeasible (" << 100 * frac << "%), " << secs << " s";
}

// 2. Speedway frontier against its closed form.
void SpeedwayClosedForm(Verdict& v) {
  int mismatched = 0;
  std::ostringstream diffs;
  for (int32_t T = 2; T <= 40; ++T) {
    const int32_t n = std::max(4, 2 * T);
    const HalfPlane plane(n);
    std::vector<Point> engine;
    for (VertexId id : ActiveSetAtClock(GenSpeedway(n), T)) engine.push_back(plane.At(id));
    std::sort(engine.begin(), engine.end());
    const std::vector<Point> closed_form = SpeedwayActiveSet(T, n);
    if (engine == closed_form) continue;
    ++mismatched;
    std::vector<Point> extra;
    std::vector<Point> missing;
    std::set_difference(engine.begin(), engine.end(), closed_form.begin(), closed_form.end(),
                        std::back_inserter(extra));
    std::set_difference(closed_form.begin(), closed_form.end(), engine.begin(), engine.end(),
                        std::back_inserter(missing));
    v.Fail("T=" + std::to_string(T));
    if (mismatched <= 6) {
      diffs << "\n    T=" << T << " engine-only {" << Show(extra) << "} closed-form-only {"
            << Show(missing) << "}";
    }
  }
  v.detail << mismatched << " of 39 clocks differ" << diffs.str();
}

// 3. Fractal windowed counts.
void FractalGrowth(Verdict& v) {
  const std::vector<FractalRow> rows = MeasureFractal({3, 4, 5, 6});
  std::ostringstream table;
  for (size_t i = 0; i < rows.size(); ++i) {
    const FractalRow& r = rows[i];
    if (r.n_t < 0.5 * r.expected.value()) {
      v.Fail("k=" + std::to_string(r.k) + " level " + std::to_string(r.level) + " below half");
    }
    if (i > 0 && rows[i - 1].k == r.k && r.n_t < rows[i - 1].n_t) {
      v.Fail("k=" + std::to_string(r.k) + " level " + std::to_string(r.level) + " decreases");
    }
    if (r.level == 1) table << "\n    k=" << r.k << " t=" << r.t << ":";
    table << " N=" << r.n_t << " (ratio " << r.ratio << ")";
  }
  v.detail << "per level" << table.str();
}

// 4. Unit and jump time modes.
void TimeModes(Verdict& v) {
  SolverConfig unit;
  unit.time_mode = TimeMode::kUnit;
  int differ = 0;
  for (int i = 0; i < kSuiteSize; ++i) {
    const ProblemInstance inst = SuiteInstance(kSuiteSeed, i);
    const SolveOutcome a = Solve(inst);
    SolveOutcome b = Solve(inst, unit);
    b.cycles = a.cycles;
    if (!(a == b)) {
      ++differ;
      v.Fail("outcome of instance " + std::to_string(i));
    }
  }
  int snapshots = 0;
  for (int i = 0; i < 20; ++i) {
    const ProblemInstance inst = SuiteInstance(kSuiteSeed, i);
    Solver jump(inst, {});
    Solver slow(inst, unit);
    for (;;) {
      const bool done = jump.RunCycle().has_value();
      while (slow.state().clock < jump.state().clock && !slow.RunCycle()) {
      }
      ++snapshots;
      if (slow.state().clock != jump.state().clock || slow.Labels() != jump.Labels()) {
        v.Fail("labels of instance " + std::to_string(i) + " at t=" +
               std::to_string(jump.state().clock));
        break;
      }
      if (done) break;
    }
  }
  v.detail << kSuiteSize << " outcomes, " << differ << " differ; " << snapshots
           << " label snapshots compared";
}

// 5. Worker-count independence.
void WorkerIndependence(Verdict& v) {
  std::vector<ProblemInstance> instances;
  for (int i = 0; i < 40; ++i) instances.push_back(SuiteInstance(kSuiteSeed, i));
  for (int i = 0; i < 10; ++i) {
    GridSpec spec;
    spec.dims = i < 5 ? std::vector<int32_t>{61 + 10 * i, 61 + 10 * i}
                      : std::vector<int32_t>{15 + 2 * i, 15 + 2 * i, 15 + 2 * i};
    spec.f1 = ValueRule::Uniform(1, 5);
    spec.f2 = ValueRule::Uniform(1, 5);
    spec.budget = 30 + 7 * i;
    spec.targets = TargetRule::kCenterFloor;
    spec.seed = static_cast<uint64_t>(i);
    instances.push_back(GenGrid(spec));
  }
  for (size_t i = 0; i < instances.size(); ++i) {
    std::vector<CycleRecord> reference;
    const SolveOutcome ref = Solve(instances[i], {}, &reference);
    for (int w : {4, 16}) {
      SolverConfig c;
      c.workers = w;
      std::vector<CycleRecord> trace;
      if (!(Solve(instances[i], c, &trace) == ref) || trace != reference) {
        v.Fail("instance " + std::to_string(i) + " with W=" + std::to_string(w));
      }
    }
  }
  v.detail << instances.size() << " instances at W=1,4,16";
}

// 6. Path reconstruction.
void Reconstruction(Verdict& v) {
  int done = 0;
  for (int i = 0; done < 100 && i < kSuiteSize; ++i) {
    const ProblemInstance inst = SuiteInstance(kSuiteSeed, i);
    const SolveOutcome e = Solve(inst);
    if (!e.reached()) continue;
    ++done;
    const std::string tag = "instance " + std::to_string(i);
    try {
      const PathWitness w = ReconstructPath(inst);
      if (std::optional<std::string> why = ValidatePath(inst, w)) v.Fail(tag + ": " + *why);
      if (w.f1 != e.f1) v.Fail(tag + ": F1 differs from the search");
      if (w.f1 != DpConstrainedShortest(inst).f1) v.Fail(tag + ": F1 differs from the oracle");
      if (w.f2 >= inst.budget) v.Fail(tag + ": F2 not below M");
    } catch (const std::exception& ex) {
      v.Fail(tag + ": " + ex.what());
    }
  }
  if (done < 100) v.Fail("fewer than 100 feasible instances");
  v.detail << done << " paths reconstructed";
}

// 7. Worked-example mechanisms.
void Mechanisms(Verdict& v) {
  std::vector<MechanismFixture> fixtures = MechanismFixtures();
  fixtures.push_back(WorkedExample());
  int checkpoints = 0;
  for (const MechanismFixture& f : fixtures) {
    checkpoints += static_cast<int>(f.checkpoints.size());
    for (const std::string& msg : RunFixture(f)) v.Fail(msg);
  }
  const SolveOutcome o = Solve(fixtures.back().instance);
  if (!o.reached() || o.f1 != 15) v.Fail("worked example optimum");
  v.detail << fixtures.size() << " fixtures, " << checkpoints << " checkpoints";
}

// 8. Cube benchmark.
void CubeBenchmark(Verdict& v) {
  BenchConfig config;
  config.repetitions = 1;
  const std::vector<BenchRow> rows = Bench({20, 30, 40, 50}, config);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].wall_seconds < rows[i - 1].wall_seconds) {
      v.Fail(rows[i].graph + " faster than " + rows[i - 1].graph);
    }
    v.detail << rows[i].graph << " " << rows[i].wall_seconds << " s; ";
  }
  if (rows.back().wall_seconds >= 120) v.Fail("50^3 took 120 s or more");
  const std::vector<int32_t> big{100, 100, 100};
  const int64_t counted = GridEdgeCount(big);
  GridSpec spec = BenchCubeSpec(100, config);
  const ProblemInstance inst = GenGrid(spec);
  if (inst.graph.num_vertices() != 1000000 || inst.graph.num_edges() != 2970000 ||
      counted != 2970000) {
    v.Fail("100^3 size");
  }
  v.detail << "100^3: " << inst.graph.num_vertices() << " vertices, " << inst.graph.num_edges()
           << " edges";
}

}  // namespace
}  // namespace cspath

int main() {
  using Check = std::function<void(cspath::Verdict&)>;
  const std::vector<std::pair<const char*, Check>> criteria{
      {"oracle agreement", cspath::OracleAgreement},
      {"speedway closed form", cspath::SpeedwayClosedForm},
      {"fractal growth", cspath::FractalGrowth},
      {"unit/jump equivalence", cspath::TimeModes},
      {"worker independence", cspath::WorkerIndependence},
      {"path reconstruction", cspath::Reconstruction},
      {"worked-example mechanisms", cspath::Mechanisms},
      {"cube benchmark", cspath::CubeBenchmark},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    cspath::Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.Fail(std::string("exception: ") + e.what());
    }
    const double secs = cspath::Seconds(start);
    failed += !v.pass;
    std::printf("[%s] %zu %s (%.2f s): %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                secs, v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
