#ifndef CSPATH_ANALYSIS_H_
#define CSPATH_ANALYSIS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cspath/engine.h"
#include "cspath/generators.h"
#include "cspath/graph.h"

namespace cspath {

struct CycleStats {
  int64_t t = 0;
  int64_t delta = 0;
  int64_t active_vertices = 0;
  int64_t active_edges = 0;
  int64_t phantoms = 0;
  int64_t triggered = 0;
  // Active vertices with |x| <= t, when the instance lives on a half plane.
  std::optional<int64_t> n_t;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

struct TraceResult {
  std::vector<CycleStats> rows;
  SolveOutcome outcome;
};

// Runs to termination, one row per cycle. With `plane`, each row also counts
// the windowed active set.
TraceResult TraceRun(const ProblemInstance& inst, const SolverConfig& config,
                     const std::optional<HalfPlane>& plane = std::nullopt);

// Sorted active vertices after the unit-mode cycle that ends at `clock`.
// Throws Error(kBadSpec) when the search terminates earlier.
std::vector<VertexId> ActiveSetAtClock(const ProblemInstance& inst, int64_t clock,
                                       int workers = 1);

// |{active (x, y) : -t <= x <= t}| at clock t.
int64_t WindowedActiveCount(const ProblemInstance& inst, const HalfPlane& plane, int64_t t,
                            int workers = 1);

struct FractalRow {
  int32_t k = 0;      // t = 2^k
  int64_t t = 0;
  int32_t level = 0;  // omega_level
  int64_t n_t = 0;
  Fraction expected;  // level * (4/15) * t
  double ratio = 0;   // n_t / expected
  int64_t fast_edges = 0;
};

// For each k: all levels 1..k of the construction at t = 2^k, simulated to
// clock t.
std::vector<FractalRow> MeasureFractal(const std::vector<int32_t>& ks, int workers = 1);

struct BenchRow {
  std::string graph;  // "50x50x50"
  int32_t side = 0;
  int64_t vertices = 0;
  int64_t edges = 0;
  double wall_seconds = 0;  // median of the timed runs
  std::vector<double> samples;
  int64_t cycles = 0;
  int64_t f1 = 0;
  int64_t peak_active_vertices = 0;
  int64_t peak_active_edges = 0;
  int64_t peak_phantoms = 0;
};

struct BenchConfig {
  int workers = 1;
  int repetitions = 3;
  uint64_t seed = 1;
  double p_fast = 0.5;
};

// Cubes side^3 with water on the boundary, target at floor(side/2) on every
// axis, bernoulli {1,2} times, unit weights and no budget. One untimed
// warm-up run per cube.
std::vector<BenchRow> Bench(const std::vector<int32_t>& sides, const BenchConfig& config = {});

GridSpec BenchCubeSpec(int32_t side, const BenchConfig& config = {});

void WriteTraceCsv(std::ostream& out, const std::vector<CycleStats>& rows);
void WriteFractalCsv(std::ostream& out, const std::vector<FractalRow>& rows);
void WriteBenchCsv(std::ostream& out, const std::vector<BenchRow>& rows);
void WriteBenchJson(std::ostream& out, const std::vector<BenchRow>& rows, const BenchConfig& config);

}  // namespace cspath

#endif  // CSPATH_ANALYSIS_H_
