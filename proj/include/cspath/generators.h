#ifndef CSPATH_GENERATORS_H_
#define CSPATH_GENERATORS_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cspath/engine.h"
#include "cspath/graph.h"

namespace cspath {

// ---------------------------------------------------------------------------
// Lattice grids in up to four dimensions.

struct ValueRule {
  enum class Kind { kConstant, kUniform, kBernoulli };
  Kind kind = Kind::kConstant;
  int64_t lo = 1;  // constant value, or uniform lower bound
  int64_t hi = 1;  // uniform upper bound
  double p = 0.5;  // bernoulli: probability of 1, otherwise 2

  static ValueRule Constant(int64_t c) { return {Kind::kConstant, c, c, 0.5}; }
  static ValueRule Uniform(int64_t lo, int64_t hi) { return {Kind::kUniform, lo, hi, 0.5}; }
  static ValueRule Bernoulli(double p) { return {Kind::kBernoulli, 1, 2, p}; }
};

enum class SourceRule { kBoundary, kAxisX, kSet };
// kCenter needs every side odd; kCenterFloor takes side/2 on each axis.
enum class TargetRule { kCenter, kCenterFloor, kSet };

struct GridSpec {
  std::vector<int32_t> dims;
  ValueRule f1;
  ValueRule f2;
  SourceRule sources = SourceRule::kBoundary;
  std::vector<VertexId> source_set;
  TargetRule targets = TargetRule::kCenter;
  std::vector<VertexId> target_set;
  uint64_t seed = 0;
  std::optional<Label> budget;  // nullopt: unconstrained
};

// Row-major id with the first coordinate varying fastest.
class GridIndex {
 public:
  explicit GridIndex(std::vector<int32_t> dims);
  int64_t size() const { return size_; }
  const std::vector<int32_t>& dims() const { return dims_; }
  VertexId Id(const std::vector<int32_t>& coords) const;
  std::vector<int32_t> Coords(VertexId id) const;
  int64_t stride(size_t axis) const { return strides_[axis]; }

 private:
  std::vector<int32_t> dims_;
  std::vector<int64_t> strides_;
  int64_t size_ = 1;
};

// Throws Error(kBadSpec).
ProblemInstance GenGrid(const GridSpec& spec);

// Number of nearest-neighbour edges of the grid, without building it.
int64_t GridEdgeCount(const std::vector<int32_t>& dims);

// ---------------------------------------------------------------------------
// Random sparse graphs: a random forest of `n - components` tree edges plus
// `extra_edges` random chords, f1/f2 uniform, random disjoint A and B.

struct RandomGraphSpec {
  int32_t n = 10;
  int32_t components = 1;
  int32_t extra_edges = 5;
  int64_t f_lo = 1;
  int64_t f_hi = 5;
  int32_t num_sources = 1;
  int32_t num_targets = 1;
  Label budget = 10;
  uint64_t seed = 0;
};

ProblemInstance GenRandomGraph(const RandomGraphSpec& spec);

// Member `index` of a seeded mixed suite: even indices are 2-D grids with
// sides in [2,12], odd ones random sparse graphs of 5..150 vertices in 1..3
// components. f1, f2 in [1,5], M in [5,40], small random A and B.
ProblemInstance SuiteInstance(uint64_t seed, int32_t index);

// ---------------------------------------------------------------------------
// The half plane V_n = [-n, n] x [0, n] with water on the x axis.

struct Point {
  int32_t x = 0;
  int32_t y = 0;
  auto operator<=>(const Point&) const = default;
};

class HalfPlane {
 public:
  explicit HalfPlane(int32_t n) : n_(n) {}
  int32_t n() const { return n_; }
  int32_t num_vertices() const { return (2 * n_ + 1) * (n_ + 1); }
  bool Contains(Point p) const { return p.x >= -n_ && p.x <= n_ && p.y >= 0 && p.y <= n_; }
  VertexId Id(Point p) const { return (p.x + n_) + (2 * n_ + 1) * p.y; }
  Point At(VertexId id) const {
    return {id % (2 * n_ + 1) - n_, id / (2 * n_ + 1)};
  }

 private:
  int32_t n_;
};

// Unit-time lattice edges, stored as (min id, max id).
using FastEdgeSet = std::vector<std::pair<VertexId, VertexId>>;

// All edges f2=1 and f1=2 except `fast` (f1=1). A = the x axis, B = the top
// right corner, M unconstrained.
ProblemInstance HalfPlaneInstance(const HalfPlane& plane, const FastEdgeSet& fast);

// The y axis is fast, everything else slow. n >= 4.
ProblemInstance GenSpeedway(int32_t n);

// Closed-form active set of the speedway at clock T >= 2, clipped to V_n.
std::vector<Point> SpeedwayActiveSet(int32_t T, int32_t n);

// ---------------------------------------------------------------------------
// Fractal environments: t = 2^k; level j refines every triangle of level j-1
// by making its two mid-segments fast.

struct FractalSpec {
  int32_t k = 1;
  int32_t levels = 0;  // 0 means k
  int32_t n = 0;       // half-width of V_n; 0 means 2t

  int32_t t() const { return int32_t{1} << k; }
  int32_t effective_levels() const { return levels == 0 ? k : levels; }
  int32_t effective_n() const { return n == 0 ? 2 * t() : n; }
};

struct Triangle {
  Point left;    // end of the slow side on the x axis side
  Point corner;  // where the two fast sides meet
  Point top;     // other end of the slow side
};

struct FractalFamily {
  HalfPlane plane{1};
  // environments[j-1] is omega_j.
  std::vector<ProblemInstance> environments;
  // Fast edges of each level, cumulative.
  std::vector<FastEdgeSet> fast_edges;
  // Left-side triangles still to be refined after each level.
  std::vector<std::vector<Triangle>> triangles;

  const ProblemInstance& instance() const { return environments.back(); }
};

// Throws Error(kBadSpec) for k < 1, levels outside [1, k] or n < t.
FractalFamily GenFractal(const FractalSpec& spec);

// Monotone lattice staircase from a to b whose vertices stay closest to the
// straight segment; ties step vertically first.
std::vector<Point> RasterizeSegment(Point a, Point b);

struct Fraction {
  int64_t numerator = 0;
  int64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / denominator; }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

// Continuum prediction k * (4/15) * t for the windowed active count.
Fraction FractalExpectedCount(int32_t k, int64_t t);

// alpha = 4 / (15 ln 2), so alpha * t * ln t equals the prediction at t = 2^k.
inline constexpr double kFractalAlpha = 0.38471867757039024;  // 4/(15*ln 2)
double FractalAlphaBound(int64_t t);

// ---------------------------------------------------------------------------
// Worked-example fixtures.

struct FixtureCheckpoint {
  int64_t clock = 0;  // state after the jump-mode cycle ending at this clock
  std::string event;
  // nullopt when the narrated event holds in the solver's state.
  std::function<std::optional<std::string>(const Solver&)> verify;
};

struct MechanismFixture {
  std::string name;
  ProblemInstance instance;
  std::vector<FixtureCheckpoint> checkpoints;
};

// Four tiny graphs, each isolating one event of the worked example:
// first-arrival labelling, edge re-sourcing with time restoration,
// deactivation of an edge neither direction can improve, and phantom
// creation at an already active vertex.
std::vector<MechanismFixture> MechanismFixtures();

// The twelve-vertex worked example (vertex name k has id k-1), A = {1,2,3},
// B = {12}, M = 19, with checkpoints along its timeline.
MechanismFixture WorkedExample();

// Runs the fixture cycle by cycle and returns one message per checkpoint whose
// event did not happen; empty when all hold.
std::vector<std::string> RunFixture(const MechanismFixture& fixture,
                                    const SolverConfig& config = {});

}  // namespace cspath

#endif  // CSPATH_GENERATORS_H_
