#ifndef CSPATH_ENGINE_H_
#define CSPATH_ENGINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cspath/graph.h"
#include "cspath/parallel.h"

namespace cspath {

// Between cycles every temporary label holds this value.
inline constexpr Label kEmptyLabel = -1;

enum class VertexStatus : uint8_t { kInactive, kActive };
enum class EdgeStatus : uint8_t { kPassive, kActive, kUsed, kJustUsed };

// Five integers per vertex: name, label, status, first edge, temporary label.
struct VertexRecord {
  VertexId name = 0;
  Label label = 0;
  VertexStatus status = VertexStatus::kInactive;
  HalfEdgeId first_edge = kNoEdge;
  Label temp_label = kEmptyLabel;
};

// Eight integers per stored edge direction. An active half-edge carries a flow
// of quality `flow_label` from `start` that arrives after `remaining_time`.
struct HalfEdgeRecord {
  VertexId start = 0;
  VertexId end = 0;
  int64_t remaining_time = 0;
  int64_t weight = 1;
  int64_t initial_time = 1;
  Label flow_label = 0;
  EdgeStatus status = EdgeStatus::kPassive;
  HalfEdgeId twin = kNoEdge;
};

// A transient copy of `underlying` carrying better water out of a vertex that
// was already active when the water arrived.
struct PhantomRecord {
  VertexId source = 0;
  VertexId destination = 0;
  Label label = 0;
  int64_t remaining_time = 0;
  HalfEdgeId underlying = kNoEdge;
};

// How the best water of the current cycle reached a vertex. For phantom
// arrivals `origin` is the phantom's source, i.e. the vertex it copies.
struct Arrival {
  VertexId origin = -1;
  HalfEdgeId edge = kNoEdge;
  bool via_phantom = false;

  friend bool operator==(const Arrival&, const Arrival&) = default;
};

enum class TimeMode { kUnit, kJump };

struct SolverConfig {
  // kUnit advances the clock by one per cycle; kJump advances it to the next
  // arrival. Both produce the same outcome.
  TimeMode time_mode = TimeMode::kJump;
  std::optional<int64_t> cycle_budget;
  bool trace = false;
  int workers = 1;
};

struct SolverState {
  int64_t clock = 0;
  std::vector<VertexRecord> vertices;
  std::vector<HalfEdgeRecord> edges;
  std::vector<VertexId> active_vertices;  // sorted descending
  std::vector<HalfEdgeId> active_edges;   // sorted descending
  std::vector<VertexId> triggered_vertices;
  std::vector<HalfEdgeId> triggered_edges;
  // Incoming flows that can no longer improve their improved end vertex.
  std::vector<HalfEdgeId> cancelled_edges;
  std::vector<PhantomRecord> phantoms;
  // Best arrival per vertex; meaningful while temp_label is set.
  std::vector<Arrival> arrivals;
};

enum class OutcomeKind { kReached, kInfeasible, kBudgetExceeded };

struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::kInfeasible;
  int64_t f1 = 0;
  Label f2 = 0;
  VertexId terminal = -1;
  Arrival arrival;
  int64_t cycles = 0;

  bool reached() const { return kind == OutcomeKind::kReached; }
  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

// One row per cycle: clock after the cycle, the advance, and the sizes of the
// working sets.
struct CycleRecord {
  int64_t t = 0;
  int64_t delta = 0;
  int64_t active_vertices = 0;
  int64_t active_edges = 0;
  int64_t phantoms = 0;
  int64_t triggered = 0;

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct ActiveCounts {
  int64_t vertices = 0;
  int64_t edges = 0;
  int64_t phantoms = 0;
};

// Frontier-based label-correcting search for the fastest A-B path whose
// weight stays below the budget. Water of quality M leaves every source; an
// edge costs its weight in quality and its time in clock ticks, and the clock
// at the first arrival of positive-quality water in B is the answer.
//
// Each cycle runs nine bulk steps over the active working sets. The instance
// must outlive the solver.
class Solver {
 public:
  // Throws Error(kInvalidInstance).
  Solver(const ProblemInstance& inst, const SolverConfig& config);
  ~Solver();

  // One full cycle. Returns the verdict of the termination check; the state is
  // consistent afterwards either way.
  std::optional<SolveOutcome> RunCycle();

  // Cycles until termination or until the cycle budget runs out.
  SolveOutcome Run();

  // The nine steps, exposed for inspection and testing.
  int64_t AdvanceTime();            // 1
  void AnalyzeTriggered();          // 2
  void AdvancePhantoms();           // 3
  void TriggerEdges();              // 4
  void ProcessTriggeredEdges();     // 5
  std::optional<SolveOutcome> CheckTermination();  // 6
  void FinalizePhantoms();          // 7
  void FinalizeVertices();          // 8
  void FinalizeEdges();             // 9

  const SolverState& state() const { return state_; }
  SolverState& mutable_state() { return state_; }
  const ProblemInstance& instance() const { return *inst_; }
  const std::vector<CycleRecord>& trace() const { return trace_; }
  int64_t cycles() const { return cycles_; }

  ActiveCounts Counts() const;
  std::vector<Label> Labels() const;

  // max(label, temp_label): the best quality known at v within this cycle.
  Label EffectiveLabel(VertexId v) const;
  // True when v's pending temporary label beats its label.
  bool Improves(VertexId v) const;

 private:
  void Init();

  const ProblemInstance* inst_;
  SolverConfig config_;
  std::unique_ptr<WorkerPool> pool_;
  SolverState state_;
  std::vector<uint8_t> is_target_;
  std::vector<CycleRecord> trace_;
  int64_t cycles_ = 0;
  int64_t last_delta_ = 0;
};

// Convenience wrapper: construct and Run.
SolveOutcome Solve(const ProblemInstance& inst, const SolverConfig& config = {},
                   std::vector<CycleRecord>* trace = nullptr);

}  // namespace cspath

#endif  // CSPATH_ENGINE_H_
