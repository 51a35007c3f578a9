#include "cspath/engine.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <tuple>

#include "cspath/error.h"

namespace cspath {
namespace {

template <typename T>
void SortUnique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
void SortUniqueDescending(std::vector<T>& v) {
  std::sort(v.begin(), v.end(), std::greater<T>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct PhantomArrival {
  VertexId destination;
  Label candidate;
  VertexId source;
  HalfEdgeId underlying;
  int64_t index;
};

}  // namespace

Solver::Solver(const ProblemInstance& inst, const SolverConfig& config)
    : inst_(&inst), config_(config) {
  RequireValidInstance(inst);
  if (config.cycle_budget && *config.cycle_budget < 1) {
    throw Error(ErrorCode::kBadSpec, "cycle budget must be >= 1");
  }
  pool_ = std::make_unique<WorkerPool>(std::max(1, config.workers));
  Init();
}

Solver::~Solver() = default;

void Solver::Init() {
  const Graph& g = inst_->graph;
  const Label budget = inst_->budget;
  const int32_t n = g.num_vertices();

  state_ = SolverState{};
  state_.vertices.resize(n);
  state_.arrivals.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    state_.vertices[v] = VertexRecord{v, 0, VertexStatus::kInactive,
                                      g.degree(v) > 0 ? g.first_edge(v) : kNoEdge, kEmptyLabel};
  }
  state_.edges.resize(g.num_half_edges());
  for (HalfEdgeId h = 0; h < g.num_half_edges(); ++h) {
    const HalfEdge& he = g.half_edge(h);
    state_.edges[h] = HalfEdgeRecord{he.start, he.end, 0, he.weight, he.initial_time,
                                     0, EdgeStatus::kPassive, he.twin};
  }

  std::vector<uint8_t> is_source(n, 0);
  for (VertexId a : inst_->sources) is_source[a] = 1;
  is_target_.assign(n, 0);
  for (VertexId b : inst_->targets) is_target_[b] = 1;

  for (VertexId a : inst_->sources) {
    VertexRecord& rec = state_.vertices[a];
    rec.label = budget;
    rec.status = VertexStatus::kActive;
    state_.active_vertices.push_back(a);
    for (HalfEdgeId h = g.first_edge(a); h < g.end_edge(a); ++h) {
      HalfEdgeRecord& e = state_.edges[h];
      // Between two sources only the copy leaving the smaller id carries water.
      if (is_source[e.end] && e.end < a) continue;
      e.status = EdgeStatus::kActive;
      e.remaining_time = e.initial_time;
      e.flow_label = budget;
      state_.active_edges.push_back(h);
    }
  }
  SortUniqueDescending(state_.active_vertices);
  SortUniqueDescending(state_.active_edges);
}

Label Solver::EffectiveLabel(VertexId v) const {
  const VertexRecord& rec = state_.vertices[v];
  return std::max(rec.label, rec.temp_label);
}

bool Solver::Improves(VertexId v) const {
  const VertexRecord& rec = state_.vertices[v];
  return rec.temp_label > rec.label && rec.temp_label > 0;
}

ActiveCounts Solver::Counts() const {
  return {static_cast<int64_t>(state_.active_vertices.size()),
          static_cast<int64_t>(state_.active_edges.size()),
          static_cast<int64_t>(state_.phantoms.size())};
}

std::vector<Label> Solver::Labels() const {
  std::vector<Label> labels(state_.vertices.size());
  for (size_t v = 0; v < labels.size(); ++v) labels[v] = state_.vertices[v].label;
  return labels;
}

int64_t Solver::AdvanceTime() {
  assert(state_.triggered_vertices.empty() && state_.triggered_edges.empty());
  int64_t delta = 1;
  if (config_.time_mode == TimeMode::kJump) {
    int64_t next = std::numeric_limits<int64_t>::max();
    for (HalfEdgeId h : state_.active_edges) {
      next = std::min(next, state_.edges[h].remaining_time);
    }
    for (const PhantomRecord& p : state_.phantoms) next = std::min(next, p.remaining_time);
    if (next != std::numeric_limits<int64_t>::max()) delta = next;
  }
  state_.clock += delta;
  last_delta_ = delta;

  state_.triggered_vertices = pool_->Gather<VertexId>(
      state_.active_edges.size(), [&](int64_t i, std::vector<VertexId>& slot) {
        HalfEdgeRecord& e = state_.edges[state_.active_edges[i]];
        e.remaining_time -= delta;
        assert(e.remaining_time >= 0);
        if (e.remaining_time == 0) {
          e.status = EdgeStatus::kJustUsed;
          slot.push_back(e.end);
        }
      });
  pool_->For(state_.phantoms.size(),
             [&](int64_t i) { state_.phantoms[i].remaining_time -= delta; });
  SortUnique(state_.triggered_vertices);
  return delta;
}

void Solver::AnalyzeTriggered() {
  const Graph& g = inst_->graph;
  pool_->For(state_.triggered_vertices.size(), [&](int64_t i) {
    const VertexId q = state_.triggered_vertices[i];
    Label best = kEmptyLabel;
    HalfEdgeId best_edge = kNoEdge;
    for (HalfEdgeId h = g.first_edge(q); h < g.end_edge(q); ++h) {
      const HalfEdgeId in = state_.edges[h].twin;
      const HalfEdgeRecord& e = state_.edges[in];
      if (e.status != EdgeStatus::kJustUsed) continue;
      const Label candidate = e.flow_label - e.weight;
      if (best_edge == kNoEdge || candidate > best || (candidate == best && in < best_edge)) {
        best = candidate;
        best_edge = in;
      }
    }
    assert(best_edge != kNoEdge);
    state_.vertices[q].temp_label = best;
    state_.arrivals[q] = Arrival{state_.edges[best_edge].start, best_edge, false};
  });
}

void Solver::AdvancePhantoms() {
  std::vector<PhantomArrival> arrivals = pool_->Gather<PhantomArrival>(
      state_.phantoms.size(), [&](int64_t i, std::vector<PhantomArrival>& slot) {
        const PhantomRecord& p = state_.phantoms[i];
        if (p.remaining_time != 0) return;
        slot.push_back({p.destination, p.label - state_.edges[p.underlying].weight, p.source,
                        p.underlying, i});
      });
  if (arrivals.empty()) return;

  // Several phantoms may land on one vertex in the same cycle; the best
  // candidate wins, ties toward the smaller underlying half-edge.
  std::sort(arrivals.begin(), arrivals.end(), [](const PhantomArrival& a, const PhantomArrival& b) {
    return std::tuple(a.destination, -a.candidate, a.underlying, a.index) <
           std::tuple(b.destination, -b.candidate, b.underlying, b.index);
  });
  std::vector<VertexId> added;
  for (size_t i = 0; i < arrivals.size(); ++i) {
    const PhantomArrival& a = arrivals[i];
    if (i > 0 && arrivals[i - 1].destination == a.destination) continue;
    VertexRecord& dest = state_.vertices[a.destination];
    if (a.candidate <= 0 || a.candidate <= dest.label || a.candidate <= dest.temp_label) continue;
    if (dest.temp_label == kEmptyLabel) added.push_back(a.destination);
    dest.temp_label = a.candidate;
    state_.arrivals[a.destination] = Arrival{a.source, a.underlying, true};
  }
  if (added.empty()) return;
  std::vector<VertexId> merged;
  merged.reserve(state_.triggered_vertices.size() + added.size());
  std::merge(state_.triggered_vertices.begin(), state_.triggered_vertices.end(), added.begin(),
             added.end(), std::back_inserter(merged));
  state_.triggered_vertices = std::move(merged);
}

void Solver::TriggerEdges() {
  const Graph& g = inst_->graph;
  struct EdgeAction {
    HalfEdgeId edge;
    bool cancel;
  };
  std::vector<EdgeAction> actions = pool_->Gather<EdgeAction>(
      state_.triggered_vertices.size(), [&](int64_t i, std::vector<EdgeAction>& slot) {
        const VertexId q = state_.triggered_vertices[i];
        if (!Improves(q)) return;
        const Label label = EffectiveLabel(q);
        for (HalfEdgeId h = g.first_edge(q); h < g.end_edge(q); ++h) {
          const HalfEdgeRecord& e = state_.edges[h];
          const Label candidate = label - e.weight;
          if (candidate > 0 && candidate > EffectiveLabel(e.end)) {
            slot.push_back({h, false});
          }
          const HalfEdgeRecord& in = state_.edges[e.twin];
          if (in.status == EdgeStatus::kActive && in.flow_label - in.weight <= label) {
            slot.push_back({e.twin, true});
          }
        }
      });
  std::vector<HalfEdgeId> triggered;
  state_.cancelled_edges.clear();
  for (const EdgeAction& a : actions) {
    // One entry per undirected edge, so step 5 owns both directions.
    if (a.cancel) {
      state_.cancelled_edges.push_back(a.edge);
    } else {
      triggered.push_back(std::min(a.edge, state_.edges[a.edge].twin));
    }
  }
  SortUnique(triggered);
  SortUnique(state_.cancelled_edges);
  state_.triggered_edges = std::move(triggered);
}

void Solver::ProcessTriggeredEdges() {
  std::vector<PhantomRecord> created = pool_->Gather<PhantomRecord>(
      state_.triggered_edges.size(), [&](int64_t i, std::vector<PhantomRecord>& slot) {
        const HalfEdgeId h = state_.triggered_edges[i];
        const HalfEdgeRecord& e = state_.edges[h];
        const Label lp = EffectiveLabel(e.start);
        const Label lr = EffectiveLabel(e.end);
        const bool start_is_source = lp > lr || (lp == lr && e.start < e.end);
        const HalfEdgeId out = start_is_source ? h : e.twin;
        HalfEdgeRecord& fwd = state_.edges[out];
        const VertexId s = fwd.start;
        const Label source_label = EffectiveLabel(s);
        if (state_.vertices[s].status == VertexStatus::kInactive) {
          fwd.status = EdgeStatus::kActive;
          fwd.remaining_time = fwd.initial_time;
          fwd.flow_label = source_label;
          HalfEdgeRecord& back = state_.edges[fwd.twin];
          if (back.status == EdgeStatus::kActive) {
            back.status = EdgeStatus::kPassive;
            back.remaining_time = 0;
            back.flow_label = 0;
          }
          state_.triggered_edges[i] = out;
        } else {
          slot.push_back(PhantomRecord{s, fwd.end, source_label, fwd.initial_time, out});
          state_.triggered_edges[i] = kNoEdge;
        }
      });
  std::erase(state_.triggered_edges, kNoEdge);

  // Only the end vertex of an active half-edge cancels it, and an active
  // half-edge's start was active before this cycle, so step 5 never
  // re-activates a cancelled edge.
  pool_->For(state_.cancelled_edges.size(), [&](int64_t i) {
    HalfEdgeRecord& e = state_.edges[state_.cancelled_edges[i]];
    e.status = EdgeStatus::kPassive;
    e.remaining_time = 0;
    e.flow_label = 0;
  });
  state_.cancelled_edges.clear();
  state_.phantoms.insert(state_.phantoms.end(), created.begin(), created.end());
}

std::optional<SolveOutcome> Solver::CheckTermination() {
  VertexId best = -1;
  for (VertexId q : state_.triggered_vertices) {
    if (!is_target_[q] || !Improves(q)) continue;
    if (best == -1 || state_.vertices[q].temp_label > state_.vertices[best].temp_label) best = q;
  }
  if (best != -1) {
    SolveOutcome out;
    out.kind = OutcomeKind::kReached;
    out.f1 = state_.clock;
    out.f2 = inst_->budget - state_.vertices[best].temp_label;
    out.terminal = best;
    out.arrival = state_.arrivals[best];
    return out;
  }

  auto is_active = [&](HalfEdgeId h) { return state_.edges[h].status == EdgeStatus::kActive; };
  const bool flows_left =
      std::any_of(state_.active_edges.begin(), state_.active_edges.end(), is_active) ||
      !state_.triggered_edges.empty() ||
      std::any_of(state_.phantoms.begin(), state_.phantoms.end(),
                  [](const PhantomRecord& p) { return p.remaining_time > 0; });
  if (flows_left) return std::nullopt;
  SolveOutcome out;
  out.kind = OutcomeKind::kInfeasible;
  return out;
}

void Solver::FinalizePhantoms() {
  std::erase_if(state_.phantoms, [](const PhantomRecord& p) { return p.remaining_time == 0; });
}

void Solver::FinalizeVertices() {
  const Graph& g = inst_->graph;
  std::vector<VertexId> activated = pool_->Gather<VertexId>(
      state_.triggered_vertices.size(), [&](int64_t i, std::vector<VertexId>& slot) {
        const VertexId q = state_.triggered_vertices[i];
        VertexRecord& rec = state_.vertices[q];
        // An already active vertex keeps its label; its phantoms carry the
        // better water.
        if (Improves(q) && rec.status == VertexStatus::kInactive) {
          rec.label = rec.temp_label;
          rec.status = VertexStatus::kActive;
          slot.push_back(q);
        }
        rec.temp_label = kEmptyLabel;
        state_.arrivals[q] = Arrival{};
      });

  state_.active_vertices.insert(state_.active_vertices.end(), activated.begin(), activated.end());
  SortUniqueDescending(state_.active_vertices);

  // Edge activations from step 5 are already visible in the statuses, so a
  // vertex re-sourcing an edge this cycle keeps its activity.
  pool_->For(state_.active_vertices.size(), [&](int64_t i) {
    const VertexId q = state_.active_vertices[i];
    bool sourcing = false;
    for (HalfEdgeId h = g.first_edge(q); h < g.end_edge(q) && !sourcing; ++h) {
      sourcing = state_.edges[h].status == EdgeStatus::kActive;
    }
    if (!sourcing) state_.vertices[q].status = VertexStatus::kInactive;
  });
  std::erase_if(state_.active_vertices, [&](VertexId q) {
    return state_.vertices[q].status == VertexStatus::kInactive;
  });
}

void Solver::FinalizeEdges() {
  state_.active_edges.insert(state_.active_edges.end(), state_.triggered_edges.begin(),
                             state_.triggered_edges.end());
  pool_->For(state_.active_edges.size(), [&](int64_t i) {
    HalfEdgeRecord& e = state_.edges[state_.active_edges[i]];
    if (e.status == EdgeStatus::kJustUsed) {
      e.status = EdgeStatus::kUsed;
      e.flow_label = 0;
    }
  });
  std::erase_if(state_.active_edges,
                [&](HalfEdgeId h) { return state_.edges[h].status != EdgeStatus::kActive; });
  SortUniqueDescending(state_.active_edges);
  state_.triggered_edges.clear();
  state_.triggered_vertices.clear();
}

std::optional<SolveOutcome> Solver::RunCycle() {
  const int64_t delta = AdvanceTime();
  AnalyzeTriggered();
  AdvancePhantoms();
  const auto triggered = static_cast<int64_t>(state_.triggered_vertices.size());
  TriggerEdges();
  ProcessTriggeredEdges();
  std::optional<SolveOutcome> verdict = CheckTermination();
  FinalizePhantoms();
  FinalizeVertices();
  FinalizeEdges();
  ++cycles_;
  if (config_.trace) {
    const ActiveCounts c = Counts();
    trace_.push_back({state_.clock, delta, c.vertices, c.edges, c.phantoms, triggered});
  }
  if (verdict) verdict->cycles = cycles_;
  return verdict;
}

SolveOutcome Solver::Run() {
  for (;;) {
    if (config_.cycle_budget && cycles_ >= *config_.cycle_budget) {
      SolveOutcome out;
      out.kind = OutcomeKind::kBudgetExceeded;
      out.cycles = cycles_;
      return out;
    }
    if (std::optional<SolveOutcome> verdict = RunCycle()) return *verdict;
  }
}

SolveOutcome Solve(const ProblemInstance& inst, const SolverConfig& config,
                   std::vector<CycleRecord>* trace) {
  SolverConfig cfg = config;
  if (trace) cfg.trace = true;
  Solver solver(inst, cfg);
  SolveOutcome out = solver.Run();
  if (trace) *trace = solver.trace();
  return out;
}

}  // namespace cspath
