#include "cspath/oracle.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>

#include "cspath/error.h"
#include "cspath/instance_io.h"

namespace cspath {

OracleResult DpConstrainedShortest(const ProblemInstance& inst) {
  RequireValidInstance(inst);
  const Graph& g = inst.graph;
  const int64_t n = g.num_vertices();
  const int64_t width = inst.budget;  // weights 0 .. M-1
  if (width > kMaxOracleStates / std::max<int64_t>(n, 1)) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "M*|V| = " + std::to_string(width) + "*" + std::to_string(n));
  }

  constexpr int64_t kUnreached = std::numeric_limits<int64_t>::max();
  const int64_t num_states = n * width;
  std::vector<int64_t> dist(num_states, kUnreached);
  std::vector<int64_t> pred(num_states, -1);
  auto state = [width](int64_t v, int64_t w) { return v * width + w; };

  std::vector<uint8_t> is_target(n, 0);
  for (VertexId b : inst.targets) is_target[b] = 1;

  // (time, vertex, weight), popped in lexicographic order.
  using Entry = std::tuple<int64_t, int64_t, int64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  for (VertexId a : inst.sources) {
    dist[state(a, 0)] = 0;
    queue.emplace(0, a, 0);
  }

  OracleResult result;
  while (!queue.empty()) {
    const auto [time, v, w] = queue.top();
    queue.pop();
    if (time != dist[state(v, w)]) continue;
    if (is_target[v]) {
      result.feasible = true;
      result.f1 = time;
      result.f2 = w;
      for (int64_t s = state(v, w); s != -1; s = pred[s]) {
        result.path.push_back(static_cast<VertexId>(s / width));
      }
      std::reverse(result.path.begin(), result.path.end());
      return result;
    }
    for (HalfEdgeId h = g.first_edge(v); h < g.end_edge(v); ++h) {
      const HalfEdge& e = g.half_edge(h);
      const int64_t nw = w + e.weight;
      if (nw >= width) continue;
      const int64_t nt = time + e.initial_time;
      const int64_t ns = state(e.end, nw);
      if (nt < dist[ns]) {
        dist[ns] = nt;
        pred[ns] = state(v, w);
        queue.emplace(nt, e.end, nw);
      }
    }
  }
  return result;
}

OracleResult EnumeratePaths(const ProblemInstance& inst, int max_edges) {
  RequireValidInstance(inst);
  const Graph& g = inst.graph;
  if (g.num_vertices() > 12 && max_edges > 12) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "|V|=" + std::to_string(g.num_vertices()) +
                    " max_edges=" + std::to_string(max_edges));
  }
  std::vector<uint8_t> is_target(g.num_vertices(), 0);
  for (VertexId b : inst.targets) is_target[b] = 1;

  OracleResult best;
  std::vector<VertexId> path;
  std::vector<uint8_t> on_path(g.num_vertices(), 0);

  // Ties: smaller weight, then lexicographically smaller vertex sequence.
  auto offer = [&](int64_t time, Label weight) {
    if (best.feasible &&
        std::tie(best.f1, best.f2, best.path) <= std::tie(time, weight, path)) {
      return;
    }
    best.feasible = true;
    best.f1 = time;
    best.f2 = weight;
    best.path = path;
  };

  std::function<void(VertexId, int64_t, Label)> dfs = [&](VertexId v, int64_t time, Label weight) {
    if (is_target[v]) {
      offer(time, weight);
      return;  // continuing past a target cannot be faster
    }
    if (static_cast<int>(path.size()) - 1 >= max_edges) return;
    if (best.feasible && time > best.f1) return;
    for (HalfEdgeId h = g.first_edge(v); h < g.end_edge(v); ++h) {
      const HalfEdge& e = g.half_edge(h);
      if (on_path[e.end] || weight + e.weight >= inst.budget) continue;
      on_path[e.end] = 1;
      path.push_back(e.end);
      dfs(e.end, time + e.initial_time, weight + e.weight);
      path.pop_back();
      on_path[e.end] = 0;
    }
  };

  std::vector<VertexId> sources = inst.sources;
  std::sort(sources.begin(), sources.end());
  for (VertexId a : sources) {
    on_path[a] = 1;
    path.assign(1, a);
    dfs(a, 0, 0);
    on_path[a] = 0;
  }
  return best;
}

AgreementReport Compare(const ProblemInstance& inst, const SolveOutcome& engine,
                        const OracleResult& oracle) {
  AgreementReport report;
  std::ostringstream msg;
  if (engine.kind == OutcomeKind::kBudgetExceeded) {
    msg << "engine exceeded its cycle budget";
  } else if (engine.reached() != oracle.feasible) {
    msg << "feasibility differs: engine " << (engine.reached() ? "reached" : "infeasible")
        << ", oracle " << (oracle.feasible ? "feasible" : "infeasible");
  } else if (engine.reached() && engine.f1 != oracle.f1) {
    msg << "F1 differs: engine " << engine.f1 << ", oracle " << oracle.f1;
  } else {
    report.agree = true;
    report.summary = "agree";
    return report;
  }
  report.summary = msg.str();
  std::ostringstream dump;
  WriteInstance(dump, inst);
  report.dump = dump.str();
  return report;
}

}  // namespace cspath
