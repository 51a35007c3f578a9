#include "cspath/reconstruct.h"

#include <algorithm>

#include "cspath/error.h"

namespace cspath {
namespace {

// Same vertex ids, with every edge touching a removed vertex dropped.
Graph WithoutVertices(const Graph& g, const std::vector<uint8_t>& removed) {
  std::vector<EdgeSpec> kept;
  for (const EdgeSpec& e : g.EdgeList()) {
    if (!removed[e.u] && !removed[e.v]) kept.push_back(e);
  }
  return Graph::Build(g.num_vertices(), kept);
}

}  // namespace

TerminalStep ExtractTerminal(const SolveOutcome& outcome) {
  if (!outcome.reached()) throw Error(ErrorCode::kNotReached, "outcome is not Reached");
  return TerminalStep{outcome.terminal, outcome.arrival.edge, outcome.arrival.origin,
                      outcome.arrival.via_phantom, outcome.f2};
}

PathWitness ReconstructPath(const ProblemInstance& inst, const SolverConfig& config) {
  const Graph& g = inst.graph;
  SolveOutcome current = Solve(inst, config);
  if (!current.reached()) throw Error(ErrorCode::kNotReached, "instance is infeasible");

  std::vector<uint8_t> is_source(g.num_vertices(), 0);
  for (VertexId a : inst.sources) is_source[a] = 1;
  std::vector<uint8_t> removed(g.num_vertices(), 0);
  for (VertexId b : inst.targets) removed[b] = 1;

  std::vector<VertexId> reversed{current.terminal};
  for (;;) {
    const TerminalStep step = ExtractTerminal(current);
    const HalfEdge& last = g.half_edge(g.FindHalfEdge(step.origin, step.terminal));
    const int64_t time_left = current.f1 - last.initial_time;
    const Label weight_left = current.f2 - last.weight;
    reversed.push_back(step.origin);

    if (is_source[step.origin]) {
      // Water leaving a source is always its initial flow, started at time 0.
      if (time_left != 0) {
        throw Error(ErrorCode::kReconstructionMismatch,
                    "source " + std::to_string(step.origin) + " reached with " +
                        std::to_string(time_left) + " time units unaccounted");
      }
      break;
    }

    ProblemInstance sub;
    sub.graph = WithoutVertices(g, removed);
    sub.sources = inst.sources;
    sub.targets = {step.origin};
    sub.budget = weight_left + 1;
    const SolveOutcome next = Solve(sub, config);
    if (!next.reached() || next.f1 != time_left) {
      throw Error(ErrorCode::kReconstructionMismatch,
                  "re-solve toward " + std::to_string(step.origin) + " expected F1=" +
                      std::to_string(time_left) + ", got " +
                      (next.reached() ? std::to_string(next.f1) : std::string("no path")));
    }
    removed[step.origin] = 1;
    current = next;
  }

  PathWitness witness;
  witness.vertices.assign(reversed.rbegin(), reversed.rend());
  for (size_t i = 0; i + 1 < witness.vertices.size(); ++i) {
    const HalfEdge& e = g.half_edge(g.FindHalfEdge(witness.vertices[i], witness.vertices[i + 1]));
    witness.f1 += e.initial_time;
    witness.f2 += e.weight;
  }
  return witness;
}

std::optional<std::string> ValidatePath(const ProblemInstance& inst, const PathWitness& witness) {
  const Graph& g = inst.graph;
  const std::vector<VertexId>& path = witness.vertices;
  if (path.empty()) return "empty path";
  for (VertexId v : path) {
    if (v < 0 || v >= g.num_vertices()) return "vertex out of range: " + std::to_string(v);
  }
  auto contains = [](const std::vector<VertexId>& set, VertexId v) {
    return std::find(set.begin(), set.end(), v) != set.end();
  };
  if (!contains(inst.sources, path.front())) {
    return "path starts outside A at " + std::to_string(path.front());
  }
  if (!contains(inst.targets, path.back())) {
    return "path ends outside B at " + std::to_string(path.back());
  }
  int64_t f1 = 0;
  Label f2 = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const HalfEdgeId h = g.FindHalfEdge(path[i], path[i + 1]);
    if (h == kNoEdge) {
      return "not adjacent: " + std::to_string(path[i]) + " and " + std::to_string(path[i + 1]);
    }
    f1 += g.half_edge(h).initial_time;
    f2 += g.half_edge(h).weight;
  }
  if (f1 != witness.f1) {
    return "F1 mismatch: path sums to " + std::to_string(f1) + ", witness says " +
           std::to_string(witness.f1);
  }
  if (f2 != witness.f2) {
    return "F2 mismatch: path sums to " + std::to_string(f2) + ", witness says " +
           std::to_string(witness.f2);
  }
  if (f2 >= inst.budget) {
    return "constraint violated: F2=" + std::to_string(f2) + " >= M=" +
           std::to_string(inst.budget);
  }
  return std::nullopt;
}

}  // namespace cspath
