#ifndef CSPATH_RECONSTRUCT_H_
#define CSPATH_RECONSTRUCT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cspath/engine.h"
#include "cspath/graph.h"

namespace cspath {

struct PathWitness {
  std::vector<VertexId> vertices;  // A-vertex ... B-vertex
  int64_t f1 = 0;
  Label f2 = 0;
};

// What a Reached outcome says about the last step of the optimal path.
struct TerminalStep {
  VertexId terminal = -1;
  HalfEdgeId edge = kNoEdge;  // half-edge origin -> terminal
  VertexId origin = -1;       // second to last vertex
  bool via_phantom = false;
  Label f2 = 0;
};

// Throws Error(kNotReached) unless the outcome is Reached.
TerminalStep ExtractTerminal(const SolveOutcome& outcome);

// Recovers a full optimal path by re-solving toward the second to last
// vertex, with the previous targets removed and the budget cut to the weight
// still available, until the origin is a source.
//
// Throws Error(kNotReached) when the instance is infeasible and
// Error(kReconstructionMismatch) if a re-solve disagrees with the time left.
PathWitness ReconstructPath(const ProblemInstance& inst, const SolverConfig& config = {});

// nullopt when the witness is a valid A-B path with the stated sums and
// weight below the budget; otherwise the first violation found.
std::optional<std::string> ValidatePath(const ProblemInstance& inst, const PathWitness& witness);

}  // namespace cspath

#endif  // CSPATH_RECONSTRUCT_H_
