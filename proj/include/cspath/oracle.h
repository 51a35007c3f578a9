#ifndef CSPATH_ORACLE_H_
#define CSPATH_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cspath/engine.h"
#include "cspath/graph.h"

namespace cspath {

// Ground truth for the weight-constrained shortest path problem.
struct OracleResult {
  bool feasible = false;
  int64_t f1 = 0;
  Label f2 = 0;                  // weight of the witness
  std::vector<VertexId> path;    // A-vertex ... B-vertex
};

// Largest budget * |V| the product-graph search accepts.
inline constexpr int64_t kMaxOracleStates = 100'000'000;

// Shortest-time search over states (vertex, weight spent), weight in
// [0, M-1]. Throws Error(kInstanceTooLarge) past kMaxOracleStates.
OracleResult DpConstrainedShortest(const ProblemInstance& inst);

// Exhaustive search over simple paths with at most `max_edges` edges. Exact
// when max_edges >= |V|-1 or when no feasible path can be longer. Requires
// |V| <= 12 or max_edges <= 12, else Error(kSearchSpaceTooLarge).
OracleResult EnumeratePaths(const ProblemInstance& inst, int max_edges);

struct AgreementReport {
  bool agree = false;
  std::string summary;  // "agree" or a description of the mismatch
  std::string dump;     // full instance text on mismatch, empty otherwise
};

AgreementReport Compare(const ProblemInstance& inst, const SolveOutcome& engine,
                        const OracleResult& oracle);

}  // namespace cspath

#endif  // CSPATH_ORACLE_H_
