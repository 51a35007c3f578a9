#ifndef CSPATH_GRAPH_H_
#define CSPATH_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cspath {

using VertexId = int32_t;
using HalfEdgeId = int32_t;
using Label = int64_t;

inline constexpr HalfEdgeId kNoEdge = -1;

// One undirected input edge: travel time f1 and weight f2.
struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  int64_t f1 = 1;
  int64_t f2 = 1;
};

// Static part of a stored edge direction. Each undirected edge is stored
// twice; `twin` is the location of the same edge in the opposite direction.
struct HalfEdge {
  VertexId start = 0;
  VertexId end = 0;
  int64_t weight = 1;        // f2
  int64_t initial_time = 1;  // f1
  HalfEdgeId twin = kNoEdge;
};

// Immutable undirected graph in flat twin half-edge form. The half-edges of
// vertex v occupy [first_edge(v), first_edge(v+1)), sorted by end vertex.
class Graph {
 public:
  Graph() = default;

  // Throws Error with kSelfLoop, kDuplicateEdge, kNonPositiveValue or
  // kVertexOutOfRange naming the offending edge.
  static Graph Build(int32_t num_vertices, std::span<const EdgeSpec> edges);

  int32_t num_vertices() const { return num_vertices_; }
  int64_t num_edges() const { return static_cast<int64_t>(half_edges_.size()) / 2; }
  int32_t num_half_edges() const { return static_cast<int32_t>(half_edges_.size()); }
  int32_t max_degree() const { return max_degree_; }

  const HalfEdge& half_edge(HalfEdgeId h) const { return half_edges_[h]; }
  std::span<const HalfEdge> half_edges() const { return half_edges_; }

  HalfEdgeId first_edge(VertexId v) const { return offsets_[v]; }
  HalfEdgeId end_edge(VertexId v) const { return offsets_[v + 1]; }
  int32_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Half-edge from u to v, or kNoEdge.
  HalfEdgeId FindHalfEdge(VertexId u, VertexId v) const;

  // The input edge list, one entry per undirected edge with u < v, in
  // half-edge order of u.
  std::vector<EdgeSpec> EdgeList() const;

 private:
  int32_t num_vertices_ = 0;
  int32_t max_degree_ = 0;
  std::vector<HalfEdgeId> offsets_{0};
  std::vector<HalfEdge> half_edges_;
};

// Graph plus sources A, targets B and the strict weight budget M: find the
// minimum total time over A-B paths whose total weight is below M.
struct ProblemInstance {
  Graph graph;
  std::vector<VertexId> sources;
  std::vector<VertexId> targets;
  Label budget = 1;
};

// Empty iff the instance is well formed. Each entry names the rule and the
// element that breaks it.
std::vector<std::string> ValidateInstance(const ProblemInstance& inst);

// Throws Error(kInvalidInstance) listing all violations.
void RequireValidInstance(const ProblemInstance& inst);

// 1 + total weight of all edges. No simple path reaches this weight, so it
// stands in for an unconstrained budget.
Label InfiniteBudget(const Graph& g);

}  // namespace cspath

#endif  // CSPATH_GRAPH_H_
