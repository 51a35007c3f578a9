#include "cspath/graph.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "cspath/error.h"

namespace cspath {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNonPositiveValue: return "NonPositiveValue";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kNotReached: return "NotReached";
    case ErrorCode::kReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string EdgeName(size_t index, const EdgeSpec& e) {
  return "edge #" + std::to_string(index) + " (" + std::to_string(e.u) + "," +
         std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::Build(int32_t num_vertices, std::span<const EdgeSpec> edges) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kNonPositiveValue, "negative vertex count");
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw Error(ErrorCode::kVertexOutOfRange, EdgeName(i, e));
    }
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, EdgeName(i, e));
    if (e.f1 < 1) {
      throw Error(ErrorCode::kNonPositiveValue,
                  EdgeName(i, e) + " has f1=" + std::to_string(e.f1));
    }
    if (e.f2 < 1) {
      throw Error(ErrorCode::kNonPositiveValue,
                  EdgeName(i, e) + " has f2=" + std::to_string(e.f2));
    }
  }

  Graph g;
  g.num_vertices_ = num_vertices;
  std::vector<int32_t> degree(num_vertices, 0);
  for (const EdgeSpec& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(num_vertices + 1, 0);
  for (VertexId v = 0; v < num_vertices; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.max_degree_ = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

  // Slot each direction into its start vertex's range, then sort each range
  // by end vertex and repair twin pointers.
  struct Pending {
    VertexId end;
    int64_t f1, f2;
    size_t edge_index;
  };
  std::vector<Pending> pending(g.offsets_.back());
  std::vector<HalfEdgeId> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    pending[cursor[e.u]++] = {e.v, e.f1, e.f2, i};
    pending[cursor[e.v]++] = {e.u, e.f1, e.f2, i};
  }

  g.half_edges_.resize(pending.size());
  std::vector<std::pair<HalfEdgeId, HalfEdgeId>> by_edge(edges.size(), {kNoEdge, kNoEdge});
  for (VertexId v = 0; v < num_vertices; ++v) {
    auto first = pending.begin() + g.offsets_[v];
    auto last = pending.begin() + g.offsets_[v + 1];
    std::sort(first, last, [](const Pending& a, const Pending& b) {
      return a.end != b.end ? a.end < b.end : a.edge_index < b.edge_index;
    });
    for (auto it = first; it != last; ++it) {
      if (it + 1 != last && (it + 1)->end == it->end) {
        const size_t dup = std::max(it->edge_index, (it + 1)->edge_index);
        throw Error(ErrorCode::kDuplicateEdge, EdgeName(dup, edges[dup]));
      }
      const auto h = static_cast<HalfEdgeId>(it - pending.begin());
      g.half_edges_[h] = HalfEdge{v, it->end, it->f2, it->f1, kNoEdge};
      auto& slot = by_edge[it->edge_index];
      (slot.first == kNoEdge ? slot.first : slot.second) = h;
    }
  }
  for (const auto& [a, b] : by_edge) {
    g.half_edges_[a].twin = b;
    g.half_edges_[b].twin = a;
  }
  return g;
}

HalfEdgeId Graph::FindHalfEdge(VertexId u, VertexId v) const {
  auto first = half_edges_.begin() + offsets_[u];
  auto last = half_edges_.begin() + offsets_[u + 1];
  auto it = std::lower_bound(first, last, v,
                             [](const HalfEdge& h, VertexId x) { return h.end < x; });
  if (it == last || it->end != v) return kNoEdge;
  return static_cast<HalfEdgeId>(it - half_edges_.begin());
}

std::vector<EdgeSpec> Graph::EdgeList() const {
  std::vector<EdgeSpec> out;
  out.reserve(num_edges());
  for (const HalfEdge& h : half_edges_) {
    if (h.start < h.end) out.push_back({h.start, h.end, h.initial_time, h.weight});
  }
  return out;
}

std::vector<std::string> ValidateInstance(const ProblemInstance& inst) {
  std::vector<std::string> violations;
  const int32_t n = inst.graph.num_vertices();
  if (inst.budget < 1) {
    violations.push_back("budget below 1: M=" + std::to_string(inst.budget));
  }
  if (inst.sources.empty()) violations.push_back("A empty");
  if (inst.targets.empty()) violations.push_back("B empty");

  auto check_set = [&](const std::vector<VertexId>& set, const char* name) {
    std::set<VertexId> seen;
    for (VertexId v : set) {
      if (v < 0 || v >= n) {
        violations.push_back(std::string(name) + " vertex out of range: " + std::to_string(v));
      } else if (!seen.insert(v).second) {
        violations.push_back(std::string(name) + " lists vertex twice: " + std::to_string(v));
      }
    }
    return seen;
  };
  const std::set<VertexId> a = check_set(inst.sources, "A");
  const std::set<VertexId> b = check_set(inst.targets, "B");
  for (VertexId v : a) {
    if (b.count(v)) violations.push_back("A∩B nonempty: vertex " + std::to_string(v));
  }
  for (const HalfEdge& h : inst.graph.half_edges()) {
    if (h.start < h.end && (h.initial_time < 1 || h.weight < 1)) {
      violations.push_back("non-positive edge value on (" + std::to_string(h.start) + "," +
                           std::to_string(h.end) + ")");
    }
  }
  return violations;
}

void RequireValidInstance(const ProblemInstance& inst) {
  const std::vector<std::string> violations = ValidateInstance(inst);
  if (violations.empty()) return;
  std::string msg;
  for (const std::string& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += v;
  }
  throw Error(ErrorCode::kInvalidInstance, msg);
}

Label InfiniteBudget(const Graph& g) {
  Label total = 1;
  for (const HalfEdge& h : g.half_edges()) {
    if (h.start < h.end) total += h.weight;
  }
  return total;
}

}  // namespace cspath
