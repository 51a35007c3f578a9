#include "cspath/generators.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>

#include "cspath/error.h"

namespace cspath {
namespace {

int64_t Draw(const ValueRule& rule, std::mt19937_64& rng) {
  switch (rule.kind) {
    case ValueRule::Kind::kConstant:
      return rule.lo;
    case ValueRule::Kind::kUniform:
      return std::uniform_int_distribution<int64_t>(rule.lo, rule.hi)(rng);
    case ValueRule::Kind::kBernoulli:
      return std::bernoulli_distribution(rule.p)(rng) ? 1 : 2;
  }
  return rule.lo;
}

void CheckRule(const ValueRule& rule, const char* what) {
  const std::string name(what);
  switch (rule.kind) {
    case ValueRule::Kind::kConstant:
      if (rule.lo < 1) throw Error(ErrorCode::kBadSpec, name + " constant must be >= 1");
      break;
    case ValueRule::Kind::kUniform:
      if (rule.lo < 1 || rule.hi < rule.lo) {
        throw Error(ErrorCode::kBadSpec, name + " uniform range must satisfy 1 <= lo <= hi");
      }
      break;
    case ValueRule::Kind::kBernoulli:
      if (!(rule.p > 0.0 && rule.p < 1.0)) {
        throw Error(ErrorCode::kBadSpec, name + " bernoulli p must lie in (0,1)");
      }
      break;
  }
}

std::vector<VertexId> SortedUnique(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Point Mid(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

Point Mirror(Point p) { return {-p.x, p.y}; }

void AddPolyline(const HalfPlane& plane, const std::vector<Point>& pts, FastEdgeSet& out) {
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    for (Point p : {pts[i], pts[i + 1]}) {
      if (!plane.Contains(p)) {
        throw Error(ErrorCode::kBadSpec, "fractal segment leaves V_n at (" +
                                             std::to_string(p.x) + "," + std::to_string(p.y) + ")");
      }
    }
    const VertexId a = plane.Id(pts[i]);
    const VertexId b = plane.Id(pts[i + 1]);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
}

// Rasterizes the segment and its mirror image.
void AddSegment(const HalfPlane& plane, Point a, Point b, FastEdgeSet& out) {
  AddPolyline(plane, RasterizeSegment(a, b), out);
  AddPolyline(plane, RasterizeSegment(Mirror(a), Mirror(b)), out);
}

void Normalize(FastEdgeSet& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

GridIndex::GridIndex(std::vector<int32_t> dims) : dims_(std::move(dims)) {
  strides_.resize(dims_.size());
  for (size_t a = 0; a < dims_.size(); ++a) {
    strides_[a] = size_;
    size_ *= dims_[a];
  }
}

VertexId GridIndex::Id(const std::vector<int32_t>& coords) const {
  int64_t id = 0;
  for (size_t a = 0; a < dims_.size(); ++a) id += coords[a] * strides_[a];
  return static_cast<VertexId>(id);
}

std::vector<int32_t> GridIndex::Coords(VertexId id) const {
  std::vector<int32_t> c(dims_.size());
  int64_t rest = id;
  for (size_t a = 0; a < dims_.size(); ++a) {
    c[a] = static_cast<int32_t>(rest % dims_[a]);
    rest /= dims_[a];
  }
  return c;
}

int64_t GridEdgeCount(const std::vector<int32_t>& dims) {
  int64_t total = 0;
  for (size_t a = 0; a < dims.size(); ++a) {
    int64_t count = dims[a] - 1;
    for (size_t b = 0; b < dims.size(); ++b) {
      if (b != a) count *= dims[b];
    }
    total += count;
  }
  return total;
}

ProblemInstance GenGrid(const GridSpec& spec) {
  if (spec.dims.empty() || spec.dims.size() > 4) {
    throw Error(ErrorCode::kBadSpec, "grid needs 1 to 4 dimensions");
  }
  int64_t size = 1;
  for (int32_t side : spec.dims) {
    if (side < 2) throw Error(ErrorCode::kBadSpec, "grid side below 2: " + std::to_string(side));
    size *= side;
    if (size > std::numeric_limits<VertexId>::max()) {
      throw Error(ErrorCode::kBadSpec, "grid too large for 32-bit vertex ids");
    }
  }
  CheckRule(spec.f1, "f1");
  CheckRule(spec.f2, "f2");

  const GridIndex index(spec.dims);
  const auto n = static_cast<VertexId>(index.size());
  std::mt19937_64 rng(spec.seed);

  std::vector<EdgeSpec> edges;
  edges.reserve(GridEdgeCount(spec.dims));
  std::vector<int32_t> c(spec.dims.size(), 0);
  for (VertexId v = 0; v < n; ++v) {
    for (size_t a = 0; a < spec.dims.size(); ++a) {
      if (c[a] + 1 >= spec.dims[a]) continue;
      const int64_t f1 = Draw(spec.f1, rng);
      const int64_t f2 = Draw(spec.f2, rng);
      edges.push_back({v, static_cast<VertexId>(v + index.stride(a)), f1, f2});
    }
    for (size_t a = 0; a < c.size(); ++a) {
      if (++c[a] < spec.dims[a]) break;
      c[a] = 0;
    }
  }

  ProblemInstance inst;
  inst.graph = Graph::Build(n, edges);

  switch (spec.sources) {
    case SourceRule::kBoundary:
      for (VertexId v = 0; v < n; ++v) {
        const std::vector<int32_t> cv = index.Coords(v);
        for (size_t a = 0; a < cv.size(); ++a) {
          if (cv[a] == 0 || cv[a] == spec.dims[a] - 1) {
            inst.sources.push_back(v);
            break;
          }
        }
      }
      break;
    case SourceRule::kAxisX:
      for (int32_t x = 0; x < spec.dims[0]; ++x) inst.sources.push_back(x);
      break;
    case SourceRule::kSet:
      inst.sources = SortedUnique(spec.source_set);
      break;
  }

  switch (spec.targets) {
    case TargetRule::kCenter:
    case TargetRule::kCenterFloor: {
      std::vector<int32_t> center(spec.dims.size());
      for (size_t a = 0; a < spec.dims.size(); ++a) {
        if (spec.targets == TargetRule::kCenter && spec.dims[a] % 2 == 0) {
          throw Error(ErrorCode::kBadSpec, "even side " + std::to_string(spec.dims[a]) +
                                               " has no center vertex");
        }
        center[a] = spec.dims[a] / 2;
      }
      inst.targets = {index.Id(center)};
      break;
    }
    case TargetRule::kSet:
      inst.targets = SortedUnique(spec.target_set);
      break;
  }

  inst.budget = spec.budget ? *spec.budget : InfiniteBudget(inst.graph);
  std::vector<std::string> problems = ValidateInstance(inst);
  if (!problems.empty()) throw Error(ErrorCode::kBadSpec, "grid spec yields " + problems.front());
  return inst;
}

ProblemInstance GenRandomGraph(const RandomGraphSpec& spec) {
  if (spec.n < 2 || spec.components < 1 || spec.components > spec.n || spec.extra_edges < 0 ||
      spec.f_lo < 1 || spec.f_hi < spec.f_lo || spec.num_sources < 1 || spec.num_targets < 1 ||
      spec.num_sources + spec.num_targets > spec.n || spec.budget < 1) {
    throw Error(ErrorCode::kBadSpec, "invalid random graph spec");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int64_t> value(spec.f_lo, spec.f_hi);

  std::vector<VertexId> perm(spec.n);
  for (VertexId v = 0; v < spec.n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);

  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<EdgeSpec> edges;
  auto add = [&](VertexId u, VertexId v) {
    if (u == v || !seen.emplace(std::min(u, v), std::max(u, v)).second) return false;
    const int64_t f1 = value(rng);
    const int64_t f2 = value(rng);
    edges.push_back({u, v, f1, f2});
    return true;
  };
  // perm[0..components) are roots; everyone else hangs off an earlier vertex.
  for (int32_t i = spec.components; i < spec.n; ++i) {
    add(perm[i], perm[std::uniform_int_distribution<int32_t>(0, i - 1)(rng)]);
  }
  std::uniform_int_distribution<VertexId> any(0, spec.n - 1);
  const int64_t max_edges = static_cast<int64_t>(spec.n) * (spec.n - 1) / 2;
  for (int32_t added = 0, tries = 0;
       added < spec.extra_edges && static_cast<int64_t>(edges.size()) < max_edges &&
       tries < 20 * (spec.extra_edges + 1);
       ++tries) {
    const VertexId u = any(rng);
    const VertexId v = any(rng);
    if (add(u, v)) ++added;
  }

  ProblemInstance inst;
  inst.graph = Graph::Build(spec.n, edges);
  std::vector<VertexId> order(spec.n);
  for (VertexId v = 0; v < spec.n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  inst.sources.assign(order.begin(), order.begin() + spec.num_sources);
  inst.targets.assign(order.begin() + spec.num_sources,
                      order.begin() + spec.num_sources + spec.num_targets);
  std::sort(inst.sources.begin(), inst.sources.end());
  std::sort(inst.targets.begin(), inst.targets.end());
  inst.budget = spec.budget;
  return inst;
}

ProblemInstance SuiteInstance(uint64_t seed, int32_t index) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(index)};
  std::mt19937_64 rng(seq);
  auto pick = [&](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  const Label budget = pick(5, 40);
  const auto num_sources = static_cast<int32_t>(pick(1, 3));
  const auto num_targets = static_cast<int32_t>(pick(1, 2));
  if (index % 2 == 1) {
    RandomGraphSpec spec;
    spec.n = static_cast<int32_t>(pick(5, 150));
    spec.components = static_cast<int32_t>(pick(1, 3));
    spec.extra_edges = static_cast<int32_t>(pick(0, spec.n));
    spec.num_sources = num_sources;
    spec.num_targets = num_targets;
    spec.budget = budget;
    spec.seed = rng();
    return GenRandomGraph(spec);
  }
  GridSpec spec;
  spec.dims = {static_cast<int32_t>(pick(2, 12)), static_cast<int32_t>(pick(2, 12))};
  spec.f1 = ValueRule::Uniform(1, 5);
  spec.f2 = ValueRule::Uniform(1, 5);
  spec.sources = SourceRule::kSet;
  spec.targets = TargetRule::kSet;
  spec.budget = budget;
  const int32_t n = spec.dims[0] * spec.dims[1];
  const int32_t grid_targets = std::min(num_targets, n - num_sources);
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  spec.source_set.assign(order.begin(), order.begin() + num_sources);
  spec.target_set.assign(order.begin() + num_sources,
                         order.begin() + num_sources + grid_targets);
  spec.seed = rng();
  return GenGrid(spec);
}

ProblemInstance HalfPlaneInstance(const HalfPlane& plane, const FastEdgeSet& fast) {
  const int32_t n = plane.n();
  std::vector<EdgeSpec> edges;
  auto is_fast = [&](VertexId a, VertexId b) {
    return std::binary_search(fast.begin(), fast.end(), std::pair(std::min(a, b), std::max(a, b)));
  };
  for (int32_t y = 0; y <= n; ++y) {
    for (int32_t x = -n; x <= n; ++x) {
      const VertexId v = plane.Id({x, y});
      if (x < n) {
        const VertexId r = plane.Id({x + 1, y});
        edges.push_back({v, r, is_fast(v, r) ? 1 : 2, 1});
      }
      if (y < n) {
        const VertexId u = plane.Id({x, y + 1});
        edges.push_back({v, u, is_fast(v, u) ? 1 : 2, 1});
      }
    }
  }
  ProblemInstance inst;
  inst.graph = Graph::Build(plane.num_vertices(), edges);
  for (int32_t x = -n; x <= n; ++x) inst.sources.push_back(plane.Id({x, 0}));
  inst.targets = {plane.Id({n, n})};
  inst.budget = InfiniteBudget(inst.graph);
  return inst;
}

ProblemInstance GenSpeedway(int32_t n) {
  if (n < 4) throw Error(ErrorCode::kBadSpec, "speedway needs n >= 4");
  const HalfPlane plane(n);
  FastEdgeSet fast;
  for (int32_t y = 0; y < n; ++y) fast.emplace_back(plane.Id({0, y}), plane.Id({0, y + 1}));
  Normalize(fast);
  return HalfPlaneInstance(plane, fast);
}

std::vector<Point> SpeedwayActiveSet(int32_t T, int32_t n) {
  if (T < 2) throw Error(ErrorCode::kBadSpec, "speedway active set needs T >= 2");
  const HalfPlane plane(n);
  std::vector<Point> pts{{0, T}, {0, T - 1}};
  const int32_t kmax = (T + 1) / 4;
  for (int32_t k = 1; k <= kmax; ++k) {
    pts.push_back({-k, T - 2 * k});
    pts.push_back({k, T - 2 * k});
  }
  for (int32_t z = kmax + 1; z <= n; ++z) {
    pts.push_back({-z, T / 2});
    pts.push_back({z, T / 2});
  }
  std::erase_if(pts, [&](Point p) { return !plane.Contains(p); });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<Point> RasterizeSegment(Point a, Point b) {
  if (b.y < a.y || (b.y == a.y && b.x < a.x)) std::swap(a, b);
  const int32_t sx = b.x >= a.x ? 1 : -1;
  const int64_t dx = std::abs(b.x - a.x);
  const int64_t dy = b.y - a.y;
  std::vector<Point> out{a};
  Point p = a;
  // Distance to the line is proportional to |dy*u - dx*v| in local
  // coordinates (u, v) = (|x - a.x|, y - a.y).
  auto off = [&](Point q) { return std::abs(dy * std::abs(q.x - a.x) - dx * (q.y - a.y)); };
  while (p != b) {
    const Point up{p.x, p.y + 1};
    const Point side{p.x + sx, p.y};
    if (p.y == b.y) {
      p = side;
    } else if (p.x == b.x) {
      p = up;
    } else {
      p = off(up) <= off(side) ? up : side;
    }
    out.push_back(p);
  }
  return out;
}

FractalFamily GenFractal(const FractalSpec& spec) {
  if (spec.k < 1 || spec.k > 20) throw Error(ErrorCode::kBadSpec, "fractal k must be in [1,20]");
  const int32_t t = spec.t();
  const int32_t levels = spec.effective_levels();
  if (levels < 1 || levels > spec.k) {
    throw Error(ErrorCode::kBadSpec, "fractal levels must be in [1,k]");
  }
  const int32_t n = spec.effective_n();
  if (n < t) throw Error(ErrorCode::kBadSpec, "fractal needs n >= t");

  FractalFamily family;
  family.plane = HalfPlane(n);
  const HalfPlane& plane = family.plane;

  const Point top{0, t};
  const Point corner{0, t / 2};
  const Point left{-t / 2, 0};

  FastEdgeSet fast;
  AddSegment(plane, {0, 0}, {0, n}, fast);
  AddSegment(plane, left, corner, fast);
  Normalize(fast);
  std::vector<Triangle> pending{{left, corner, top}};

  for (int32_t level = 1; level <= levels; ++level) {
    if (level > 1) {
      std::vector<Triangle> next;
      for (const Triangle& tri : pending) {
        const Point l0 = Mid(tri.left, tri.corner);
        const Point t0 = Mid(tri.corner, tri.top);
        const Point x = Mid(tri.left, tri.top);
        AddSegment(plane, l0, x, fast);
        AddSegment(plane, x, t0, fast);
        next.push_back({tri.left, l0, x});
        next.push_back({x, t0, tri.top});
      }
      pending = std::move(next);
      Normalize(fast);
    }
    family.fast_edges.push_back(fast);
    family.triangles.push_back(pending);
    family.environments.push_back(HalfPlaneInstance(plane, fast));
  }
  return family;
}

Fraction FractalExpectedCount(int32_t k, int64_t t) { return {4 * k * t, 15}; }

double FractalAlphaBound(int64_t t) {
  return kFractalAlpha * static_cast<double>(t) * std::log(static_cast<double>(t));
}

// ---------------------------------------------------------------------------

namespace {

std::string Describe(const char* what, int64_t got, int64_t want) {
  return std::string(what) + ": got " + std::to_string(got) + ", want " + std::to_string(want);
}

std::optional<std::string> ExpectLabel(const Solver& s, VertexId v, Label want) {
  const Label got = s.state().vertices[v].label;
  if (got != want) return Describe(("label of vertex " + std::to_string(v)).c_str(), got, want);
  return std::nullopt;
}

std::optional<std::string> ExpectVertexStatus(const Solver& s, VertexId v, VertexStatus want) {
  if (s.state().vertices[v].status != want) {
    return "vertex " + std::to_string(v) + " is " +
           (want == VertexStatus::kActive ? "inactive, want active" : "active, want inactive");
  }
  return std::nullopt;
}

std::optional<std::string> ExpectEdge(const Solver& s, VertexId from, VertexId to,
                                      EdgeStatus status, std::optional<int64_t> remaining = {},
                                      std::optional<Label> flow = {}) {
  const HalfEdgeId h = s.instance().graph.FindHalfEdge(from, to);
  if (h == kNoEdge) return "no edge " + std::to_string(from) + "->" + std::to_string(to);
  const HalfEdgeRecord& e = s.state().edges[h];
  const std::string name = "half-edge " + std::to_string(from) + "->" + std::to_string(to);
  if (e.status != status) {
    return name + " has status " + std::to_string(static_cast<int>(e.status)) + ", want " +
           std::to_string(static_cast<int>(status));
  }
  if (remaining && e.remaining_time != *remaining) {
    return Describe((name + " remaining time").c_str(), e.remaining_time, *remaining);
  }
  if (flow && e.flow_label != *flow) {
    return Describe((name + " flow label").c_str(), e.flow_label, *flow);
  }
  return std::nullopt;
}

std::optional<std::string> ExpectPhantoms(const Solver& s, const std::vector<PhantomRecord>& want) {
  const std::vector<PhantomRecord>& got = s.state().phantoms;
  if (got.size() != want.size()) {
    return Describe("phantom count", static_cast<int64_t>(got.size()),
                    static_cast<int64_t>(want.size()));
  }
  for (size_t i = 0; i < want.size(); ++i) {
    const PhantomRecord& g = got[i];
    const PhantomRecord& w = want[i];
    if (g.source != w.source || g.destination != w.destination || g.label != w.label ||
        g.remaining_time != w.remaining_time) {
      return "phantom " + std::to_string(i) + " is {" + std::to_string(g.source) + "," +
             std::to_string(g.destination) + ",L=" + std::to_string(g.label) + ",r=" +
             std::to_string(g.remaining_time) + "}, want {" + std::to_string(w.source) + "," +
             std::to_string(w.destination) + ",L=" + std::to_string(w.label) + ",r=" +
             std::to_string(w.remaining_time) + "}";
    }
  }
  return std::nullopt;
}

using Check = std::function<std::optional<std::string>(const Solver&)>;

Check AllOf(std::vector<Check> checks) {
  return [checks = std::move(checks)](const Solver& s) -> std::optional<std::string> {
    for (const Check& c : checks) {
      if (auto why = c(s)) return why;
    }
    return std::nullopt;
  };
}

ProblemInstance Tiny(int32_t n, std::vector<EdgeSpec> edges, std::vector<VertexId> a,
                     std::vector<VertexId> b, Label m) {
  ProblemInstance inst;
  inst.graph = Graph::Build(n, edges);
  inst.sources = std::move(a);
  inst.targets = std::move(b);
  inst.budget = m;
  return inst;
}

}  // namespace

std::vector<MechanismFixture> MechanismFixtures() {
  std::vector<MechanismFixture> out;

  {  // 0=a, 1=v, 2=b
    MechanismFixture f{"first-arrival-label",
                       Tiny(3, {{0, 1, 2, 5}, {1, 2, 10, 1}}, {0}, {2}, 19),
                       {}};
    f.checkpoints.push_back(
        {2, "first water at v gets label M - f2 = 19 - 5 = 14",
         AllOf({[](const Solver& s) { return ExpectLabel(s, 1, 14); },
                [](const Solver& s) { return ExpectVertexStatus(s, 1, VertexStatus::kActive); },
                [](const Solver& s) { return ExpectEdge(s, 0, 1, EdgeStatus::kUsed); },
                [](const Solver& s) { return ExpectVertexStatus(s, 0, VertexStatus::kInactive); },
                [](const Solver& s) { return ExpectEdge(s, 1, 2, EdgeStatus::kActive, 10, 14); }})});
    out.push_back(std::move(f));
  }

  {  // 0=a1, 1=a2, 2=p, 3=q, 4=b; p-q carries p's water until q gets better water.
    MechanismFixture f{
        "re-source-restores-time",
        Tiny(5, {{0, 2, 2, 5}, {2, 3, 7, 2}, {1, 3, 6, 2}, {3, 4, 20, 1}}, {0, 1}, {4}, 19),
        {}};
    f.checkpoints.push_back(
        {2, "p labelled 14 and starts sourcing p->q with time 7",
         AllOf({[](const Solver& s) { return ExpectLabel(s, 2, 14); },
                [](const Solver& s) { return ExpectEdge(s, 2, 3, EdgeStatus::kActive, 7, 14); }})});
    f.checkpoints.push_back(
        {6, "q labelled 17; edge p-q re-sourced from q with remaining time restored to 7",
         AllOf({[](const Solver& s) { return ExpectLabel(s, 3, 17); },
                [](const Solver& s) { return ExpectEdge(s, 3, 2, EdgeStatus::kActive, 7, 17); },
                [](const Solver& s) { return ExpectEdge(s, 2, 3, EdgeStatus::kPassive); }})});
    out.push_back(std::move(f));
  }

  {  // 0=a1, 1=a2, 2=p, 3=r, 4=b
    MechanismFixture f{
        "non-improving-edge-deactivates",
        Tiny(5, {{1, 2, 6, 2}, {0, 3, 1, 2}, {3, 2, 9, 2}, {2, 4, 20, 1}}, {0, 1}, {4}, 19),
        {}};
    f.checkpoints.push_back(
        {1, "r labelled 17 and sources r->p",
         AllOf({[](const Solver& s) { return ExpectLabel(s, 3, 17); },
                [](const Solver& s) { return ExpectEdge(s, 3, 2, EdgeStatus::kActive, 9, 17); }})});
    f.checkpoints.push_back(
        {6, "p labelled 17; neither direction of p-r can improve, so the edge goes passive",
         AllOf({[](const Solver& s) { return ExpectLabel(s, 2, 17); },
                [](const Solver& s) { return ExpectEdge(s, 3, 2, EdgeStatus::kPassive); },
                [](const Solver& s) { return ExpectEdge(s, 2, 3, EdgeStatus::kPassive); },
                [](const Solver& s) { return ExpectVertexStatus(s, 3, VertexStatus::kInactive); }})});
    out.push_back(std::move(f));
  }

  {  // 0=a, 1=w, 2=s, 3=b
    MechanismFixture f{
        "phantom-at-active-vertex",
        Tiny(4, {{0, 2, 1, 13}, {2, 3, 10, 1}, {0, 1, 5, 8}, {1, 2, 2, 2}}, {0}, {3}, 19),
        {}};
    f.checkpoints.push_back(
        {1, "s labelled 6 and sources s->b",
         AllOf({[](const Solver& s) { return ExpectLabel(s, 2, 6); },
                [](const Solver& s) { return ExpectEdge(s, 2, 3, EdgeStatus::kActive, 10, 6); }})});
    f.checkpoints.push_back(
        {7, "better water 11 - 2 = 9 reaches active s: one phantom s->b with label 9, "
            "s keeps label 6 and its old flow",
         AllOf({[](const Solver& s) { return ExpectPhantoms(s, {{2, 3, 9, 10, kNoEdge}}); },
                [](const Solver& s) { return ExpectLabel(s, 2, 6); },
                [](const Solver& s) { return ExpectEdge(s, 2, 3, EdgeStatus::kActive, 4, 6); }})});
    out.push_back(std::move(f));
  }
  return out;
}

MechanismFixture WorkedExample() {
  auto v = [](int name) { return static_cast<VertexId>(name - 1); };
  std::vector<EdgeSpec> edges = {
      {v(1), v(4), 2, 5},   {v(2), v(5), 6, 2},   {v(4), v(5), 7, 2},  {v(3), v(6), 2, 2},
      {v(6), v(5), 9, 2},   {v(3), v(9), 3, 6},   {v(9), v(5), 5, 1},  {v(4), v(7), 3, 3},
      {v(7), v(11), 8, 2},  {v(2), v(11), 9, 13}, {v(11), v(12), 6, 1}, {v(3), v(8), 3, 15},
      {v(8), v(10), 20, 1}, {v(10), v(12), 1, 1},
  };
  MechanismFixture f{"worked-example", Tiny(12, edges, {v(1), v(2), v(3)}, {v(12)}, 19), {}};
  f.checkpoints.push_back(
      {2, "L(4) = 19 - 5 = 14, edge (1,4) used, vertex 1 inactive",
       AllOf({[=](const Solver& s) { return ExpectLabel(s, v(4), 14); },
              [=](const Solver& s) { return ExpectEdge(s, v(1), v(4), EdgeStatus::kUsed); },
              [=](const Solver& s) {
                return ExpectVertexStatus(s, v(1), VertexStatus::kInactive);
              }})});
  f.checkpoints.push_back(
      {6, "L(5) = 17; (4,5) and (9,5) re-sourced from 5; (5,6) no longer active",
       AllOf({[=](const Solver& s) { return ExpectLabel(s, v(5), 17); },
              [=](const Solver& s) { return ExpectEdge(s, v(5), v(4), EdgeStatus::kActive, 7, 17); },
              [=](const Solver& s) { return ExpectEdge(s, v(5), v(9), EdgeStatus::kActive, 5, 17); },
              [=](const Solver& s) { return ExpectEdge(s, v(5), v(6), EdgeStatus::kPassive); },
              [=](const Solver& s) { return ExpectEdge(s, v(6), v(5), EdgeStatus::kPassive); }})});
  f.checkpoints.push_back(
      {13, "phantom 11' toward 12 with label L(7) - f2(7,11) = 9; L(11) stays 6",
       AllOf({[=](const Solver& s) { return ExpectPhantoms(s, {{v(11), v(12), 9, 6, kNoEdge}}); },
              [=](const Solver& s) { return ExpectLabel(s, v(11), 6); }})});
  return f;
}

std::vector<std::string> RunFixture(const MechanismFixture& fixture, const SolverConfig& config) {
  std::vector<std::string> failures;
  Solver solver(fixture.instance, config);
  for (const FixtureCheckpoint& cp : fixture.checkpoints) {
    while (solver.state().clock < cp.clock) {
      if (solver.RunCycle()) break;
    }
    if (solver.state().clock != cp.clock) {
      failures.push_back(fixture.name + " @t=" + std::to_string(cp.clock) + ": clock is " +
                         std::to_string(solver.state().clock));
      break;
    }
    if (std::optional<std::string> why = cp.verify(solver)) {
      failures.push_back(fixture.name + " @t=" + std::to_string(cp.clock) + " (" + cp.event +
                         "): " + *why);
    }
  }
  return failures;
}

}  // namespace cspath
