#include "cspath/instance_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cspath/error.h"

namespace cspath {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line with comments stripped; false at end of input.
  bool Next(std::istringstream& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fields.clear();
      fields.str(line);
      return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

void ExpectKeyword(LineReader& reader, std::istringstream& fields, const std::string& kw) {
  std::string got;
  if (!(fields >> got) || got != kw) reader.Fail("expected '" + kw + "'");
}

template <typename T>
T ReadNumber(LineReader& reader, std::istringstream& fields, const char* what) {
  T value;
  if (!(fields >> value)) reader.Fail(std::string("expected ") + what);
  return value;
}

std::vector<VertexId> ReadIdList(LineReader& reader, std::istringstream& fields) {
  std::vector<VertexId> ids;
  VertexId id;
  while (fields >> id) ids.push_back(id);
  if (!fields.eof()) reader.Fail("bad vertex id");
  return ids;
}

}  // namespace

ProblemInstance ReadInstance(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;

  if (!reader.Next(fields)) reader.Fail("empty input");
  std::string magic, version;
  fields >> magic >> version;
  if (magic != "cspath" || version != "v1") reader.Fail("expected header 'cspath v1'");

  if (!reader.Next(fields)) reader.Fail("missing size line");
  ExpectKeyword(reader, fields, "n");
  const auto n = ReadNumber<int64_t>(reader, fields, "vertex count");
  ExpectKeyword(reader, fields, "m");
  const auto m = ReadNumber<int64_t>(reader, fields, "edge count");
  ExpectKeyword(reader, fields, "M");
  std::string budget_text;
  if (!(fields >> budget_text)) reader.Fail("expected budget");
  if (n < 0 || n > INT32_MAX || m < 0) reader.Fail("bad sizes");

  if (!reader.Next(fields)) reader.Fail("missing A line");
  ExpectKeyword(reader, fields, "A");
  std::vector<VertexId> sources = ReadIdList(reader, fields);
  if (!reader.Next(fields)) reader.Fail("missing B line");
  ExpectKeyword(reader, fields, "B");
  std::vector<VertexId> targets = ReadIdList(reader, fields);

  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  while (reader.Next(fields)) {
    ExpectKeyword(reader, fields, "e");
    EdgeSpec e;
    e.u = ReadNumber<VertexId>(reader, fields, "u");
    e.v = ReadNumber<VertexId>(reader, fields, "v");
    e.f1 = ReadNumber<int64_t>(reader, fields, "f1");
    e.f2 = ReadNumber<int64_t>(reader, fields, "f2");
    edges.push_back(e);
  }
  if (static_cast<int64_t>(edges.size()) != m) {
    reader.Fail("header says m=" + std::to_string(m) + " but found " +
                std::to_string(edges.size()) + " edges");
  }

  ProblemInstance inst;
  inst.graph = Graph::Build(static_cast<int32_t>(n), edges);
  inst.sources = std::move(sources);
  inst.targets = std::move(targets);
  if (budget_text == "inf") {
    inst.budget = InfiniteBudget(inst.graph);
  } else {
    try {
      size_t used = 0;
      inst.budget = std::stoll(budget_text, &used);
      if (used != budget_text.size()) throw std::invalid_argument(budget_text);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad budget '" + budget_text + "'");
    }
  }
  return inst;
}

ProblemInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return ReadInstance(in);
}

void WriteInstance(std::ostream& out, const ProblemInstance& inst) {
  const std::vector<EdgeSpec> edges = inst.graph.EdgeList();
  out << "cspath v1\n";
  out << "n " << inst.graph.num_vertices() << " m " << edges.size() << " M " << inst.budget
      << "\n";
  out << "A";
  for (VertexId v : inst.sources) out << ' ' << v;
  out << "\nB";
  for (VertexId v : inst.targets) out << ' ' << v;
  out << "\n";
  for (const EdgeSpec& e : edges) {
    out << "e " << e.u << ' ' << e.v << ' ' << e.f1 << ' ' << e.f2 << "\n";
  }
}

void WriteInstanceFile(const std::string& path, const ProblemInstance& inst) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  WriteInstance(out, inst);
}

}  // namespace cspath
