#ifndef CSPATH_INSTANCE_IO_H_
#define CSPATH_INSTANCE_IO_H_

#include <iosfwd>
#include <string>

#include "cspath/graph.h"

namespace cspath {

// Line-oriented text format shared by every CLI command:
//
//   cspath v1
//   n <vertices> m <edges> M <budget>
//   A <ids...>
//   B <ids...>
//   e <u> <v> <f1> <f2>      (m lines)
//
// `#` starts a comment. The budget may be written as `inf`, meaning
// InfiniteBudget(graph).
ProblemInstance ReadInstance(std::istream& in);
ProblemInstance ReadInstanceFile(const std::string& path);

void WriteInstance(std::ostream& out, const ProblemInstance& inst);
void WriteInstanceFile(const std::string& path, const ProblemInstance& inst);

}  // namespace cspath

#endif  // CSPATH_INSTANCE_IO_H_
