#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "petristruct/net_format.hpp"
#include "petristruct/reach_graph.hpp"

namespace petristruct::cli {

enum ExitCode : int {
  ok = 0,
  internal_failure = 1,
  input_error = 2,
  inconclusive = 3,
  contradiction = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Home-space query syntax:
///   {(4,0),(1,2),m0}     finite set of markings (tuples or marking names)
///   omega                intersection of the level sets of the N-generators
///   level (1,2)          level set of f through the anchor; "= k" fixes it
///   A>=1 and B!=0        conjunction of coordinate comparisons
/// An existing file path is read and parsed the same way ('#' comments).
HomeSpaceQuery parse_query(const NetDocument& doc, const Marking& anchor, std::string_view text);

}  // namespace petristruct::cli
