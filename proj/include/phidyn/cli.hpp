#pragma once

#include <iosfwd>

namespace phidyn {

/// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse
/// error, 3 inconclusive events present.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace phidyn
