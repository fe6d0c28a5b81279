#pragma once

#include <ostream>

namespace dcl::cli {

// Exit codes: 0 ok, 1 verification failure, 2 parse or usage error,
// 3 invalid object for the family, 4 internal inconsistency.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dcl::cli
