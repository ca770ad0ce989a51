#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omega6::cli {

/// Runs one subcommand. Exit code 0 on success, 1 on validation or
/// processing failure, 2 on usage errors. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega6::cli
