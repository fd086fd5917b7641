#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nla::cli {

/// Runs one `nla` invocation; `args` excludes the program name.
/// Returns 0 on success, 1 on a domain error, 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nla::cli
