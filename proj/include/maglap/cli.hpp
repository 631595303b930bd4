#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maglap {

/// Command dispatch for the maglap tool. Exit codes: 0 computed (and
/// certificate found / gauge-equivalent where applicable), 1 negative
/// result (no certificate, not equivalent, suite failures), 2 error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace maglap
