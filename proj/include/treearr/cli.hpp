#ifndef TREEARR_CLI_HPP
#define TREEARR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace treearr {

/// Exit status: 0 success or passing certificate, 1 failed certificate,
/// 2 usage or parse error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treearr

#endif  // TREEARR_CLI_HPP
