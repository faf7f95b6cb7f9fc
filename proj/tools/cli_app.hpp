#ifndef QPOLYLOG_CLI_APP_HPP
#define QPOLYLOG_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

#include "qpolylog/core.hpp"

namespace qpl::cli {

enum ExitCode { ok = 0, usage = 1, domain = 2, verify_failed = 3 };

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "re+imi", "-2.5", "3i", "-i", "1e-3-2e-1i"
cplx parse_complex(const std::string& s);
// comma separated; a point list uses ';' between points
std::vector<std::string> split(const std::string& s, char sep);

std::string csv_field(const std::string& s);

}  // namespace qpl::cli

#endif
