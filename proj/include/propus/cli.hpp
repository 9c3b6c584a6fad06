#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "propus/matrix.hpp"

namespace propus::cli {

enum ExitCode : int { kOk = 0, kNothingFound = 1, kVerifyFailed = 2, kUsage = 3 };

// Arguments exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Matrix text: '#' lines are comments, each other line is one row over
// {+,-,0}; blank lines separate matrices. Throws ParseError.
std::vector<SignMatrix> parse_matrix_text(std::string_view text);
std::string format_matrix(const SignMatrix& m, const std::vector<std::string>& comments = {});

}  // namespace propus::cli
