#pragma once

#include "dunamis/surd.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dunamis::cli {

/// Exit codes are part of the interface.
enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kInputError = 2,
    kIoError = 3,
};

enum class OutputFormat { Text, Structured };

/// Radicand of "sqrt N" (a Natural) or "sqrt P/Q" (a Ratio).
using Radicand = std::variant<Natural, Ratio>;

/// Parses "sqrt N" or "sqrt P/Q". Throws ParseError otherwise.
Radicand parse_sqrt_expression(std::string_view text);

/// Parses any of "sqrt N", "sqrt P/Q", "√N", "(P/Q)*sqrt(K)" and the
/// canonical "(p/q)·√k". Throws ParseError otherwise.
Surd parse_surd_expression(std::string_view text);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dunamis::cli
