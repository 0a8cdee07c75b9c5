#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "msp/rigor/dyadic.hpp"

namespace msp::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

/// Runs one `msptool` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exact parse of `p/q`, an integer, a finite decimal or `m*2^e`.
rigor::Rational parse_number(const std::string& text);

/// Grid `a:b:step` of exact rationals a, a + step, ... <= b.
std::vector<rigor::Rational> parse_grid(const std::string& text);

/// 12 significant digits.
std::string fmt(double x);

}  // namespace msp::cli
