#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "radii/problem.hpp"

namespace radii::cli {

/// 17-significant-digit rendering used for every floating-point field the
/// CLI emits; round-trips doubles exactly.
std::string format_double(double v);

std::string query_to_json(const RadiusQuery& query);
RadiusQuery query_from_json(const std::string& text);

/// Runs one command line (without argv[0]). Exit codes: 0 success,
/// 1 verification failure, 2 usage error, 3 numeric failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace radii::cli
