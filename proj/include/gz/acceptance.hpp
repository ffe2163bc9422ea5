#pragma once

#include <iosfwd>
#include <string>

namespace gz {

/// Runs the acceptance suite, printing one [PASS]/[FAIL] line per criterion
/// plus a summary. Returns the number of failed criteria. The only suite is
/// "primary".
int run_acceptance_suite(std::ostream& out, const std::string& suite = "primary");

}  // namespace gz
