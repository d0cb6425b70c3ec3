#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hypstab/io/reports.hpp"

namespace hypstab {

enum class Profile { Quick, Full };

// invariant suites at the profile's scale; results do not depend on the worker count
std::vector<VerifyRow> run_verify(Profile profile, const EnumOptions& opt, std::ostream& log);

// exit codes: 0 success, 1 verification failure, 2 usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypstab
