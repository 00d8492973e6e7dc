#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivq/gdm.hpp"

namespace ivq {

/// Names of the problem files compiled into the library.
const std::vector<std::string>& fixture_names();

/// Raw JSON text of a built-in problem. Throws Parse for an unknown name.
std::string_view fixture_text(std::string_view name);

DecisionProblem load_fixture(std::string_view name);

}  // namespace ivq
