#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ringlab {

// The built-in catalog, embedded so the CLI works from any directory. The
// same text ships as specs/catalog.ring.
const std::vector<std::pair<std::string, std::string>>& builtin_catalog();

}  // namespace ringlab
