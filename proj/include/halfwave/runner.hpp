#pragma once

// Executes a configured scenario and writes its outputs under the output
// directory. Returns the paths written. The summary printed to `out` is a
// few human-readable lines; the files carry the data.

#include <ostream>
#include <string>
#include <vector>

#include "halfwave/config.hpp"

namespace halfwave::run {

std::vector<std::string> run(const cfg::Config& c, std::ostream& out);

}  // namespace halfwave::run
