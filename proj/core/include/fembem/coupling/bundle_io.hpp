#pragma once

#include <iosfwd>
#include <string>

#include "fembem/coupling/coupled_system.hpp"

namespace fembem {

/// JSON dump: coefficient vectors plus the outer residual history and the
/// final residual of every inner solve.
void write_bundle_json(const SolutionBundle& bundle, std::ostream& out);
void write_bundle_json(const SolutionBundle& bundle, const std::string& path);

}  // namespace fembem
