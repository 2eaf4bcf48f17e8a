#pragma once

// Canonical DSL serialization. Output is deterministic: fixed section
// order, entities sorted by identifier (natural order), normalized
// whitespace. parse(serialize(p)) reproduces p exactly, and serialize is a
// fixed point on its own output.

#include <string>

#include "stpaw/model.hpp"

namespace stpaw {

std::string serialize(const Project& project);

}  // namespace stpaw
