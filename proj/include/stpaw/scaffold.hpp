#pragma once

// Starter project for `init`: a minimal complete control structure (one
// element per MAPE-K role plus the managed loop, one link per kind that
// the structure needs), one loss, one hazard, and a type-0 adaptation.
// The scaffold validates with zero findings.

#include <string>
#include <string_view>

namespace stpaw {

std::string scaffold_source(std::string_view name);

}  // namespace stpaw
