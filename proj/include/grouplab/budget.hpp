#pragma once

#include <cstddef>

namespace grouplab {

// Hard limits that make oversized inputs fail loudly instead of degrading.
// element_limit bounds group materialization (closure size); lattice_limit
// bounds the group order for which a full subgroup enumeration is attempted.
struct Budget {
  std::size_t element_limit = 200000;
  std::size_t lattice_limit = 2000;
};

// Process-wide budget. The element limit can be overridden by the
// GROUPLAB_BUDGET environment variable (read once, at first access);
// the CLI may overwrite both fields before doing any work.
Budget& global_budget();

} // namespace grouplab
