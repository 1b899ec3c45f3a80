#include "grouplab/budget.hpp"

#include <cstdlib>
#include <string>

namespace grouplab {

Budget& global_budget() {
  static Budget budget = [] {
    Budget b;
    if (const char* env = std::getenv("GROUPLAB_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0)
        b.element_limit = static_cast<std::size_t>(v);
    }
    return b;
  }();
  return budget;
}

} // namespace grouplab
