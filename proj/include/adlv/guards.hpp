#ifndef ADLV_GUARDS_HPP
#define ADLV_GUARDS_HPP

#include <cstdlib>

#include "adlv/errors.hpp"

namespace adlv {

// Enumeration-scale operations (whole Weyl group, piece/boundary listings,
// tables, oracle sweeps) refuse to run above this rank unless overridden,
// either programmatically or with ADLV_GUARD_OVERRIDE=1 in the environment.
struct Guards {
  int max_enumeration_rank = 4;
  bool override_enabled = false;

  static Guards from_env() {
    Guards g;
    const char* v = std::getenv("ADLV_GUARD_OVERRIDE");
    if (v && v[0] == '1' && v[1] == '\0') g.override_enabled = true;
    return g;
  }

  void check_enumeration(int rank, const char* what) const {
    if (override_enabled) return;
    if (rank > max_enumeration_rank)
      throw GuardError(std::string(what) + ": rank exceeds the enumeration guard (" +
                       std::to_string(max_enumeration_rank) + "); set ADLV_GUARD_OVERRIDE=1 to force");
  }
};

} // namespace adlv

#endif
