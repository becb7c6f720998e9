#ifndef ADLV_SELFCHECK_HPP
#define ADLV_SELFCHECK_HPP

#include <cstdint>
#include <vector>

#include "adlv/oracle.hpp"

namespace adlv {

// Cross-validation sweep: every fast path is exercised against a brute
// force or an internally asserted identity at small rank. `deep` widens
// every sweep (larger depth caps, more samples, one more rank). The same
// seed always produces the same reports.
std::vector<OracleReport> run_selfcheck(bool deep, std::uint64_t seed);

} // namespace adlv

#endif
