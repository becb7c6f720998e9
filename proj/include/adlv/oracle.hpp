#ifndef ADLV_ORACLE_HPP
#define ADLV_ORACLE_HPP

#include <string>
#include <vector>

#include "adlv/afweyl.hpp"
#include "adlv/guards.hpp"

// Brute-force reference implementations. Everything here recomputes its
// answer from definitions, sharing only elementary group arithmetic with
// the fast paths it exists to validate. Slow on purpose.

namespace adlv {

struct OracleReport {
  std::string check_name;
  std::size_t instance_count = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

// Breadth-first enumeration of the affine group by generator products,
// comparing the word metric against the closed-form length at every node.
OracleReport word_length_oracle(const RootSystem& R, int max_len);

struct OrbitData {
  std::vector<AffineElt> orbit;          // full conjugation orbit, sorted
  std::vector<AffineElt> min_length_set; // shortest members
  std::vector<AffineElt> bruhat_min_set; // members with nothing below them
};

// The conjugation orbit of a with both minimality notions computed
// directly; callers compare the two sets.
OrbitData orbit_oracle(const RootSystem& R, const AffineElt& a,
                       const Guards& g = Guards::from_env());

// Piece-set recursion with every admissible split explored instead of one
// chosen branch, and base classes factored by exhaustive search.
std::vector<AffineElt> kpieces_bruteforce(const RootSystem& R, const AffineElt& a,
                                          const Guards& g = Guards::from_env());

} // namespace adlv

#endif
