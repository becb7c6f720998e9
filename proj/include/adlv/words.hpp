#ifndef ADLV_WORDS_HPP
#define ADLV_WORDS_HPP

#include <string>

#include "adlv/afweyl.hpp"

namespace adlv {

// Element text syntax: whitespace-separated factors multiplied left to
// right. Factors are "e" (identity), "s<k>" (simple reflection, 1-based;
// "s0" is the affine reflection) and "t[c1,...,cn]" (translation by the
// coweight with the given fundamental-coweight coordinates).
AffineElt parse_affine(const RootSystem& R, const std::string& text);

// Same syntax restricted to finite generators (no s0, no t[...]).
WeylElt parse_finite(const RootSystem& R, const std::string& text);

// Comma-separated coordinates, e.g. "0,628,628".
Coweight parse_coweight(const RootSystem& R, const std::string& text);

// ShortLex word of w, or "e".
std::string print_finite(const RootSystem& R, const WeylElt& w);

// "<finite word> t[chi]" with zero parts omitted; identity prints "e".
// Round-trips through parse_affine.
std::string print_affine(const RootSystem& R, const AffineElt& a);

std::string print_coweight(const Coweight& c);

std::string print_nodeset(const NodeSet& J, int rank);

} // namespace adlv

#endif
