#ifndef ADLV_PIECES_HPP
#define ADLV_PIECES_HPP

#include <cstddef>
#include <vector>

#include "adlv/conj.hpp"

// Which K-stable pieces an Iwahori double coset meets, the closure order on
// piece labels, and the face-lowering reduction used in the nonemptiness
// argument. Piece labels are minimal coset representatives in the extended
// affine Weyl group.

namespace adlv {

struct PieceSet {
  AffineElt source;
  std::vector<AffineElt> members; // sorted by aff_less, all minimal representatives
  std::size_t memo_size = 0;      // diagnostics: distinct recursion states
};

// All piece labels whose piece meets the conjugation-saturated double coset
// of a. Minimal classes contribute themselves; otherwise the set splits
// along a length-dropping conjugation and recursion takes over. The answer
// is branch-independent; the policy only varies the traversal.
PieceSet kpieces(const RootSystem& R, const AffineElt& a,
                 BranchPolicy policy = BranchPolicy::SmallestIndex,
                 const Guards& g = Guards::from_env());

// Whether the double-coset label (J, x, y) meets the piece labeled (J, w),
// decided through kpieces at the translation lambda. The answer does not
// depend on which dominant lambda with face J is supplied.
bool bxb_meets_gpiece(const RootSystem& R, const NodeSet& J, const WeylElt& x,
                      const WeylElt& y, const WeylElt& w, const Coweight& lambda,
                      BranchPolicy policy = BranchPolicy::SmallestIndex,
                      const Guards& g = Guards::from_env());

// Closure order on piece labels: the piece of wp lies in the closure of the
// piece of w. Both arguments must be minimal coset representatives.
bool kpiece_closure_contains(const RootSystem& R, const AffineElt& w,
                             const AffineElt& wp);

// One face-lowering step. Writes the shifted coweight
//   mu = lambda - m*r + (y^{-1}x)(m*r),   r the level vector of S-J,
// as v(gamma) with gamma dominant, and conjugates y^{-1}x back by v.
// Terminal when v = e; otherwise gamma has a strictly smaller face than
// lambda and the stated lower bounds hold, so the step can be iterated.
struct Key2Step {
  WeylElt v;      // in W_J, minimal in v W_{I(gamma)}
  Coweight gamma; // dominant
  WeylElt x_new;  // v^{-1} (y^{-1}x) v
  Coweight mu;    // = v(gamma)
  Int m = 0;      // shift scale
  bool terminal = false;
};

Key2Step key2_reduce(const RootSystem& R, const NodeSet& J, const WeylElt& x,
                     const WeylElt& y, const Coweight& lambda);

} // namespace adlv

#endif
