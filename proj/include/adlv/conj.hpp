#ifndef ADLV_CONJ_HPP
#define ADLV_CONJ_HPP

#include <vector>

#include "adlv/afweyl.hpp"
#include "adlv/guards.hpp"

// Conjugation of the extended affine Weyl group by the finite simple
// reflections only. Affine conjugations are deliberately unavailable here:
// the piece combinatorics downstream is built on the finite action.

namespace adlv {

// Tie-break used when several nodes admit a length-dropping conjugation.
enum class BranchPolicy { SmallestIndex, LargestIndex };

// One conjugation step: after = s_node * (previous element) * s_node.
struct ConjStep {
  int node = -1; // finite node, 0-based
  AffineElt after;
};

// Reduction certificate. Replaying `steps` from `source` must reproduce
// `result` with length_affine never increasing along the way, and
// result = v_part * class_rep with additive lengths.
struct MinimalizationTrace {
  AffineElt source;
  std::vector<ConjStep> steps;
  AffineElt result;
  AffineElt class_rep; // minimal coset representative, no descent in S
  WeylElt v_part;      // supported inside relative_I(S, class_rep)
};

// One exploration pass over the length-preserving conjugation class of a.
// Either a strictly dropping conjugation is found (dropped = true) or the
// class is exhausted and one of its members is factored as v_part*class_rep.
struct ClassProbe {
  bool dropped = false;
  std::vector<ConjStep> steps; // path from the probed element to `element`
  AffineElt element;           // dropped: the element below the class;
                               // otherwise the factored class member
  AffineElt drop_from;         // dropped: class member the drop started at
  int drop_node = -1;          // dropped: conjugating node
  WeylElt v_part;              // !dropped
  AffineElt class_rep;         // !dropped
};

ClassProbe probe_class(const RootSystem& R, const AffineElt& a,
                       BranchPolicy policy = BranchPolicy::SmallestIndex,
                       const Guards& g = Guards::from_env());

// Iterated probing until no dropping conjugation remains; the terminal
// class is guaranteed to contain an element of the factored form.
MinimalizationTrace reduce_to_minimal(const RootSystem& R, const AffineElt& a,
                                      BranchPolicy policy = BranchPolicy::SmallestIndex,
                                      const Guards& g = Guards::from_env());

// The unique minimal coset representative w with a in W.(W_{I(S,w)} w).
// Constant on conjugation orbits.
AffineElt classify(const RootSystem& R, const AffineElt& a,
                   const Guards& g = Guards::from_env());

// Closure of {a} under length-preserving conjugation, sorted by aff_less.
std::vector<AffineElt> approx_class(const RootSystem& R, const AffineElt& a);

// Minimal-length elements of the conjugation orbit of w. Requires w to be
// a minimal coset representative; for such w this is exactly its
// length-preserving conjugation class.
std::vector<AffineElt> min_class(const RootSystem& R, const AffineElt& w);

// w <=_S w': some minimal-length element of the orbit of w lies below w'
// in Bruhat order. Requires w to be a minimal coset representative.
bool leq_S(const RootSystem& R, const AffineElt& w, const AffineElt& wp);

} // namespace adlv

#endif
