#ifndef ADLV_GEOM_HPP
#define ADLV_GEOM_HPP

#include <vector>

#include "adlv/afweyl.hpp"
#include "adlv/guards.hpp"

// Label combinatorics for the group compactification: big-cell orbit labels,
// their closure order, the boundary of the unipotent-fiber family, and the
// two relabelings induced by specializing a loop-group element at 0.

namespace adlv {

// Labels the group-stable stratum attached to (J, w), w minimal in w W_J.
struct GPieceLabel {
  NodeSet J;
  WeylElt w;
  bool operator==(const GPieceLabel& o) const { return J == o.J && w == o.w; }
  bool operator!=(const GPieceLabel& o) const { return !(*this == o); }
};

// Labels the Borel-pair orbit attached to (J, x, y), x minimal in x W_J.
struct BxBLabel {
  NodeSet J;
  WeylElt x;
  WeylElt y;
  bool operator==(const BxBLabel& o) const { return J == o.J && x == o.x && y == o.y; }
  bool operator!=(const BxBLabel& o) const { return !(*this == o); }
};

// All stratum labels, ordered by (J as a bitmask, then ShortLex on w).
std::vector<GPieceLabel> enumerate_gpieces(const RootSystem& R,
                                           const Guards& g = Guards::from_env());

// Whether the stratum of b lies in the closure of the stratum of a:
// b.J inside a.J and b.w above some W_{a.J}-conjugate of a.w.
bool gpiece_closure_contains(const RootSystem& R, const GPieceLabel& a,
                             const GPieceLabel& b, const Guards& g = Guards::from_env());

// Strata with a proper face and full support; these are exactly the ones
// added when the fiber family is closed up.
std::vector<GPieceLabel> steinberg_boundary(const RootSystem& R,
                                            const Guards& g = Guards::from_env());

// Orbit-level relabeling of a normal form: the face and the two finite parts.
BxBLabel specialize_orbit_label(const RootSystem& R, const NormalForm& nf);

// Piece-level relabeling, defined when nf.y = e: the face reflects through
// the diagram involution and the finite part through conjugation by w0.
GPieceLabel specialize_kpiece_label(const RootSystem& R, const NormalForm& nf);

// Some reduced word uses every node exactly once; equivalently the length
// equals the rank and the support is full.
bool is_coxeter(const RootSystem& R, const WeylElt& w);

} // namespace adlv

#endif
