#ifndef ADLV_AFWEYL_HPP
#define ADLV_AFWEYL_HPP

#include "adlv/weyl.hpp"

namespace adlv {

// Element w eps^chi of the extended affine Weyl group W x Y, with the
// translation written on the right. Multiplication:
//   (w eps^chi)(w' eps^chi') = w w' eps^{w'^{-1} chi + chi'}.
struct AffineElt {
  WeylElt fin;
  Coweight trans;

  bool operator==(const AffineElt& o) const { return fin == o.fin && trans == o.trans; }
  bool operator!=(const AffineElt& o) const { return !(*this == o); }
};

struct AffineEltHash {
  std::size_t operator()(const AffineElt& a) const {
    std::size_t h = WeylEltHash()(a.fin);
    for (Int v : a.trans.c) h = h * 1099511628211ull ^ static_cast<std::size_t>(v);
    return h;
  }
};

AffineElt aff_identity(const RootSystem& R);
AffineElt from_finite(const RootSystem& R, const WeylElt& w);
AffineElt from_translation(const RootSystem& R, const Coweight& chi);
// The affine simple reflection s_0 = eps^{theta^vee} s_theta.
AffineElt affine_s0(const RootSystem& R);

AffineElt aff_mul(const RootSystem& R, const AffineElt& a, const AffineElt& b);
AffineElt aff_inv(const RootSystem& R, const AffineElt& a);
bool aff_is_identity(const AffineElt& a);

// Generators of W_a indexed 0..rank: gen 0 is s_0, gen k>=1 is the finite
// simple reflection at node k-1. This matches the s0,s1,...,sn text syntax.
int num_affine_gens(const RootSystem& R);
AffineElt affine_gen(const RootSystem& R, int g);
AffineElt aff_mul_gen_left(const RootSystem& R, int g, const AffineElt& a);
AffineElt aff_mul_gen_right(const RootSystem& R, const AffineElt& a, int g);
// s_i a s_i for a finite node i (0-based).
AffineElt conj_by_simple(const RootSystem& R, const AffineElt& a, int i);

// Iwahori-Matsumoto length. For each positive root alpha, w eps^chi
// contributes |<chi,alpha>| when w(alpha) > 0 and |<chi,alpha> + 1| when
// w(alpha) < 0. The sign convention is pinned by l(s_0) = 1 and validated
// against the breadth-first word oracle.
Int length_affine(const RootSystem& R, const AffineElt& a);

// Whether a lies in the affine Weyl group W x (coroot lattice).
bool in_affine_subgroup(const RootSystem& R, const AffineElt& a);

// l(a s_g) < l(a) for an affine generator g (0 = s_0).
bool aff_right_descent(const RootSystem& R, const AffineElt& a, int g);
bool aff_left_descent(const RootSystem& R, const AffineElt& a, int g);

// No right descent at any finite node: minimal representative of a W-coset.
bool is_min_rep_S(const RootSystem& R, const AffineElt& a);
// No right descent at any node of J.
bool is_min_rep(const RootSystem& R, const AffineElt& a, const NodeSet& J);

// Unique factorization a = x eps^{-lambda} y^{-1} with lambda dominant and
// x minimal in x W_{I(lambda)}.
struct NormalForm {
  NodeSet J; // i_lambda(lambda)
  Coweight lambda;
  WeylElt x;
  WeylElt y;
};
NormalForm normalize(const RootSystem& R, const AffineElt& a);
AffineElt recompose(const RootSystem& R, const NormalForm& nf);

// Factor mu = v(gamma) with gamma dominant and v minimal in v W_{I(gamma)}.
struct DominantFactorization {
  WeylElt v;
  Coweight gamma;
};
DominantFactorization dominant_factor(const RootSystem& R, const Coweight& mu);

// Bruhat order on the extended group: comparable only within one coset of
// the length-zero subgroup; on W_a it is the Coxeter Bruhat order.
bool bruhat_leq_affine(const RootSystem& R, const AffineElt& a, const AffineElt& b);

// Greedy reduced word over s0..sn for an element of W_a.
std::vector<int> reduced_word_affine(const RootSystem& R, const AffineElt& a);

// I(J, w) = max{K subset J : for all i in K, w s_i w^{-1} = s_j for some
// j in K}. Requires w minimal in w W_J.
NodeSet relative_I(const RootSystem& R, const NodeSet& J, const AffineElt& w);

// Deterministic total order used for serialized output.
bool aff_less(const RootSystem& R, const AffineElt& a, const AffineElt& b);

} // namespace adlv

#endif
