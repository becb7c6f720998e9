#ifndef ADLV_WEYL_HPP
#define ADLV_WEYL_HPP

#include <cstdint>
#include <vector>

#include "adlv/guards.hpp"
#include "adlv/rootsys.hpp"

namespace adlv {

// Finite Weyl group element, stored as its permutation action on the
// positive roots (img[p] = signed image of root p). The permutation is the
// canonical form; words are derived on demand.
struct WeylElt {
  std::uint16_t sys = 0;
  std::vector<std::int16_t> img;

  bool operator==(const WeylElt& o) const { return sys == o.sys && img == o.img; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const {
    std::size_t h = w.sys * 0x9e3779b97f4a7c15ull;
    for (std::int16_t v : w.img) h = h * 1099511628211ull ^ static_cast<std::size_t>(v + 32768);
    return h;
  }
};

WeylElt identity(const RootSystem& R);
WeylElt simple(const RootSystem& R, int i);
// Reflection in the positive root p (not necessarily simple).
WeylElt reflection(const RootSystem& R, int p);

SignedRoot apply_root(const RootSystem& R, const WeylElt& w, SignedRoot s);
WeylElt mul(const RootSystem& R, const WeylElt& a, const WeylElt& b);
WeylElt inv(const RootSystem& R, const WeylElt& a);
WeylElt mul_simple_left(const RootSystem& R, int i, const WeylElt& a);
WeylElt mul_simple_right(const RootSystem& R, const WeylElt& a, int i);

// Contragredient action: <act(w, lambda), alpha> = <lambda, w^{-1} alpha>.
Coweight act(const RootSystem& R, const WeylElt& w, const Coweight& lambda);

int length(const RootSystem& R, const WeylElt& w);
bool is_identity(const WeylElt& w);

// l(s_i w) < l(w), i.e. w^{-1} alpha_i < 0.
bool left_descent(const RootSystem& R, const WeylElt& w, int i);
// l(w s_i) < l(w), i.e. w alpha_i < 0.
bool right_descent(const RootSystem& R, const WeylElt& w, int i);

// Lexicographically least reduced word (ShortLex normal form), 0-based letters.
std::vector<int> reduced_word(const RootSystem& R, const WeylElt& w);
// Union of letters over any reduced word.
NodeSet supp(const RootSystem& R, const WeylElt& w);

// Bruhat order via the lifting property.
bool bruhat_leq(const RootSystem& R, const WeylElt& a, const WeylElt& b);

WeylElt longest_element(const RootSystem& R);
// Node permutation delta with w0(alpha_i) = -alpha_{delta(i)}.
std::vector<int> diagram_involution(const RootSystem& R);
// star(w) = w0 w w0.
WeylElt star(const RootSystem& R, const WeylElt& w);

// a = u * v with u in W^J (no right descent in J), v in W_J, lengths additive.
struct CosetDecomposition {
  WeylElt u;
  WeylElt v;
};
CosetDecomposition coset_decompose(const RootSystem& R, const WeylElt& a, const NodeSet& J);
bool is_min_coset_rep(const RootSystem& R, const WeylElt& a, const NodeSet& J);

// Whole-group and parabolic enumerations, ShortLex-sorted. Rank-guarded.
std::vector<WeylElt> enumerate_group(const RootSystem& R, const Guards& g = Guards());
std::vector<WeylElt> enumerate_parabolic(const RootSystem& R, const NodeSet& J, const Guards& g = Guards());
std::vector<WeylElt> enumerate_WJ_reps(const RootSystem& R, const NodeSet& J, const Guards& g = Guards());

// ShortLex comparison (by length, then lex on the canonical reduced word).
bool shortlex_less(const RootSystem& R, const WeylElt& a, const WeylElt& b);

void check_same_system(const RootSystem& R, const WeylElt& w);

} // namespace adlv

#endif
