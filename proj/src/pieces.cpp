#include "adlv/pieces.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "adlv/checked.hpp"
#include "adlv/errors.hpp"

namespace adlv {

namespace {

struct AffLess {
  const RootSystem* R;
  bool operator()(const AffineElt& a, const AffineElt& b) const { return aff_less(*R, a, b); }
};

using Memo = std::unordered_map<AffineElt, std::vector<AffineElt>, AffineEltHash>;

const std::vector<AffineElt>& kpieces_rec(const RootSystem& R, const AffineElt& a,
                                          BranchPolicy policy, const Guards& g,
                                          Memo& memo, std::uint64_t state_bound) {
  auto hit = memo.find(a);
  if (hit != memo.end()) return hit->second;

  ClassProbe probe = probe_class(R, a, policy, g);
  std::vector<AffineElt> members;
  if (!probe.dropped) {
    members.push_back(probe.class_rep);
  } else {
    // Split at the dropping member w1: the coset union of s_i*w1 and
    // s_i*w1*s_i covers the original one, and both are strictly shorter.
    AffineElt left = aff_mul(R, from_finite(R, simple(R, probe.drop_node)), probe.drop_from);
    std::set<AffineElt, AffLess> acc{AffLess{&R}};
    for (const AffineElt& m : kpieces_rec(R, left, policy, g, memo, state_bound))
      acc.insert(m);
    for (const AffineElt& m : kpieces_rec(R, probe.element, policy, g, memo, state_bound))
      acc.insert(m);
    members.assign(acc.begin(), acc.end());
  }

  auto ins = memo.emplace(a, std::move(members));
  if (memo.size() > state_bound)
    throw InternalError("piece recursion left its bounded state space");
  return ins.first->second;
}

} // namespace

PieceSet kpieces(const RootSystem& R, const AffineElt& a, BranchPolicy policy,
                 const Guards& g) {
  check_same_system(R, a.fin);
  std::uint64_t wo = weyl_order(R.type(), R.rank());
  Memo memo;
  PieceSet out;
  out.members = kpieces_rec(R, a, policy, g, memo, wo * wo);
  out.source = a;
  out.memo_size = memo.size();
  return out;
}

bool bxb_meets_gpiece(const RootSystem& R, const NodeSet& J, const WeylElt& x,
                      const WeylElt& y, const WeylElt& w, const Coweight& lambda,
                      BranchPolicy policy, const Guards& g) {
  check_same_system(R, x);
  check_same_system(R, y);
  check_same_system(R, w);
  if (!is_dominant(R, lambda) || i_lambda(R, lambda) != J)
    throw InvalidInput("bxb_meets_gpiece: lambda must be dominant with face J");
  if (!is_min_coset_rep(R, x, J) || !is_min_coset_rep(R, w, J))
    throw InvalidInput("bxb_meets_gpiece: x and w must be minimal coset representatives for J");

  AffineElt a = aff_mul(R, aff_mul(R, from_finite(R, x), from_translation(R, neg(lambda))),
                        aff_inv(R, from_finite(R, y)));
  AffineElt target{w, neg(lambda)};
  PieceSet p = kpieces(R, a, policy, g);
  return std::find(p.members.begin(), p.members.end(), target) != p.members.end();
}

bool kpiece_closure_contains(const RootSystem& R, const AffineElt& w,
                             const AffineElt& wp) {
  if (!is_min_rep_S(R, w) || !is_min_rep_S(R, wp))
    throw InvalidInput("kpiece_closure_contains requires minimal coset representatives");
  return leq_S(R, wp, w);
}

Key2Step key2_reduce(const RootSystem& R, const NodeSet& J, const WeylElt& x,
                     const WeylElt& y, const Coweight& lambda) {
  check_same_system(R, x);
  check_same_system(R, y);
  const int rank = R.rank();
  const NodeSet S = NodeSet::full(rank);

  if (!is_min_coset_rep(R, x, J))
    throw InvalidInput("key2_reduce: x must be a minimal coset representative for J");
  WeylElt z = mul(R, inv(R, y), x);
  if (!is_min_coset_rep(R, z, J))
    throw InvalidInput("key2_reduce: y^{-1}x must be a minimal coset representative for J");
  if (supp(R, z) != S) throw InvalidInput("key2_reduce: y^{-1}x must have full support");
  if (!is_dominant(R, lambda) || i_lambda(R, lambda) != J)
    throw InvalidInput("key2_reduce: lambda must be dominant with face J");

  const Int base = R.height(R.theta()) + 2;
  const Int entry_bound = checked_pow(base, static_cast<int>(J.size()) + 1);
  for (int i = 0; i < rank; ++i)
    if (!J.contains(i) && lambda.c[i] < entry_bound)
      throw InvalidInput("key2_reduce: lambda is below the face bound off J");

  Key2Step step;
  step.m = checked_pow(base, static_cast<int>(J.size()));
  Coweight shift = scale(step.m, rho_vee_J(R, J.complement(rank)));
  step.mu = add(sub(lambda, shift), act(R, z, shift));

  DominantFactorization df = dominant_factor(R, step.mu);
  step.v = df.v;
  step.gamma = df.gamma;
  step.x_new = mul(R, mul(R, inv(R, step.v), z), step.v);
  step.terminal = is_identity(step.v);

  if (step.terminal) {
    if (step.gamma != step.mu) throw InternalError("terminal reduction with a moved coweight");
    return step;
  }

  // The guarantees below are consequences of the input bounds. A failure
  // here is a library bug, so they are revalidated on every call.
  NodeSet face = i_lambda(R, step.gamma);
  if (!face.proper_subset_of(J)) throw InternalError("reduction did not shrink the face");
  if (!supp(R, step.v).subset_of(J)) throw InternalError("reduction twist left W_J");
  for (int p = 0; p < R.num_positive_roots(); ++p) {
    NodeSet rsupp;
    const std::vector<Int>& coords = R.root_coords(p);
    for (int i = 0; i < rank; ++i)
      if (coords[i] != 0) rsupp.add(i);
    if (rsupp.subset_of(J)) continue;
    if (R.pair(step.mu, static_cast<SignedRoot>(p + 1)) < step.m)
      throw InternalError("shifted coweight lost its off-face floor");
  }
  Int next_bound = checked_pow(base, static_cast<int>(face.size()) + 1);
  for (int i = 0; i < rank; ++i) {
    if (face.contains(i)) continue;
    if (step.gamma.c[i] < step.m || step.gamma.c[i] < next_bound)
      throw InternalError("reduced coweight is below the next face bound");
  }
  if (!is_min_coset_rep(R, step.x_new, face) || supp(R, step.x_new) != S)
    throw InternalError("conjugated element lost minimality or support");
  if (length(R, mul(R, inv(R, step.v), z)) != length(R, z) - length(R, step.v))
    throw InternalError("twist is not length subtractive");
  return step;
}

} // namespace adlv
