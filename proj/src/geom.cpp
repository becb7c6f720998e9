#include "adlv/geom.hpp"

#include "adlv/errors.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

namespace {

std::vector<NodeSet> all_subsets(int rank) {
  std::vector<NodeSet> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    NodeSet J;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) J.add(i);
    out.push_back(J);
  }
  return out;
}

void check_label(const RootSystem& R, const GPieceLabel& a, const char* what) {
  check_same_system(R, a.w);
  if (!is_min_coset_rep(R, a.w, a.J))
    throw InvalidInput(std::string(what) + ": label element must be minimal in its coset");
}

} // namespace

std::vector<GPieceLabel> enumerate_gpieces(const RootSystem& R, const Guards& g) {
  g.check_enumeration(R.rank(), "stratum enumeration");
  std::vector<GPieceLabel> out;
  for (const NodeSet& J : all_subsets(R.rank()))
    for (const WeylElt& w : enumerate_WJ_reps(R, J, g))
      out.push_back(GPieceLabel{J, w});
  return out;
}

bool gpiece_closure_contains(const RootSystem& R, const GPieceLabel& a,
                             const GPieceLabel& b, const Guards& g) {
  check_label(R, a, "gpiece_closure_contains");
  check_label(R, b, "gpiece_closure_contains");
  if (!b.J.subset_of(a.J)) return false;
  for (const WeylElt& u : enumerate_parabolic(R, a.J, g)) {
    WeylElt conj = mul(R, mul(R, u, a.w), inv(R, u));
    if (bruhat_leq(R, conj, b.w)) return true;
  }
  return false;
}

std::vector<GPieceLabel> steinberg_boundary(const RootSystem& R, const Guards& g) {
  const NodeSet S = NodeSet::full(R.rank());
  std::vector<GPieceLabel> out;
  for (const GPieceLabel& lab : enumerate_gpieces(R, g))
    if (lab.J != S && supp(R, lab.w) == S) out.push_back(lab);
  return out;
}

BxBLabel specialize_orbit_label(const RootSystem& R, const NormalForm& nf) {
  check_same_system(R, nf.x);
  check_same_system(R, nf.y);
  if (i_lambda(R, nf.lambda) != nf.J)
    throw InvalidInput("specialize_orbit_label: face does not match the coweight");
  return BxBLabel{nf.J, nf.x, nf.y};
}

GPieceLabel specialize_kpiece_label(const RootSystem& R, const NormalForm& nf) {
  check_same_system(R, nf.x);
  if (!is_identity(nf.y))
    throw InvalidInput("specialize_kpiece_label needs a normal form with y = e");
  if (i_lambda(R, nf.lambda) != nf.J)
    throw InvalidInput("specialize_kpiece_label: face does not match the coweight");
  std::vector<int> delta = diagram_involution(R);
  NodeSet J2;
  for (int i : nf.J.nodes(R.rank())) J2.add(delta[static_cast<std::size_t>(i)]);
  return GPieceLabel{J2, star(R, nf.x)};
}

bool is_coxeter(const RootSystem& R, const WeylElt& w) {
  check_same_system(R, w);
  return length(R, w) == R.rank() && supp(R, w) == NodeSet::full(R.rank());
}

} // namespace adlv
