#include "adlv/conj.hpp"

#include <deque>
#include <unordered_map>
#include <algorithm>

#include "adlv/errors.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

namespace {

std::vector<int> node_scan_order(int rank, BranchPolicy policy) {
  std::vector<int> order(rank);
  for (int i = 0; i < rank; ++i) order[i] = i;
  if (policy == BranchPolicy::LargestIndex) std::reverse(order.begin(), order.end());
  return order;
}

struct ParentLink {
  AffineElt parent;
  int node = -1;
  bool is_root = false;
};

// Parent-pointer walk back to the BFS root, emitted root-to-element.
std::vector<ConjStep> path_from_root(
    const std::unordered_map<AffineElt, ParentLink, AffineEltHash>& parents,
    const AffineElt& element) {
  std::vector<ConjStep> steps;
  AffineElt cur = element;
  while (true) {
    const ParentLink& link = parents.at(cur);
    if (link.is_root) break;
    steps.push_back(ConjStep{link.node, cur});
    cur = link.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

// Try to factor one class member as v * w1 with w1 a minimal coset
// representative and v supported inside relative_I(S, w1). Only elements
// whose translation part is antidominant can factor this way.
bool try_factor(const RootSystem& R, const AffineElt& c, const Guards& g,
                WeylElt& v_out, AffineElt& w1_out) {
  Coweight lambda = neg(c.trans);
  if (!is_dominant(R, lambda)) return false;
  NodeSet J = i_lambda(R, lambda);
  NodeSet S = NodeSet::full(R.rank());
  for (const WeylElt& v : enumerate_parabolic(R, J, g)) {
    WeylElt x1 = mul(R, inv(R, v), c.fin);
    if (!is_min_coset_rep(R, x1, J)) continue;
    AffineElt w1{x1, c.trans};
    if (!is_min_rep_S(R, w1)) continue;
    NodeSet K = relative_I(R, S, w1);
    if (!supp(R, v).subset_of(K)) continue;
    if (static_cast<Int>(length(R, v)) + length_affine(R, w1) != length_affine(R, c))
      throw InternalError("conjugation class factorization is not length additive");
    v_out = v;
    w1_out = w1;
    return true;
  }
  return false;
}

} // namespace

ClassProbe probe_class(const RootSystem& R, const AffineElt& a,
                       BranchPolicy policy, const Guards& g) {
  check_same_system(R, a.fin);
  const std::vector<int> order = node_scan_order(R.rank(), policy);
  const Int base_len = length_affine(R, a);

  std::unordered_map<AffineElt, ParentLink, AffineEltHash> parents;
  parents.emplace(a, ParentLink{a, -1, true});
  std::deque<AffineElt> queue{a};
  std::vector<AffineElt> discovered{a};

  while (!queue.empty()) {
    AffineElt c = queue.front();
    queue.pop_front();
    for (int i : order) {
      AffineElt c2 = conj_by_simple(R, c, i);
      Int len2 = length_affine(R, c2);
      if (len2 < base_len) {
        ClassProbe out;
        out.dropped = true;
        out.steps = path_from_root(parents, c);
        out.steps.push_back(ConjStep{i, c2});
        out.element = c2;
        out.drop_from = c;
        out.drop_node = i;
        return out;
      }
      if (len2 == base_len && parents.find(c2) == parents.end()) {
        parents.emplace(c2, ParentLink{c, i, false});
        queue.push_back(c2);
        discovered.push_back(c2);
      }
    }
  }

  // No drop anywhere: the class is closed under the reduction moves, so it
  // must contain a factorable member.
  for (const AffineElt& c : discovered) {
    ClassProbe out;
    if (try_factor(R, c, g, out.v_part, out.class_rep)) {
      out.dropped = false;
      out.steps = path_from_root(parents, c);
      out.element = c;
      return out;
    }
  }
  throw InternalError("dropless conjugation class without a factorable member");
}

MinimalizationTrace reduce_to_minimal(const RootSystem& R, const AffineElt& a,
                                      BranchPolicy policy, const Guards& g) {
  MinimalizationTrace trace;
  trace.source = a;
  AffineElt cur = a;
  while (true) {
    ClassProbe probe = probe_class(R, cur, policy, g);
    trace.steps.insert(trace.steps.end(), probe.steps.begin(), probe.steps.end());
    if (probe.dropped) {
      cur = probe.element;
      continue;
    }
    trace.result = probe.element;
    trace.class_rep = probe.class_rep;
    trace.v_part = probe.v_part;
    return trace;
  }
}

AffineElt classify(const RootSystem& R, const AffineElt& a, const Guards& g) {
  return reduce_to_minimal(R, a, BranchPolicy::SmallestIndex, g).class_rep;
}

std::vector<AffineElt> approx_class(const RootSystem& R, const AffineElt& a) {
  check_same_system(R, a.fin);
  const Int base_len = length_affine(R, a);
  std::unordered_map<AffineElt, bool, AffineEltHash> seen;
  seen.emplace(a, true);
  std::deque<AffineElt> queue{a};
  std::vector<AffineElt> members{a};
  while (!queue.empty()) {
    AffineElt c = queue.front();
    queue.pop_front();
    for (int i = 0; i < R.rank(); ++i) {
      AffineElt c2 = conj_by_simple(R, c, i);
      if (length_affine(R, c2) != base_len) continue;
      if (seen.emplace(c2, true).second) {
        queue.push_back(c2);
        members.push_back(c2);
      }
    }
  }
  std::sort(members.begin(), members.end(),
            [&](const AffineElt& x, const AffineElt& y) { return aff_less(R, x, y); });
  return members;
}

std::vector<AffineElt> min_class(const RootSystem& R, const AffineElt& w) {
  if (!is_min_rep_S(R, w))
    throw InvalidInput("min_class requires a minimal coset representative");
  return approx_class(R, w);
}

bool leq_S(const RootSystem& R, const AffineElt& w, const AffineElt& wp) {
  for (const AffineElt& v : min_class(R, w))
    if (bruhat_leq_affine(R, v, wp)) return true;
  return false;
}

} // namespace adlv
