#include "adlv/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "adlv/checked.hpp"
#include "adlv/weyl.hpp"
#include "adlv/words.hpp"

namespace adlv {

namespace {

struct AffLess {
  const RootSystem* R;
  bool operator()(const AffineElt& a, const AffineElt& b) const {
    return aff_less(*R, a, b);
  }
};

} // namespace

OracleReport word_length_oracle(const RootSystem& R, int max_len) {
  if (R.rank() > 3)
    throw GuardError("word length oracle is capped at rank 3, got rank " +
                     std::to_string(R.rank()));
  if (max_len > 10)
    throw GuardError("word length oracle is capped at depth 10, got " +
                     std::to_string(max_len));
  if (max_len < 0) throw InvalidInput("negative search depth");

  OracleReport rep;
  rep.check_name = "word-length-" + R.name();

  // Breadth-first over right multiplication by the affine generators. The
  // discovery depth of an element is its distance from the identity in the
  // Cayley graph, which is the word length by definition.
  std::unordered_map<AffineElt, int, AffineEltHash> depth;
  std::deque<AffineElt> queue;
  const AffineElt id = aff_identity(R);
  depth.emplace(id, 0);
  queue.push_back(id);
  while (!queue.empty()) {
    AffineElt cur = queue.front();
    queue.pop_front();
    int d = depth.at(cur);
    if (d >= max_len) continue;
    for (int g = 0; g < num_affine_gens(R); ++g) {
      AffineElt next = aff_mul_gen_right(R, cur, g);
      if (depth.emplace(next, d + 1).second) queue.push_back(next);
    }
  }

  for (const auto& [elt, d] : depth) {
    ++rep.instance_count;
    Int formula = length_affine(R, elt);
    if (formula != static_cast<Int>(d)) {
      std::ostringstream os;
      os << print_affine(R, elt) << ": word metric " << d << ", formula "
         << formula;
      rep.mismatches.push_back(os.str());
    }
  }
  std::sort(rep.mismatches.begin(), rep.mismatches.end());
  return rep;
}

OrbitData orbit_oracle(const RootSystem& R, const AffineElt& a, const Guards& g) {
  g.check_enumeration(R.rank(), "orbit oracle");

  std::unordered_set<AffineElt, AffineEltHash> seen;
  std::deque<AffineElt> queue;
  seen.insert(a);
  queue.push_back(a);
  while (!queue.empty()) {
    AffineElt cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < R.rank(); ++i) {
      AffineElt next = conj_by_simple(R, cur, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  OrbitData data;
  data.orbit.assign(seen.begin(), seen.end());
  std::sort(data.orbit.begin(), data.orbit.end(), AffLess{&R});

  Int best = length_affine(R, data.orbit.front());
  for (const AffineElt& e : data.orbit) best = std::min(best, length_affine(R, e));
  for (const AffineElt& e : data.orbit)
    if (length_affine(R, e) == best) data.min_length_set.push_back(e);

  for (const AffineElt& e : data.orbit) {
    bool minimal = true;
    for (const AffineElt& f : data.orbit) {
      if (f == e) continue;
      if (bruhat_leq_affine(R, f, e)) {
        minimal = false;
        break;
      }
    }
    if (minimal) data.bruhat_min_set.push_back(e);
  }
  return data;
}

namespace {

// Conjugation class of `a` under length-preserving simple twists, found by
// plain closure. Reimplemented here so the piece recursion below shares no
// traversal code with the library's fast path.
std::vector<AffineElt> twist_class(const RootSystem& R, const AffineElt& a) {
  Int len = length_affine(R, a);
  std::unordered_set<AffineElt, AffineEltHash> seen;
  std::deque<AffineElt> queue;
  seen.insert(a);
  queue.push_back(a);
  while (!queue.empty()) {
    AffineElt cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < R.rank(); ++i) {
      AffineElt next = conj_by_simple(R, cur, i);
      if (length_affine(R, next) != len) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<AffineElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), AffLess{&R});
  return out;
}

using PieceSetSorted = std::set<AffineElt, AffLess>;
using Memo = std::unordered_map<AffineElt, std::vector<AffineElt>, AffineEltHash>;

// Every way of writing a class member as v * w1 with w1 a minimal coset
// representative and v supported on the nodes w1 keeps fixed. A sound run
// produces exactly one w1 per dropless class; returning the whole candidate
// set lets a comparison against the fast path expose any violation.
std::vector<AffineElt> base_labels(const RootSystem& R,
                                   const std::vector<AffineElt>& cls) {
  NodeSet full = NodeSet::full(R.rank());
  Guards wide;
  wide.max_enumeration_rank = R.rank();
  PieceSetSorted found{AffLess{&R}};
  for (const AffineElt& c : cls) {
    for (const WeylElt& v : enumerate_group(R, wide)) {
      AffineElt w1{mul(R, inv(R, v), c.fin), c.trans};
      if (!is_min_rep_S(R, w1)) continue;
      if (!supp(R, v).subset_of(relative_I(R, full, w1))) continue;
      found.insert(w1);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<AffineElt> brute_rec(const RootSystem& R, const AffineElt& a,
                                 Memo& memo, std::size_t memo_cap) {
  std::vector<AffineElt> cls = twist_class(R, a);
  const AffineElt& key = cls.front();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  if (memo.size() >= memo_cap)
    throw InternalError("piece brute force left its bounded state space");
  // Reserve the slot before recursing so cycles would surface as an empty
  // result rather than infinite descent; lengths strictly decrease, so the
  // placeholder is never actually read back.
  memo.emplace(key, std::vector<AffineElt>{});

  Int len = length_affine(R, a);
  PieceSetSorted acc{AffLess{&R}};
  bool any_drop = false;
  for (const AffineElt& c : cls) {
    for (int i = 0; i < R.rank(); ++i) {
      if (length_affine(R, conj_by_simple(R, c, i)) >= len) continue;
      any_drop = true;
      AffineElt side = aff_mul_gen_right(R, c, i + 1);
      AffineElt inner = conj_by_simple(R, c, i);
      for (const AffineElt& p : brute_rec(R, side, memo, memo_cap)) acc.insert(p);
      for (const AffineElt& p : brute_rec(R, inner, memo, memo_cap)) acc.insert(p);
    }
  }

  std::vector<AffineElt> result;
  if (any_drop)
    result.assign(acc.begin(), acc.end());
  else
    result = base_labels(R, cls);
  memo[key] = result;
  return result;
}

} // namespace

std::vector<AffineElt> kpieces_bruteforce(const RootSystem& R, const AffineElt& a,
                                          const Guards& g) {
  g.check_enumeration(R.rank(), "piece brute force");
  std::uint64_t wo = weyl_order(R.type(), R.rank());
  Memo memo;
  return brute_rec(R, a, memo, static_cast<std::size_t>(wo * wo));
}

} // namespace adlv
