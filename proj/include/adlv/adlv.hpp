#ifndef ADLV_ADLV_HPP
#define ADLV_ADLV_HPP

#include <optional>
#include <vector>

#include "adlv/conj.hpp"
#include "adlv/pieces.hpp"

// Nonemptiness decisions for the affine Deligne-Lusztig sets X_w(1) attached
// to elements of the extended affine Weyl group.

namespace adlv {

enum class Status { Empty, NonEmpty, Inconclusive };

// Certificate tag naming the rule that produced the verdict. The tags are
// part of the serialized output format and must stay stable.
enum class Rule {
  IdentityElement,
  NotInWa,
  OutOfScope,
  SmallSupport,
  Main2Empty,
  Main2NonEmpty,
  Main3NonEmpty,
};

const char* status_name(Status s);
const char* rule_name(Rule r);

// Decision plus enough evidence to re-verify it without re-deciding.
// Which fields are populated depends on how far the pipeline ran:
// the normal form from the moment it is computed, the piece set from the
// moment it is computed, witness and quasi-regularity data only on the
// rules that use them.
struct Verdict {
  Status status = Status::Inconclusive;
  Rule rule = Rule::OutOfScope;
  AffineElt source;
  std::optional<NormalForm> nf;
  std::vector<AffineElt> pieces;
  std::optional<AffineElt> witness; // a piece whose finite part has full support
  std::optional<QuasiRegularity> qr;
  Int main3_bound = 0;            // pairing floor checked by the deep-coweight rule
  bool main3_support_stable = false; // supp(u y^-1 x u^-1) = S for all u in W_J
};

// First matching rule wins:
//   1. identity -> NonEmpty
//   2. translation part outside the coroot lattice -> Empty
//   3. lambda = 0 -> Inconclusive
//   4. supp(y^-1 x) proper -> Empty
//   5. no full-support piece -> Empty
//   6. lambda quasi-regular -> NonEmpty
//   7. support stable under W_J twists and lambda deep enough -> NonEmpty
//   8. otherwise Inconclusive
Verdict decide(const RootSystem& R, const AffineElt& a,
               BranchPolicy policy = BranchPolicy::SmallestIndex,
               const Guards& g = Guards::from_env());

// One verdict per pair (x, y) at a fixed dominant coweight. Rows are the
// minimal coset representatives for the face of lambda, columns the whole
// finite group, both in ShortLex order.
struct EmptinessTable {
  NodeSet J;
  Coweight lambda;
  std::vector<WeylElt> xs;
  std::vector<WeylElt> ys;
  std::vector<std::vector<Verdict>> cells; // cells[i][j] decides xs[i], ys[j]
};

EmptinessTable emptiness_table(const RootSystem& R, const Coweight& lambda,
                               BranchPolicy policy = BranchPolicy::SmallestIndex,
                               const Guards& g = Guards::from_env());

} // namespace adlv

#endif
