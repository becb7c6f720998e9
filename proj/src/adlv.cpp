#include "adlv/adlv.hpp"

#include "adlv/checked.hpp"

namespace adlv {

const char* status_name(Status s) {
  switch (s) {
    case Status::Empty: return "Empty";
    case Status::NonEmpty: return "NonEmpty";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::IdentityElement: return "IdentityElement";
    case Rule::NotInWa: return "NotInWa";
    case Rule::OutOfScope: return "OutOfScope";
    case Rule::SmallSupport: return "SmallSupport";
    case Rule::Main2Empty: return "Main2Empty";
    case Rule::Main2NonEmpty: return "Main2NonEmpty";
    case Rule::Main3NonEmpty: return "Main3NonEmpty";
  }
  return "?";
}

namespace {

void seal(Verdict& v, Status s, Rule r) {
  v.status = s;
  v.rule = r;
  bool ok = false;
  switch (s) {
    case Status::Empty:
      ok = r == Rule::NotInWa || r == Rule::SmallSupport || r == Rule::Main2Empty;
      break;
    case Status::NonEmpty:
      ok = r == Rule::Main2NonEmpty || r == Rule::Main3NonEmpty ||
           r == Rule::IdentityElement;
      break;
    case Status::Inconclusive:
      ok = r == Rule::OutOfScope;
      break;
  }
  if (!ok) throw InternalError("verdict paired a status with a foreign rule");
}

} // namespace

Verdict decide(const RootSystem& R, const AffineElt& a, BranchPolicy policy,
               const Guards& g) {
  Verdict v;
  v.source = a;

  if (aff_is_identity(a)) {
    seal(v, Status::NonEmpty, Rule::IdentityElement);
    return v;
  }
  if (!in_affine_subgroup(R, a)) {
    seal(v, Status::Empty, Rule::NotInWa);
    return v;
  }

  NormalForm nf = normalize(R, a);
  v.nf = nf;
  NodeSet S = NodeSet::full(R.rank());
  if (nf.J == S) {
    seal(v, Status::Inconclusive, Rule::OutOfScope);
    return v;
  }

  WeylElt z = mul(R, inv(R, nf.y), nf.x);
  if (supp(R, z) != S) {
    seal(v, Status::Empty, Rule::SmallSupport);
    return v;
  }

  PieceSet P = kpieces(R, a, policy, g);
  v.pieces = P.members;
  for (const AffineElt& m : P.members)
    if (supp(R, m.fin) == S) {
      v.witness = m;
      break;
    }
  if (!v.witness) {
    seal(v, Status::Empty, Rule::Main2Empty);
    return v;
  }

  v.qr = is_quasi_regular(R, nf.lambda);
  if (v.qr->quasi_regular) {
    seal(v, Status::NonEmpty, Rule::Main2NonEmpty);
    return v;
  }

  Int base = checked_add(R.height(R.theta()), 2);
  v.main3_bound = checked_pow(base, static_cast<Int>(nf.J.size()) + 1);
  v.main3_support_stable = true;
  for (const WeylElt& u : enumerate_parabolic(R, nf.J, g)) {
    if (supp(R, mul(R, u, mul(R, z, inv(R, u)))) != S) {
      v.main3_support_stable = false;
      break;
    }
  }
  bool deep = true;
  for (int i = 0; i < R.rank(); ++i)
    if (!nf.J.contains(i) && nf.lambda.c[i] < v.main3_bound) deep = false;
  if (v.main3_support_stable && deep) {
    seal(v, Status::NonEmpty, Rule::Main3NonEmpty);
    return v;
  }

  seal(v, Status::Inconclusive, Rule::OutOfScope);
  return v;
}

EmptinessTable emptiness_table(const RootSystem& R, const Coweight& lambda,
                               BranchPolicy policy, const Guards& g) {
  if (!is_dominant(R, lambda)) throw InvalidInput("table coweight must be dominant");
  g.check_enumeration(R.rank(), "emptiness table");

  EmptinessTable t;
  t.J = i_lambda(R, lambda);
  t.lambda = lambda;
  t.xs = enumerate_WJ_reps(R, t.J, g);
  t.ys = enumerate_group(R, g);

  AffineElt shift = from_translation(R, neg(lambda));
  t.cells.resize(t.xs.size());
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    t.cells[i].reserve(t.ys.size());
    for (std::size_t j = 0; j < t.ys.size(); ++j) {
      AffineElt a = aff_mul(R, from_finite(R, t.xs[i]),
                            aff_mul(R, shift, aff_inv(R, from_finite(R, t.ys[j]))));
      t.cells[i].push_back(decide(R, a, policy, g));
    }
  }
  return t;
}

} // namespace adlv
