#include "adlv/selfcheck.hpp"

#include <random>
#include <set>
#include <sstream>

#include "adlv/adlv.hpp"
#include "adlv/checked.hpp"
#include "adlv/geom.hpp"
#include "adlv/json_io.hpp"
#include "adlv/words.hpp"

namespace adlv {

namespace {

using Engine = std::mt19937_64;

AffineElt random_elt(const RootSystem& R, const std::vector<WeylElt>& W, Engine& eng,
                     Int radius) {
  WeylElt w = W[eng() % W.size()];
  std::vector<Int> c(R.rank());
  for (int i = 0; i < R.rank(); ++i)
    c[i] = static_cast<Int>(eng() % (2 * radius + 1)) - radius;
  return AffineElt{w, Coweight(c)};
}

OracleReport orbit_minimality(const RootSystem& R, Engine& eng, int samples) {
  OracleReport rep;
  rep.check_name = "orbit-minimality-" + R.name();
  std::vector<WeylElt> W = enumerate_group(R);
  for (int t = 0; t < samples; ++t) {
    AffineElt a = random_elt(R, W, eng, 3);
    ++rep.instance_count;
    OrbitData data = orbit_oracle(R, a);
    if (data.min_length_set != data.bruhat_min_set)
      rep.mismatches.push_back(print_affine(R, a) +
                               ": shortest and unpassable members differ");
  }
  return rep;
}

OracleReport pieces_agreement(const RootSystem& R, Engine& eng, int samples,
                              Int radius) {
  OracleReport rep;
  rep.check_name = "pieces-agreement-" + R.name();
  std::vector<WeylElt> W = enumerate_group(R);
  for (int t = 0; t < samples; ++t) {
    AffineElt a = random_elt(R, W, eng, radius);
    ++rep.instance_count;
    std::vector<AffineElt> brute = kpieces_bruteforce(R, a);
    for (BranchPolicy p : {BranchPolicy::SmallestIndex, BranchPolicy::LargestIndex})
      if (kpieces(R, a, p).members != brute) {
        rep.mismatches.push_back(print_affine(R, a) +
                                 ": piece recursion disagrees with brute force");
        break;
      }
  }
  return rep;
}

// Deterministic family of dominant coweights with face exactly J.
Coweight face_coweight(const RootSystem& R, const NodeSet& J, Int scale, bool wobble) {
  std::vector<Int> c(R.rank(), 0);
  for (int i = 0; i < R.rank(); ++i)
    if (!J.contains(i)) c[i] = scale + (wobble && i % 2 ? scale : 0);
  return Coweight(c);
}

OracleReport meeting_invariance(const RootSystem& R, Engine& eng, int samples) {
  OracleReport rep;
  rep.check_name = "meeting-invariance-" + R.name();
  std::vector<WeylElt> W = enumerate_group(R);
  int made = 0;
  while (made < samples) {
    NodeSet J;
    J.bits = static_cast<std::uint32_t>(eng() % (1u << R.rank()));
    if (J == NodeSet::full(R.rank())) continue;
    std::vector<WeylElt> reps = enumerate_WJ_reps(R, J);
    WeylElt x = reps[eng() % reps.size()];
    WeylElt y = W[eng() % W.size()];
    WeylElt w = reps[eng() % reps.size()];
    ++made;
    ++rep.instance_count;
    Coweight l0 = face_coweight(R, J, 1, false);
    bool first = bxb_meets_gpiece(R, J, x, y, w, l0);
    for (const Coweight& l :
         {face_coweight(R, J, 2, true), face_coweight(R, J, 97, false)}) {
      if (bxb_meets_gpiece(R, J, x, y, w, l) != first) {
        std::ostringstream os;
        os << R.name() << " J=" << print_nodeset(J, R.rank())
           << " x=" << print_finite(R, x) << " y=" << print_finite(R, y)
           << " w=" << print_finite(R, w) << ": answer depends on the coweight";
        rep.mismatches.push_back(os.str());
        break;
      }
    }
  }
  return rep;
}

OracleReport face_reduction(const RootSystem& R, Engine& eng, int samples) {
  OracleReport rep;
  rep.check_name = "face-reduction-" + R.name();
  std::vector<WeylElt> W = enumerate_group(R);
  NodeSet S = NodeSet::full(R.rank());
  Int base = checked_add(R.height(R.theta()), 2);
  int made = 0;
  while (made < samples) {
    NodeSet J;
    J.bits = static_cast<std::uint32_t>(eng() % (1u << R.rank()));
    if (J == S) continue;
    std::vector<WeylElt> reps = enumerate_WJ_reps(R, J);
    std::vector<WeylElt> full;
    for (const WeylElt& z : reps)
      if (supp(R, z) == S) full.push_back(z);
    if (full.empty()) continue;
    WeylElt z = full[eng() % full.size()];
    WeylElt y = identity(R);
    for (int attempt = 0; attempt < 20; ++attempt) {
      WeylElt cand = W[eng() % W.size()];
      if (is_min_coset_rep(R, mul(R, cand, z), J)) {
        y = cand;
        break;
      }
    }
    WeylElt x = mul(R, y, z);
    Int floor = checked_pow(base, static_cast<Int>(J.size()) + 1);
    std::vector<Int> c(R.rank(), 0);
    for (int i = 0; i < R.rank(); ++i)
      if (!J.contains(i)) c[i] = floor + static_cast<Int>(eng() % 50);
    Coweight lambda(c);
    ++made;
    ++rep.instance_count;
    try {
      Key2Step st = key2_reduce(R, J, x, y, lambda);
      if (st.mu != act(R, st.v, st.gamma))
        rep.mismatches.push_back(R.name() + ": shifted coweight fails to refactor");
    } catch (const Error& e) {
      std::ostringstream os;
      os << R.name() << " J=" << print_nodeset(J, R.rank())
         << " x=" << print_finite(R, x) << " y=" << print_finite(R, y) << ": "
         << e.what();
      rep.mismatches.push_back(os.str());
    }
  }
  return rep;
}

OracleReport stratum_counts() {
  OracleReport rep;
  rep.check_name = "stratum-counts";
  struct Expect {
    int rank;
    std::size_t labels;
    std::size_t boundary;
  };
  for (const Expect& e : {Expect{1, 3, 1}, Expect{2, 13, 5}}) {
    RootSystem R = RootSystem::build('A', e.rank);
    std::vector<GPieceLabel> all = enumerate_gpieces(R);
    ++rep.instance_count;
    if (all.size() != e.labels)
      rep.mismatches.push_back(R.name() + ": stratum count " +
                               std::to_string(all.size()));
    if (steinberg_boundary(R).size() != e.boundary)
      rep.mismatches.push_back(R.name() + ": boundary count");
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        bool ij = gpiece_closure_contains(R, all[i], all[j]);
        if (i == j && !ij) rep.mismatches.push_back(R.name() + ": not reflexive");
        if (i != j && ij && gpiece_closure_contains(R, all[j], all[i]))
          rep.mismatches.push_back(R.name() + ": not antisymmetric");
        if (!ij) continue;
        for (std::size_t k = 0; k < all.size(); ++k)
          if (gpiece_closure_contains(R, all[j], all[k]) &&
              !gpiece_closure_contains(R, all[i], all[k]))
            rep.mismatches.push_back(R.name() + ": not transitive");
      }
  }
  return rep;
}

OracleReport relabel_bijection(const RootSystem& R) {
  OracleReport rep;
  rep.check_name = "relabel-bijection-" + R.name();
  std::vector<GPieceLabel> all = enumerate_gpieces(R);
  std::set<std::pair<std::uint32_t, std::vector<int>>> image;
  std::size_t domain = 0;
  for (std::uint32_t mask = 0; mask < (1u << R.rank()); ++mask) {
    NodeSet J;
    J.bits = mask;
    Coweight lambda = face_coweight(R, J, 2, false);
    for (const WeylElt& x : enumerate_WJ_reps(R, J)) {
      ++domain;
      NormalForm nf{J, lambda, x, identity(R)};
      GPieceLabel l = specialize_kpiece_label(R, nf);
      image.emplace(l.J.bits, reduced_word(R, l.w));
      bool found = false;
      for (const GPieceLabel& m : all)
        if (m == l) found = true;
      if (!found)
        rep.mismatches.push_back(R.name() + ": image label not in the stratum list");
    }
  }
  rep.instance_count = domain;
  if (image.size() != domain)
    rep.mismatches.push_back(R.name() + ": relabeling is not injective");
  if (domain != all.size())
    rep.mismatches.push_back(R.name() + ": relabeling is not onto");
  return rep;
}

OracleReport table_consistency(const RootSystem& R, const Coweight& lambda) {
  OracleReport rep;
  rep.check_name = "table-consistency-" + R.name();
  NodeSet S = NodeSet::full(R.rank());
  EmptinessTable t = emptiness_table(R, lambda);
  for (std::size_t i = 0; i < t.xs.size(); ++i)
    for (std::size_t j = 0; j < t.ys.size(); ++j) {
      const Verdict& v = t.cells[i][j];
      ++rep.instance_count;
      bool full = supp(R, mul(R, inv(R, t.ys[j]), t.xs[i])) == S;
      if ((v.status == Status::NonEmpty) != full ||
          (v.status == Status::Empty) != !full) {
        rep.mismatches.push_back(print_affine(R, v.source) +
                                 ": status disagrees with the support test");
        continue;
      }
      Verdict w = decide(R, aff_inv(R, v.source));
      if (w.status != Status::Inconclusive && w.status != v.status)
        rep.mismatches.push_back(print_affine(R, v.source) +
                                 ": inversion changes the verdict");
    }
  return rep;
}

} // namespace

std::vector<OracleReport> run_selfcheck(bool deep, std::uint64_t seed) {
  Engine eng(seed);
  std::vector<OracleReport> out;

  out.push_back(word_length_oracle(RootSystem::build('A', 1), 8));
  out.push_back(word_length_oracle(RootSystem::build('A', 2), deep ? 8 : 6));
  out.push_back(word_length_oracle(RootSystem::build('C', 2), deep ? 8 : 6));
  if (deep) out.push_back(word_length_oracle(RootSystem::build('A', 3), 6));

  out.push_back(orbit_minimality(RootSystem::build('A', 2), eng, deep ? 400 : 150));
  if (deep) out.push_back(orbit_minimality(RootSystem::build('C', 2), eng, 200));

  out.push_back(pieces_agreement(RootSystem::build('A', 2), eng, deep ? 200 : 60, 2));
  if (deep)
    out.push_back(pieces_agreement(RootSystem::build('A', 3), eng, 40, 1));

  out.push_back(meeting_invariance(RootSystem::build('A', 2), eng, deep ? 50 : 10));
  if (deep) out.push_back(meeting_invariance(RootSystem::build('A', 3), eng, 25));

  out.push_back(face_reduction(RootSystem::build('A', 2), eng, deep ? 100 : 20));
  if (deep) out.push_back(face_reduction(RootSystem::build('A', 3), eng, 100));

  out.push_back(stratum_counts());
  out.push_back(relabel_bijection(RootSystem::build('A', 2)));
  if (deep) out.push_back(relabel_bijection(RootSystem::build('A', 3)));

  out.push_back(table_consistency(RootSystem::build('A', 2), Coweight({64, 64})));

  return out;
}

} // namespace adlv
