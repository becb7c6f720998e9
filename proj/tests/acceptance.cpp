// Final gate: nine pinned criteria, one line each. Exits with the number of
// failed criteria. Time limits are part of the criteria and enforced here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adlv/adlv.hpp"
#include "adlv/geom.hpp"
#include "adlv/oracle.hpp"
#include "adlv/words.hpp"

using namespace adlv;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;

  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

AffineElt make_xly(const RootSystem& R, const WeylElt& x, const Coweight& lambda,
                   const WeylElt& y) {
  AffineElt a = aff_mul(R, from_finite(R, x), from_translation(R, neg(lambda)));
  return aff_mul(R, a, aff_inv(R, from_finite(R, y)));
}

// Deterministic family of dominant coweights with face exactly J.
Coweight face_coweight(const RootSystem& R, const NodeSet& J, Int scale, bool wobble) {
  std::vector<Int> c(R.rank(), 0);
  for (int i = 0; i < R.rank(); ++i)
    if (!J.contains(i)) c[i] = scale + (wobble && i % 2 ? scale : 0);
  return Coweight(c);
}

NodeSet root_support(const RootSystem& R, int p) {
  NodeSet s;
  const std::vector<Int>& coords = R.root_coords(p);
  for (int i = 0; i < R.rank(); ++i)
    if (coords[i] != 0) s.add(i);
  return s;
}

// 1: the pinned A3 instance end to end, under five seconds.
Outcome pinned_instance(double& limit_s) {
  limit_s = 5.0;
  Outcome out;
  RootSystem R = RootSystem::build('A', 3);
  Coweight lambda({0, 628, 628});
  out.require(in_coroot_lattice(R, lambda), "coweight not in the lattice");
  QuasiRegularity qr = is_quasi_regular(R, lambda);
  out.require(qr.quasi_regular && qr.bound == 625, "quasi-regularity bound");

  WeylElt x = parse_finite(R, "s2 s1 s3 s2");
  WeylElt y = parse_finite(R, "s3 s2");
  AffineElt a = make_xly(R, x, lambda, y);
  Verdict v = decide(R, a);
  out.require(v.status == Status::Empty && v.rule == Rule::Main2Empty,
              "verdict is not Empty/Main2Empty");

  AffineElt expect{parse_finite(R, "s3 s2"), neg(lambda)};
  out.require(kpieces(R, a).members == std::vector<AffineElt>{expect},
              "piece set is not the pinned singleton");

  NodeSet J{0};
  for (const WeylElt& w : enumerate_WJ_reps(R, J)) {
    bool meets = bxb_meets_gpiece(R, J, x, y, w, lambda);
    out.require(meets == (w == parse_finite(R, "s3 s2")),
                "meeting test wrong at w=" + print_finite(R, w));
  }
  return out;
}

// 2: closed-form lengths equal the word metric on generator balls.
Outcome length_formula(double& limit_s) {
  limit_s = 120.0;
  Outcome out;
  struct Sweep {
    char type;
    int rank;
    int depth;
  };
  for (const Sweep& s : {Sweep{'A', 2, 8}, Sweep{'C', 2, 8}, Sweep{'A', 3, 6}}) {
    RootSystem R = RootSystem::build(s.type, s.rank);
    OracleReport rep = word_length_oracle(R, s.depth);
    out.checks += rep.instance_count;
    out.require(rep.passed(), rep.check_name + " has mismatches");
  }
  return out;
}

// 3: shortest orbit members are exactly the Bruhat-minimal ones, on every
// orbit with translation coordinates in [-3, 3].
Outcome orbit_minimality(double&) {
  Outcome out;
  std::size_t orbits = 0;
  for (char t : {'A', 'C'}) {
    RootSystem R = RootSystem::build(t, 2);
    for (const WeylElt& w : enumerate_group(R))
      for (Int c0 = -3; c0 <= 3; ++c0)
        for (Int c1 = -3; c1 <= 3; ++c1) {
          ++orbits;
          OrbitData data = orbit_oracle(R, AffineElt{w, Coweight({c0, c1})});
          out.require(data.min_length_set == data.bruhat_min_set,
                      std::string(1, t) + "2 orbit minimality mismatch");
        }
  }
  out.require(orbits >= 500, "fewer than 500 orbit instances");
  return out;
}

// 4: the piece recursion equals the all-branches brute force under both
// branch policies.
Outcome pieces_vs_brute(double& limit_s) {
  limit_s = 300.0;
  Outcome out;
  RootSystem R = RootSystem::build('A', 2);
  std::set<std::vector<Int>> coords;
  for (Int d0 = 0; d0 <= 2; ++d0)
    for (Int d1 = 0; d1 <= 2; ++d1)
      for (const WeylElt& u : enumerate_group(R))
        coords.insert(act(R, u, Coweight({d0, d1})).c);
  for (const WeylElt& w : enumerate_group(R))
    for (const std::vector<Int>& c : coords) {
      AffineElt a{w, Coweight(c)};
      if (length_affine(R, a) > 10) continue;
      std::vector<AffineElt> brute = kpieces_bruteforce(R, a);
      bool same =
          kpieces(R, a, BranchPolicy::SmallestIndex).members == brute &&
          kpieces(R, a, BranchPolicy::LargestIndex).members == brute;
      out.require(same, "piece sets differ at " + print_affine(R, a));
    }
  out.require(out.checks > 100, "sweep unexpectedly small");
  return out;
}

// 5: the meeting test does not depend on the dominant coweight chosen for
// the face.
Outcome meeting_invariance(double&) {
  Outcome out;
  std::mt19937_64 eng(2026);
  for (int rank : {2, 3}) {
    RootSystem R = RootSystem::build('A', rank);
    std::vector<WeylElt> W = enumerate_group(R);
    int made = 0;
    while (made < 25) {
      NodeSet J;
      J.bits = static_cast<std::uint32_t>(eng() % (1u << rank));
      if (J == NodeSet::full(rank)) continue;
      std::vector<WeylElt> reps = enumerate_WJ_reps(R, J);
      WeylElt x = reps[eng() % reps.size()];
      WeylElt y = W[eng() % W.size()];
      WeylElt w = reps[eng() % reps.size()];
      ++made;
      bool first = bxb_meets_gpiece(R, J, x, y, w, face_coweight(R, J, 1, false));
      bool ok =
          bxb_meets_gpiece(R, J, x, y, w, face_coweight(R, J, 2, true)) == first &&
          bxb_meets_gpiece(R, J, x, y, w, face_coweight(R, J, 97, false)) == first;
      out.require(ok, "coweight-dependent answer in A" + std::to_string(rank));
    }
  }
  return out;
}

// 6: the deep regular table splits along the support test, agrees with an
// independent piece computation, and conclusive verdicts are symmetric
// under inversion.
Outcome table_consistency(double&) {
  Outcome out;
  RootSystem R = RootSystem::build('A', 2);
  NodeSet S = NodeSet::full(2);
  Coweight lambda({64, 64});
  out.require(in_coroot_lattice(R, lambda), "table coweight not in the lattice");
  out.require(is_quasi_regular(R, lambda).quasi_regular, "table coweight too shallow");
  EmptinessTable t = emptiness_table(R, lambda);
  for (std::size_t i = 0; i < t.xs.size(); ++i)
    for (std::size_t j = 0; j < t.ys.size(); ++j) {
      const Verdict& v = t.cells[i][j];
      bool small = supp(R, mul(R, inv(R, t.ys[j]), t.xs[i])) != S;
      bool full_piece = false;
      for (const AffineElt& m : kpieces(R, v.source).members)
        if (supp(R, m.fin) == S) full_piece = true;
      out.require((v.status == Status::Empty) == small, "status vs support test");
      out.require(full_piece == !small, "piece set vs support test");
      out.require((v.status == Status::NonEmpty) == full_piece,
                  "status vs piece set");
      Verdict w = decide(R, aff_inv(R, v.source));
      out.require(w.status != Status::Inconclusive && w.status == v.status,
                  "inversion symmetry broken");
    }
  return out;
}

// 7: every face-lowering step satisfies its posted shape and bounds on
// random valid inputs: the shift scale, the off-face floor of the shifted
// coweight, the strict face drop, the depth of the reduced coweight, and
// the minimality and support of the conjugated element.
Outcome face_reduction(double&) {
  Outcome out;
  std::mt19937_64 eng(777);
  for (int rank : {2, 3}) {
    RootSystem R = RootSystem::build('A', rank);
    std::vector<WeylElt> W = enumerate_group(R);
    NodeSet S = NodeSet::full(rank);
    Int base = checked_add(R.height(R.theta()), 2);
    int made = 0;
    while (made < 100) {
      NodeSet J;
      J.bits = static_cast<std::uint32_t>(eng() % (1u << rank));
      if (J == S) continue;
      std::vector<WeylElt> full;
      for (const WeylElt& z : enumerate_WJ_reps(R, J))
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
      Int floor = checked_pow(base, static_cast<int>(J.size()) + 1);
      std::vector<Int> c(rank, 0);
      for (int i = 0; i < rank; ++i)
        if (!J.contains(i)) c[i] = floor + static_cast<Int>(eng() % 40);
      Coweight lambda(c);
      ++made;

      Key2Step st = key2_reduce(R, J, x, y, lambda);
      NodeSet face = i_lambda(R, st.gamma);
      out.require(st.m == checked_pow(base, static_cast<int>(J.size())),
                  "shift scale is not the posted power");
      out.require(is_dominant(R, st.gamma), "gamma is not dominant");
      out.require(st.mu == act(R, st.v, st.gamma), "mu fails to refactor");
      out.require(supp(R, st.v).subset_of(J), "v leaves the face subgroup");
      out.require(is_min_coset_rep(R, st.v, face), "v is not a minimal rep");
      out.require(st.terminal == is_identity(st.v), "terminal flag vs v");
      if (st.terminal) {
        out.require(st.gamma == st.mu, "terminal step moved the coweight");
        continue;
      }
      for (int p = 0; p < R.num_positive_roots(); ++p) {
        if (root_support(R, p).subset_of(J)) continue;
        out.require(R.pair(st.mu, static_cast<SignedRoot>(p + 1)) >= st.m,
                    "mu pairing below the shift scale");
      }
      out.require(face.proper_subset_of(J), "face did not shrink");
      Int next_floor = checked_pow(base, static_cast<int>(face.size()) + 1);
      for (int i = 0; i < rank; ++i)
        if (!face.contains(i))
          out.require(st.gamma.c[i] >= next_floor, "gamma too shallow to recurse");
      out.require(is_min_coset_rep(R, st.x_new, face) && supp(R, st.x_new) == S,
                  "reduced element lost minimality or support");
    }
  }
  return out;
}

// 8: stratum and boundary counts, and the closure relation is a partial
// order on the full label set.
Outcome stratum_counts(double&) {
  Outcome out;
  struct Expect {
    int rank;
    std::size_t labels;
    std::size_t boundary;
  };
  for (const Expect& e : {Expect{1, 3, 1}, Expect{2, 13, 5}}) {
    RootSystem R = RootSystem::build('A', e.rank);
    std::vector<GPieceLabel> all = enumerate_gpieces(R);
    out.require(all.size() == e.labels, R.name() + " stratum count");
    out.require(steinberg_boundary(R).size() == e.boundary, R.name() + " boundary");
    std::size_t n = all.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        leq[i][j] = gpiece_closure_contains(R, all[i], all[j]);
    for (std::size_t i = 0; i < n; ++i) {
      out.require(leq[i][i], "not reflexive");
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) out.require(!(leq[i][j] && leq[j][i]), "not antisymmetric");
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (leq[j][k]) out.require(leq[i][k], "not transitive");
      }
    }
  }
  return out;
}

// 9: minimal-representative labels biject onto the strata exhaustively over
// (J, x), the face transports through the diagram symmetry, and the
// longest-element twist is an involution.
Outcome relabel_bijection(double&) {
  Outcome out;
  for (int rank : {2, 3}) {
    RootSystem R = RootSystem::build('A', rank);
    std::vector<GPieceLabel> all = enumerate_gpieces(R);
    std::vector<int> delta = diagram_involution(R);

    std::set<std::pair<std::uint32_t, std::vector<int>>> image;
    std::size_t domain = 0;
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
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
        out.require(found, "image label missing from the stratum list");
      }
    }
    out.require(image.size() == domain, "relabeling not injective");
    out.require(domain == all.size(), "relabeling not onto");

    std::vector<Int> c(rank, 0);
    for (;;) {
      Coweight lambda(c);
      NodeSet J = i_lambda(R, lambda);
      NodeSet mapped;
      for (int i : J.nodes(rank)) mapped.add(delta[i]);
      Coweight w0l = act(R, longest_element(R), lambda);
      out.require(i_lambda(R, neg(w0l)) == mapped, "face transport mismatch");
      int k = 0;
      while (k < rank && ++c[k] > 2) c[k++] = 0;
      if (k == rank) break;
    }
    for (const WeylElt& w : enumerate_group(R))
      out.require(star(R, star(R, w)) == w, "double twist is not the identity");
  }
  return out;
}

} // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    std::function<Outcome(double&)> run;
  };
  const std::vector<Criterion> criteria{
      {"1 pinned A3 instance", pinned_instance},
      {"2 word-length formula", length_formula},
      {"3 orbit minimality equivalence", orbit_minimality},
      {"4 piece recursion vs brute force", pieces_vs_brute},
      {"5 meeting is coweight-independent", meeting_invariance},
      {"6 deep regular table consistency", table_consistency},
      {"7 face reduction postconditions", face_reduction},
      {"8 stratum counts and closure order", stratum_counts},
      {"9 relabeling bijection", relabel_bijection},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    double limit_s = 0.0; // zero means no time limit
    Outcome out;
    std::string error;
    auto t0 = Clock::now();
    try {
      out = c.run(limit_s);
    } catch (const std::exception& e) {
      out.ok = false;
      error = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
      out.ok = false;
      out.detail = "over the time limit";
    }
    if (out.ok) {
      std::printf("PASS  %-36s %7zu checks  %6.2fs\n", c.name, out.checks, secs);
    } else {
      ++failures;
      std::printf("FAIL  %-36s %s\n", c.name,
                  error.empty() ? out.detail.c_str() : error.c_str());
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
