#include <algorithm>
#include <random>

#include "adlv/conj.hpp"
#include "adlv/oracle.hpp"
#include "adlv/pieces.hpp"
#include "adlv/words.hpp"
#include "doctest.h"

using namespace adlv;

namespace {

AffineElt make_xly(const RootSystem& R, const WeylElt& x, const Coweight& lambda,
                   const WeylElt& y) {
  AffineElt a = aff_mul(R, from_finite(R, x), from_translation(R, neg(lambda)));
  return aff_mul(R, a, aff_inv(R, from_finite(R, y)));
}

std::vector<AffineElt> box_elements(const RootSystem& R, Int radius) {
  std::vector<AffineElt> out;
  std::vector<Coweight> coords{Coweight(std::vector<Int>(R.rank(), -radius))};
  for (int i = 0; i < R.rank(); ++i) {
    std::vector<Coweight> next;
    for (const Coweight& c : coords)
      for (Int v = -radius; v <= radius; ++v) {
        Coweight d = c;
        d.c[i] = v;
        next.push_back(d);
      }
    coords = next;
  }
  for (const WeylElt& w : enumerate_group(R))
    for (const Coweight& c : coords) out.push_back(AffineElt{w, c});
  return out;
}

} // namespace

TEST_CASE("length oracle refuses oversized sweeps") {
  CHECK_THROWS_AS(word_length_oracle(RootSystem::build('A', 4), 4), GuardError);
  CHECK_THROWS_AS(word_length_oracle(RootSystem::build('A', 2), 11), GuardError);
  CHECK_THROWS_AS(word_length_oracle(RootSystem::build('A', 2), -1), InvalidInput);
}

TEST_CASE("rank one lengths match the word metric exactly") {
  RootSystem R = RootSystem::build('A', 1);
  OracleReport rep = word_length_oracle(R, 8);
  CHECK(rep.passed());
  // The rank one affine group is infinite dihedral: 2d new elements enter at
  // each depth d >= 1.
  CHECK(rep.instance_count == 17);
  CHECK(length_affine(R, from_translation(R, Coweight({2}))) == 2);
}

TEST_CASE("rank two lengths match the word metric") {
  for (char t : {'A', 'C'}) {
    RootSystem R = RootSystem::build(t, 2);
    OracleReport rep = word_length_oracle(R, 6);
    CHECK(rep.passed());
    CHECK(rep.instance_count > 50);
    CHECK(rep.check_name == std::string("word-length-") + t + "2");
  }
}

TEST_CASE("orbit oracle refuses large ranks by default") {
  RootSystem R = RootSystem::build('A', 5);
  CHECK_THROWS_AS(orbit_oracle(R, aff_identity(R)), GuardError);
  CHECK_THROWS_AS(kpieces_bruteforce(R, aff_identity(R)), GuardError);
}

TEST_CASE("a regular translation orbit is flat") {
  RootSystem R = RootSystem::build('A', 2);
  OrbitData data = orbit_oracle(R, from_translation(R, Coweight({1, 2})));
  CHECK(data.orbit.size() == 6);
  for (const AffineElt& e : data.orbit) CHECK(is_identity(e.fin));
  // Equal lengths throughout, so both minimality notions keep everything.
  CHECK(data.min_length_set == data.orbit);
  CHECK(data.bruhat_min_set == data.orbit);
}

TEST_CASE("the orbit does not depend on the starting point") {
  RootSystem R = RootSystem::build('A', 2);
  AffineElt a = make_xly(R, parse_finite(R, "s1 s2"), Coweight({2, 0}),
                         simple(R, 1));
  OrbitData base = orbit_oracle(R, a);
  for (const WeylElt& u : enumerate_group(R)) {
    AffineElt moved =
        aff_mul(R, from_finite(R, u), aff_mul(R, a, from_finite(R, inv(R, u))));
    OrbitData other = orbit_oracle(R, moved);
    CHECK(other.orbit == base.orbit);
  }
}

TEST_CASE("shortest orbit members are exactly the unpassable ones") {
  RootSystem R = RootSystem::build('A', 2);
  std::vector<WeylElt> W = enumerate_group(R);
  std::mt19937_64 eng(0x5eed);
  for (int trial = 0; trial < 200; ++trial) {
    WeylElt w = W[eng() % W.size()];
    Coweight c({static_cast<Int>(eng() % 7) - 3, static_cast<Int>(eng() % 7) - 3});
    AffineElt a{w, c};
    OrbitData data = orbit_oracle(R, a);
    CHECK(data.min_length_set == data.bruhat_min_set);
    if (trial % 4 == 0) {
      MinimalizationTrace tr = reduce_to_minimal(R, a);
      CHECK(approx_class(R, tr.result) == data.min_length_set);
    }
  }
}

TEST_CASE("piece brute force agrees with the recursive computation") {
  RootSystem R = RootSystem::build('A', 2);
  int min_reps = 0;
  for (const AffineElt& a : box_elements(R, 1)) {
    std::vector<AffineElt> brute = kpieces_bruteforce(R, a);
    CHECK(brute == kpieces(R, a, BranchPolicy::SmallestIndex).members);
    CHECK(brute == kpieces(R, a, BranchPolicy::LargestIndex).members);
    if (is_min_rep_S(R, a)) {
      ++min_reps;
      CHECK(brute == std::vector<AffineElt>{a});
    }
  }
  CHECK(min_reps > 5);
}

TEST_CASE("the scaled-down pinned instance has a single piece") {
  RootSystem R = RootSystem::build('A', 3);
  // Smallest coweight with face {0} that the translation subgroup contains.
  Coweight lambda({0, 4, 4});
  CHECK(in_coroot_lattice(R, lambda));
  CHECK(!in_coroot_lattice(R, Coweight({0, 2, 2})));

  AffineElt a = make_xly(R, parse_finite(R, "s2 s1 s3 s2"), lambda,
                         parse_finite(R, "s3 s2"));
  AffineElt expect{parse_finite(R, "s3 s2"), neg(lambda)};
  CHECK(kpieces_bruteforce(R, a) == std::vector<AffineElt>{expect});
  CHECK(kpieces(R, a).members == std::vector<AffineElt>{expect});
}
