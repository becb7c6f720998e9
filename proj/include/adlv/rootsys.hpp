#ifndef ADLV_ROOTSYS_HPP
#define ADLV_ROOTSYS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adlv/checked.hpp"
#include "adlv/nodeset.hpp"

namespace adlv {

// Coweight in fundamental-coweight coordinates: c[i] = <lambda, alpha_i>.
// For adjoint groups this identifies the cocharacter lattice with Z^rank.
struct Coweight {
  std::vector<Int> c;

  Coweight() = default;
  explicit Coweight(std::vector<Int> coords) : c(std::move(coords)) {}
  static Coweight zero(int rank) { return Coweight(std::vector<Int>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (Int v : c)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const Coweight& o) const { return c == o.c; }
  bool operator!=(const Coweight& o) const { return c != o.c; }
  bool operator<(const Coweight& o) const { return c < o.c; }
};

Coweight add(const Coweight& a, const Coweight& b);
Coweight sub(const Coweight& a, const Coweight& b);
Coweight neg(const Coweight& a);
Coweight scale(Int k, const Coweight& a);

// Signed root index: +(p+1) denotes positive root p, -(p+1) its negative.
using SignedRoot = int;

inline int sr_index(SignedRoot s) { return (s > 0 ? s : -s) - 1; }
inline bool sr_positive(SignedRoot s) { return s > 0; }
inline SignedRoot sr_negate(SignedRoot s) { return -s; }

// Immutable root datum for one irreducible type A-G. Positive roots are
// enumerated in height order; the first `rank` entries are the simple
// roots alpha_0 .. alpha_{rank-1} in node order.
class RootSystem {
public:
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  // Packed (type, rank) tag; group elements carry it so that operations on
  // elements of different systems can be rejected.
  std::uint16_t sys_tag() const { return static_cast<std::uint16_t>((type_ << 8) | rank_); }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<std::vector<Int>>& cartan() const { return cartan_; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  // Simple-root coordinates of positive root p.
  const std::vector<Int>& root_coords(int p) const { return roots_[p]; }
  // Fundamental-coweight coordinates of the coroot of positive root p.
  const std::vector<Int>& coroot_coords(int p) const { return coroots_[p]; }
  Int height(int p) const { return heights_[p]; }
  int theta() const { return theta_; }
  Coweight theta_coroot() const { return Coweight(coroots_[theta_]); }

  // Index of the positive root with the given simple-root coordinates, or
  // -1 if there is no such root.
  int root_index(const std::vector<Int>& coords) const;

  // Image of a signed root under the simple reflection s_i (table lookup).
  SignedRoot simple_reflect(int i, SignedRoot s) const {
    SignedRoot t = srefl_[i][sr_index(s)];
    return sr_positive(s) ? t : sr_negate(t);
  }

  // <lambda, alpha> for the signed root s, via linearity over the
  // simple-root coordinates. Checked arithmetic.
  Int pair(const Coweight& lambda, SignedRoot s) const;

  // <coroot of root p, root given by signed index s>.
  Int pair_coroot_root(int p, SignedRoot s) const;

private:
  RootSystem() = default;

  char type_ = 0;
  int rank_ = 0;
  std::vector<std::vector<Int>> cartan_;
  std::vector<std::vector<Int>> roots_;
  std::vector<std::vector<Int>> coroots_;
  std::vector<Int> heights_;
  int theta_ = -1;
  std::vector<std::vector<SignedRoot>> srefl_;
  std::map<std::vector<Int>, int> index_;

  void check_rank_match(const Coweight& cw) const;
};

// Nodes i with <lambda, alpha_i> = 0. Requires lambda dominant.
NodeSet i_lambda(const RootSystem& R, const Coweight& lambda);

bool is_dominant(const RootSystem& R, const Coweight& lambda);

// Coweight with <v, alpha_i> = 1 for i in J and 0 otherwise.
Coweight rho_vee_J(const RootSystem& R, const NodeSet& J);

// Half-sum-of-positive-coroots analogue: rho_vee_J over all of S.
Coweight rho_vee(const RootSystem& R);

// (<rho_vee, theta> + 2)^(rank+1): the threshold used by the
// quasi-regularity test below.
Int quasi_regular_bound(const RootSystem& R);

struct QuasiRegularity {
  bool quasi_regular;
  Int bound;
};

// lambda is quasi-regular when every root pairing is 0 or at least
// `bound` in absolute value.
QuasiRegularity is_quasi_regular(const RootSystem& R, const Coweight& lambda);

// Whether lambda lies in the coroot lattice (exact integer solve of the
// transposed Cartan system).
bool in_coroot_lattice(const RootSystem& R, const Coweight& lambda);

// Size of the finite Weyl group (closed formula per type).
std::uint64_t weyl_order(char type, int rank);

} // namespace adlv

#endif
