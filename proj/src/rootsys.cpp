#include "adlv/rootsys.hpp"

#include <algorithm>
#include <set>

namespace adlv {

Coweight add(const Coweight& a, const Coweight& b) {
  if (a.rank() != b.rank()) throw InvalidInput("coweight rank mismatch");
  Coweight r = a;
  for (int i = 0; i < a.rank(); ++i) r.c[i] = checked_add(a.c[i], b.c[i]);
  return r;
}

Coweight sub(const Coweight& a, const Coweight& b) {
  if (a.rank() != b.rank()) throw InvalidInput("coweight rank mismatch");
  Coweight r = a;
  for (int i = 0; i < a.rank(); ++i) r.c[i] = checked_sub(a.c[i], b.c[i]);
  return r;
}

Coweight neg(const Coweight& a) {
  Coweight r = a;
  for (int i = 0; i < a.rank(); ++i) r.c[i] = checked_neg(a.c[i]);
  return r;
}

Coweight scale(Int k, const Coweight& a) {
  Coweight r = a;
  for (int i = 0; i < a.rank(); ++i) r.c[i] = checked_mul(k, a.c[i]);
  return r;
}

namespace {

// cartan[i][j] = <alpha_i^vee, alpha_j>, so s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i
// and s_i on coweights is c[j] -> c[j] - c[i]*cartan[i][j].
std::vector<std::vector<Int>> cartan_matrix(char type, int rank) {
  auto bad = [&] { throw InvalidInput(std::string("invalid type/rank: ") + type + std::to_string(rank)); };
  std::vector<std::vector<Int>> C(rank, std::vector<Int>(rank, 0));
  for (int i = 0; i < rank; ++i) C[i][i] = 2;
  auto bond = [&](int i, int j, Int cij, Int cji) {
    C[i][j] = cij;
    C[j][i] = cji;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
  };
  switch (type) {
    case 'A':
      if (rank < 1) bad();
      chain(0, rank - 1);
      break;
    case 'B':
      if (rank < 2) bad();
      chain(0, rank - 2);
      bond(rank - 2, rank - 1, -1, -2);
      break;
    case 'C':
      if (rank < 2) bad();
      chain(0, rank - 2);
      bond(rank - 2, rank - 1, -2, -1);
      break;
    case 'D':
      if (rank < 3) bad();
      chain(0, rank - 2);
      bond(rank - 3, rank - 1, -1, -1);
      break;
    case 'E': {
      if (rank < 6 || rank > 8) bad();
      // Nodes 1,3,4,...,rank form a chain; node 2 attaches to node 4.
      bond(0, 2, -1, -1);
      for (int i = 2; i < rank - 1; ++i) bond(i, i + 1, -1, -1);
      bond(1, 3, -1, -1);
      break;
    }
    case 'F':
      if (rank != 4) bad();
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case 'G':
      if (rank != 2) bad();
      bond(0, 1, -3, -1);
      break;
    default:
      bad();
  }
  return C;
}

int expected_num_positive_roots(char type, int rank) {
  switch (type) {
    case 'A': return rank * (rank + 1) / 2;
    case 'B':
    case 'C': return rank * rank;
    case 'D': return rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

} // namespace

RootSystem RootSystem::build(char type, int rank) {
  RootSystem R;
  R.type_ = type;
  R.rank_ = rank;
  R.cartan_ = cartan_matrix(type, rank);

  // Reflection closure starting from the simple roots. Every positive root
  // is reached by a chain of simple reflections through positive roots.
  std::set<std::vector<Int>> seen;
  for (int i = 0; i < rank; ++i) {
    std::vector<Int> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
  }
  std::vector<std::vector<Int>> pool(seen.begin(), seen.end());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    std::vector<Int> a = pool[k];
    for (int i = 0; i < rank; ++i) {
      Int m = 0;
      for (int j = 0; j < rank; ++j) m = checked_add(m, checked_mul(R.cartan_[i][j], a[j]));
      std::vector<Int> b = a;
      b[i] = checked_sub(b[i], m);
      bool positive = true;
      for (Int v : b)
        if (v < 0) positive = false;
      if (positive && seen.insert(b).second) pool.push_back(b);
    }
  }

  R.roots_.assign(seen.begin(), seen.end());
  std::sort(R.roots_.begin(), R.roots_.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int ha = 0, hb = 0;
    for (Int v : a) ha += v;
    for (Int v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  // Simple roots come first (height 1); reorder them by node index.
  std::sort(R.roots_.begin(), R.roots_.begin() + rank,
            [](const std::vector<Int>& a, const std::vector<Int>& b) {
              auto node = [](const std::vector<Int>& v) {
                return std::find(v.begin(), v.end(), 1) - v.begin();
              };
              return node(a) < node(b);
            });

  int n = static_cast<int>(R.roots_.size());
  if (n != expected_num_positive_roots(type, rank))
    throw Error("root enumeration produced an unexpected count for " + R.name());

  for (int p = 0; p < n; ++p) {
    Int h = 0;
    for (Int v : R.roots_[p]) h = checked_add(h, v);
    R.heights_.push_back(h);
    R.index_[R.roots_[p]] = p;
  }
  if (R.heights_[n - 1] == (n >= 2 ? R.heights_[n - 2] : Int(-1)))
    throw Error("highest root is not unique for " + R.name());
  R.theta_ = n - 1;

  // Coroots: carry coroot coordinates along the same reflection closure.
  // s_i on a coweight mu is mu[j] -> mu[j] - mu[i]*cartan[i][j].
  R.coroots_.assign(n, {});
  std::vector<bool> have(n, false);
  std::vector<int> todo;
  for (int i = 0; i < rank; ++i) {
    R.coroots_[i] = R.cartan_[i];
    have[i] = true;
    todo.push_back(i);
  }
  for (std::size_t k = 0; k < todo.size(); ++k) {
    int p = todo[k];
    for (int i = 0; i < rank; ++i) {
      Int m = 0;
      for (int j = 0; j < rank; ++j) m = checked_add(m, checked_mul(R.cartan_[i][j], R.roots_[p][j]));
      std::vector<Int> b = R.roots_[p];
      b[i] = checked_sub(b[i], m);
      bool positive = true;
      for (Int v : b)
        if (v < 0) positive = false;
      if (!positive) continue;
      int q = R.index_.at(b);
      if (have[q]) continue;
      std::vector<Int> cv = R.coroots_[p];
      Int ci = cv[i];
      for (int j = 0; j < rank; ++j) cv[j] = checked_sub(cv[j], checked_mul(ci, R.cartan_[i][j]));
      R.coroots_[q] = cv;
      have[q] = true;
      todo.push_back(q);
    }
  }
  for (int p = 0; p < n; ++p)
    if (!have[p]) throw Error("coroot closure incomplete for " + R.name());

  // Simple reflection tables on positive roots. s_i permutes the positive
  // roots other than alpha_i and negates alpha_i.
  R.srefl_.assign(rank, std::vector<SignedRoot>(n, 0));
  for (int i = 0; i < rank; ++i) {
    for (int p = 0; p < n; ++p) {
      Int m = 0;
      for (int j = 0; j < rank; ++j) m = checked_add(m, checked_mul(R.cartan_[i][j], R.roots_[p][j]));
      std::vector<Int> b = R.roots_[p];
      b[i] = checked_sub(b[i], m);
      bool positive = true;
      for (Int v : b)
        if (v < 0) positive = false;
      if (positive) {
        R.srefl_[i][p] = R.index_.at(b) + 1;
      } else {
        for (Int& v : b) v = -v;
        R.srefl_[i][p] = -(R.index_.at(b) + 1);
      }
    }
  }
  return R;
}

int RootSystem::root_index(const std::vector<Int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

void RootSystem::check_rank_match(const Coweight& cw) const {
  if (cw.rank() != rank_) throw InvalidInput("coweight rank does not match root system " + name());
}

Int RootSystem::pair(const Coweight& lambda, SignedRoot s) const {
  check_rank_match(lambda);
  const std::vector<Int>& coords = roots_[sr_index(s)];
  Int m = 0;
  for (int j = 0; j < rank_; ++j) m = checked_add(m, checked_mul(coords[j], lambda.c[j]));
  return sr_positive(s) ? m : checked_neg(m);
}

Int RootSystem::pair_coroot_root(int p, SignedRoot s) const {
  const std::vector<Int>& cv = coroots_[p];
  const std::vector<Int>& coords = roots_[sr_index(s)];
  Int m = 0;
  for (int j = 0; j < rank_; ++j) m = checked_add(m, checked_mul(coords[j], cv[j]));
  return sr_positive(s) ? m : checked_neg(m);
}

bool is_dominant(const RootSystem& R, const Coweight& lambda) {
  if (lambda.rank() != R.rank()) throw InvalidInput("coweight rank does not match root system " + R.name());
  for (int i = 0; i < R.rank(); ++i)
    if (lambda.c[i] < 0) return false;
  return true;
}

NodeSet i_lambda(const RootSystem& R, const Coweight& lambda) {
  if (!is_dominant(R, lambda)) throw InvalidInput("i_lambda requires a dominant coweight");
  NodeSet J;
  for (int i = 0; i < R.rank(); ++i)
    if (lambda.c[i] == 0) J.add(i);
  return J;
}

Coweight rho_vee_J(const RootSystem& R, const NodeSet& J) {
  Coweight v = Coweight::zero(R.rank());
  for (int i = 0; i < R.rank(); ++i)
    if (J.contains(i)) v.c[i] = 1;
  return v;
}

Coweight rho_vee(const RootSystem& R) { return rho_vee_J(R, NodeSet::full(R.rank())); }

Int quasi_regular_bound(const RootSystem& R) {
  Int h = R.height(R.theta());
  return checked_pow(checked_add(h, 2), R.rank() + 1);
}

QuasiRegularity is_quasi_regular(const RootSystem& R, const Coweight& lambda) {
  Int bound = quasi_regular_bound(R);
  for (int p = 0; p < R.num_positive_roots(); ++p) {
    Int m = checked_abs(R.pair(lambda, p + 1));
    if (m != 0 && m < bound) return {false, bound};
  }
  return {true, bound};
}

bool in_coroot_lattice(const RootSystem& R, const Coweight& lambda) {
  if (lambda.rank() != R.rank()) throw InvalidInput("coweight rank does not match root system " + R.name());
  // Solve C^T m = c exactly: lambda = sum_i m_i alpha_i^vee iff
  // c_j = sum_i cartan[i][j] m_i has an integer solution.
  int n = R.rank();
  // Fraction-free (Bareiss) elimination keeps intermediate entries equal to
  // minors, so the Cartan block stays small and only the augmented column
  // scales with the input.
  std::vector<std::vector<Int>> A(n, std::vector<Int>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) A[j][i] = R.cartan()[i][j];
    A[j][n] = lambda.c[j];
  }
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (A[r][k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("Cartan matrix is singular for " + R.name());
    std::swap(A[k], A[piv]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j <= n; ++j)
        A[i][j] = checked_sub(checked_mul(A[k][k], A[i][j]), checked_mul(A[i][k], A[k][j])) / prev;
      A[i][k] = 0;
    }
    prev = A[k][k];
  }
  // The unique rational solution is integral iff every back-substitution
  // division is exact.
  std::vector<Int> m(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    Int num = A[i][n];
    for (int j = i + 1; j < n; ++j) num = checked_sub(num, checked_mul(A[i][j], m[j]));
    if (num % A[i][i] != 0) return false;
    m[i] = num / A[i][i];
  }
  return true;
}

std::uint64_t weyl_order(char type, int rank) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  switch (type) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (std::uint64_t(1) << rank) * fact(rank);
    case 'D': return (std::uint64_t(1) << (rank - 1)) * fact(rank);
    case 'E': return rank == 6 ? 51840ull : (rank == 7 ? 2903040ull : 696729600ull);
    case 'F': return 1152ull;
    case 'G': return 12ull;
  }
  throw InvalidInput(std::string("invalid type: ") + type);
}

} // namespace adlv
