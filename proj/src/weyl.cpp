#include "adlv/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace adlv {

void check_same_system(const RootSystem& R, const WeylElt& w) {
  if (w.sys != R.sys_tag() || static_cast<int>(w.img.size()) != R.num_positive_roots())
    throw InvalidInput("element does not belong to root system " + R.name());
}

WeylElt identity(const RootSystem& R) {
  WeylElt w;
  w.sys = R.sys_tag();
  w.img.resize(R.num_positive_roots());
  for (int p = 0; p < R.num_positive_roots(); ++p) w.img[p] = static_cast<std::int16_t>(p + 1);
  return w;
}

WeylElt simple(const RootSystem& R, int i) {
  if (i < 0 || i >= R.rank()) throw InvalidInput("simple reflection index out of range");
  WeylElt w;
  w.sys = R.sys_tag();
  w.img.resize(R.num_positive_roots());
  for (int p = 0; p < R.num_positive_roots(); ++p)
    w.img[p] = static_cast<std::int16_t>(R.simple_reflect(i, p + 1));
  return w;
}

WeylElt reflection(const RootSystem& R, int p) {
  if (p < 0 || p >= R.num_positive_roots()) throw InvalidInput("root index out of range");
  WeylElt w;
  w.sys = R.sys_tag();
  w.img.resize(R.num_positive_roots());
  for (int q = 0; q < R.num_positive_roots(); ++q) {
    // s_alpha(beta) = beta - <alpha^vee, beta> alpha
    Int m = R.pair_coroot_root(p, q + 1);
    std::vector<Int> coords = R.root_coords(q);
    const std::vector<Int>& a = R.root_coords(p);
    for (int j = 0; j < R.rank(); ++j) coords[j] = checked_sub(coords[j], checked_mul(m, a[j]));
    bool positive = true;
    for (Int v : coords)
      if (v < 0) positive = false;
    if (!positive)
      for (Int& v : coords) v = -v;
    int idx = R.root_index(coords);
    if (idx < 0) throw Error("reflection image is not a root");
    w.img[q] = static_cast<std::int16_t>(positive ? idx + 1 : -(idx + 1));
  }
  return w;
}

SignedRoot apply_root(const RootSystem& R, const WeylElt& w, SignedRoot s) {
  (void)R;
  SignedRoot t = w.img[sr_index(s)];
  return sr_positive(s) ? t : sr_negate(t);
}

WeylElt mul(const RootSystem& R, const WeylElt& a, const WeylElt& b) {
  check_same_system(R, a);
  check_same_system(R, b);
  WeylElt w;
  w.sys = a.sys;
  w.img.resize(a.img.size());
  for (std::size_t p = 0; p < a.img.size(); ++p)
    w.img[p] = static_cast<std::int16_t>(apply_root(R, a, b.img[p]));
  return w;
}

WeylElt inv(const RootSystem& R, const WeylElt& a) {
  check_same_system(R, a);
  WeylElt w;
  w.sys = a.sys;
  w.img.resize(a.img.size());
  for (std::size_t p = 0; p < a.img.size(); ++p) {
    SignedRoot t = a.img[p];
    if (sr_positive(t))
      w.img[sr_index(t)] = static_cast<std::int16_t>(p + 1);
    else
      w.img[sr_index(t)] = static_cast<std::int16_t>(-(static_cast<int>(p) + 1));
  }
  return w;
}

WeylElt mul_simple_left(const RootSystem& R, int i, const WeylElt& a) {
  check_same_system(R, a);
  WeylElt w;
  w.sys = a.sys;
  w.img.resize(a.img.size());
  for (std::size_t p = 0; p < a.img.size(); ++p)
    w.img[p] = static_cast<std::int16_t>(R.simple_reflect(i, a.img[p]));
  return w;
}

WeylElt mul_simple_right(const RootSystem& R, const WeylElt& a, int i) {
  check_same_system(R, a);
  WeylElt w;
  w.sys = a.sys;
  w.img.resize(a.img.size());
  for (std::size_t p = 0; p < a.img.size(); ++p)
    w.img[p] = static_cast<std::int16_t>(apply_root(R, a, R.simple_reflect(i, static_cast<int>(p) + 1)));
  return w;
}

Coweight act(const RootSystem& R, const WeylElt& w, const Coweight& lambda) {
  check_same_system(R, w);
  if (lambda.rank() != R.rank()) throw InvalidInput("coweight rank does not match root system " + R.name());
  WeylElt wi = inv(R, w);
  Coweight out = Coweight::zero(R.rank());
  for (int j = 0; j < R.rank(); ++j) out.c[j] = R.pair(lambda, wi.img[j]);
  return out;
}

int length(const RootSystem& R, const WeylElt& w) {
  check_same_system(R, w);
  int l = 0;
  for (std::int16_t v : w.img)
    if (v < 0) ++l;
  return l;
}

bool is_identity(const WeylElt& w) {
  for (std::size_t p = 0; p < w.img.size(); ++p)
    if (w.img[p] != static_cast<int>(p) + 1) return false;
  return true;
}

bool left_descent(const RootSystem& R, const WeylElt& w, int i) {
  check_same_system(R, w);
  // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0; locate the preimage of alpha_i.
  for (std::size_t p = 0; p < w.img.size(); ++p) {
    if (w.img[p] == -(i + 1)) return true;
    if (w.img[p] == i + 1) return false;
  }
  throw Error("simple root image not found");
}

bool right_descent(const RootSystem& R, const WeylElt& w, int i) {
  check_same_system(R, w);
  return w.img[i] < 0;
}

std::vector<int> reduced_word(const RootSystem& R, const WeylElt& w) {
  check_same_system(R, w);
  std::vector<int> word;
  WeylElt u = w;
  WeylElt ui = inv(R, w);
  // Peeling the smallest left descent at each step yields the ShortLex
  // least reduced word.
  while (!is_identity(u)) {
    int best = -1;
    for (int i = 0; i < R.rank(); ++i)
      if (ui.img[i] < 0) {
        best = i;
        break;
      }
    if (best < 0) throw Error("non-identity element with no left descent");
    word.push_back(best);
    u = mul_simple_left(R, best, u);
    ui = mul_simple_right(R, ui, best);
  }
  return word;
}

NodeSet supp(const RootSystem& R, const WeylElt& w) {
  NodeSet s;
  for (int i : reduced_word(R, w)) s.add(i);
  return s;
}

bool bruhat_leq(const RootSystem& R, const WeylElt& a, const WeylElt& b) {
  check_same_system(R, a);
  check_same_system(R, b);
  WeylElt x = a, y = b;
  while (true) {
    if (x == y) return true;
    int lx = length(R, x), ly = length(R, y);
    if (lx > ly || ly == 0) return false;
    int i = -1;
    for (int j = 0; j < R.rank(); ++j)
      if (left_descent(R, y, j)) {
        i = j;
        break;
      }
    if (left_descent(R, x, i)) x = mul_simple_left(R, i, x);
    y = mul_simple_left(R, i, y);
  }
}

WeylElt longest_element(const RootSystem& R) {
  WeylElt w = identity(R);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < R.rank(); ++i)
      if (w.img[i] > 0) {
        w = mul_simple_right(R, w, i);
        moved = true;
        break;
      }
  }
  return w;
}

std::vector<int> diagram_involution(const RootSystem& R) {
  WeylElt w0 = longest_element(R);
  std::vector<int> delta(R.rank(), -1);
  for (int i = 0; i < R.rank(); ++i) {
    SignedRoot t = w0.img[i];
    if (t >= 0 || R.height(sr_index(t)) != 1) throw Error("w0 does not negate the simple roots");
    delta[i] = sr_index(t);
  }
  return delta;
}

WeylElt star(const RootSystem& R, const WeylElt& w) {
  WeylElt w0 = longest_element(R);
  return mul(R, mul(R, w0, w), w0);
}

CosetDecomposition coset_decompose(const RootSystem& R, const WeylElt& a, const NodeSet& J) {
  check_same_system(R, a);
  WeylElt u = a;
  WeylElt v = identity(R);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j < R.rank(); ++j) {
      if (!J.contains(j)) continue;
      if (u.img[j] < 0) {
        u = mul_simple_right(R, u, j);
        v = mul_simple_left(R, j, v);
        moved = true;
        break;
      }
    }
  }
  return {u, v};
}

bool is_min_coset_rep(const RootSystem& R, const WeylElt& a, const NodeSet& J) {
  check_same_system(R, a);
  for (int j = 0; j < R.rank(); ++j)
    if (J.contains(j) && a.img[j] < 0) return false;
  return true;
}

bool shortlex_less(const RootSystem& R, const WeylElt& a, const WeylElt& b) {
  int la = length(R, a), lb = length(R, b);
  if (la != lb) return la < lb;
  return reduced_word(R, a) < reduced_word(R, b);
}

namespace {

std::vector<WeylElt> closure_under(const RootSystem& R, const std::vector<int>& gens, const Guards& g) {
  // The guard scales with the subgroup actually generated, not the ambient
  // system, so small parabolics of big systems stay available.
  g.check_enumeration(static_cast<int>(gens.size()), "group enumeration");
  std::unordered_set<WeylElt, WeylEltHash> seen;
  std::vector<WeylElt> pool{identity(R)};
  seen.insert(pool[0]);
  for (std::size_t k = 0; k < pool.size(); ++k) {
    WeylElt cur = pool[k];
    for (int i : gens) {
      WeylElt nxt = mul_simple_right(R, cur, i);
      if (seen.insert(nxt).second) pool.push_back(nxt);
    }
  }
  std::sort(pool.begin(), pool.end(),
            [&R](const WeylElt& a, const WeylElt& b) { return shortlex_less(R, a, b); });
  return pool;
}

} // namespace

std::vector<WeylElt> enumerate_group(const RootSystem& R, const Guards& g) {
  std::vector<int> gens;
  for (int i = 0; i < R.rank(); ++i) gens.push_back(i);
  return closure_under(R, gens, g);
}

std::vector<WeylElt> enumerate_parabolic(const RootSystem& R, const NodeSet& J, const Guards& g) {
  return closure_under(R, J.nodes(R.rank()), g);
}

std::vector<WeylElt> enumerate_WJ_reps(const RootSystem& R, const NodeSet& J, const Guards& g) {
  std::vector<WeylElt> out;
  for (const WeylElt& w : enumerate_group(R, g))
    if (is_min_coset_rep(R, w, J)) out.push_back(w);
  return out;
}

} // namespace adlv
