#include "adlv/afweyl.hpp"

#include <algorithm>

namespace adlv {

AffineElt aff_identity(const RootSystem& R) { return {identity(R), Coweight::zero(R.rank())}; }

AffineElt from_finite(const RootSystem& R, const WeylElt& w) {
  check_same_system(R, w);
  return {w, Coweight::zero(R.rank())};
}

AffineElt from_translation(const RootSystem& R, const Coweight& chi) {
  if (chi.rank() != R.rank()) throw InvalidInput("coweight rank does not match root system " + R.name());
  return {identity(R), chi};
}

AffineElt affine_s0(const RootSystem& R) {
  // eps^{theta^vee} s_theta = s_theta eps^{-theta^vee}.
  return {reflection(R, R.theta()), neg(R.theta_coroot())};
}

AffineElt aff_mul(const RootSystem& R, const AffineElt& a, const AffineElt& b) {
  AffineElt r;
  r.fin = mul(R, a.fin, b.fin);
  r.trans = add(act(R, inv(R, b.fin), a.trans), b.trans);
  return r;
}

AffineElt aff_inv(const RootSystem& R, const AffineElt& a) {
  AffineElt r;
  r.fin = inv(R, a.fin);
  r.trans = neg(act(R, a.fin, a.trans));
  return r;
}

bool aff_is_identity(const AffineElt& a) { return is_identity(a.fin) && a.trans.is_zero(); }

int num_affine_gens(const RootSystem& R) { return R.rank() + 1; }

AffineElt affine_gen(const RootSystem& R, int g) {
  if (g < 0 || g > R.rank()) throw InvalidInput("affine generator index out of range");
  if (g == 0) return affine_s0(R);
  return from_finite(R, simple(R, g - 1));
}

AffineElt aff_mul_gen_left(const RootSystem& R, int g, const AffineElt& a) {
  if (g == 0) return aff_mul(R, affine_s0(R), a);
  return {mul_simple_left(R, g - 1, a.fin), a.trans};
}

AffineElt aff_mul_gen_right(const RootSystem& R, const AffineElt& a, int g) {
  if (g == 0) return aff_mul(R, a, affine_s0(R));
  int i = g - 1;
  AffineElt r;
  r.fin = mul_simple_right(R, a.fin, i);
  // act(s_i, chi)[j] = chi[j] - chi[i]*cartan[i][j]
  r.trans = a.trans;
  Int ci = a.trans.c[i];
  for (int j = 0; j < R.rank(); ++j)
    r.trans.c[j] = checked_sub(r.trans.c[j], checked_mul(ci, R.cartan()[i][j]));
  return r;
}

AffineElt conj_by_simple(const RootSystem& R, const AffineElt& a, int i) {
  return aff_mul_gen_right(R, aff_mul_gen_left(R, i + 1, a), i + 1);
}

Int length_affine(const RootSystem& R, const AffineElt& a) {
  check_same_system(R, a.fin);
  if (a.trans.rank() != R.rank()) throw InvalidInput("coweight rank does not match root system " + R.name());
  Int l = 0;
  for (int p = 0; p < R.num_positive_roots(); ++p) {
    Int m = R.pair(a.trans, p + 1);
    if (a.fin.img[p] > 0)
      l = checked_add(l, checked_abs(m));
    else
      l = checked_add(l, checked_abs(checked_add(m, 1)));
  }
  return l;
}

bool in_affine_subgroup(const RootSystem& R, const AffineElt& a) {
  return in_coroot_lattice(R, a.trans);
}

bool aff_right_descent(const RootSystem& R, const AffineElt& a, int g) {
  return length_affine(R, aff_mul_gen_right(R, a, g)) < length_affine(R, a);
}

bool aff_left_descent(const RootSystem& R, const AffineElt& a, int g) {
  return length_affine(R, aff_mul_gen_left(R, g, a)) < length_affine(R, a);
}

bool is_min_rep(const RootSystem& R, const AffineElt& a, const NodeSet& J) {
  Int la = length_affine(R, a);
  for (int i : J.nodes(R.rank()))
    if (length_affine(R, aff_mul_gen_right(R, a, i + 1)) < la) return false;
  return true;
}

bool is_min_rep_S(const RootSystem& R, const AffineElt& a) {
  return is_min_rep(R, a, NodeSet::full(R.rank()));
}

DominantFactorization dominant_factor(const RootSystem& R, const Coweight& mu) {
  // Walk mu to the dominant chamber, recording the word; then peel the
  // stabilizer part so v is the minimal element with v(gamma) = mu.
  Coweight nu = mu;
  WeylElt g = identity(R);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < R.rank(); ++i) {
      if (nu.c[i] < 0) {
        Int ci = nu.c[i];
        for (int j = 0; j < R.rank(); ++j)
          nu.c[j] = checked_sub(nu.c[j], checked_mul(ci, R.cartan()[i][j]));
        g = mul_simple_right(R, g, i);
        moved = true;
        break;
      }
    }
  }
  // Now nu = gamma is dominant and g^{-1}... by construction
  // nu = s_{i_k} ... s_{i_1} (mu), with g = s_{i_1} ... s_{i_k}.
  // Hence g(nu) = mu, and the minimal coset representative of g W_{I(gamma)}
  // still maps gamma to mu.
  NodeSet I = i_lambda(R, nu);
  WeylElt v = coset_decompose(R, g, I).u;
  return {v, nu};
}

NormalForm normalize(const RootSystem& R, const AffineElt& a) {
  // a = w eps^chi = eps^{w chi} w; with mu = w(chi) we need
  // x(-lambda) = mu, lambda dominant, x minimal in x W_{I(lambda)},
  // y^{-1} = x^{-1} w.
  Coweight mu = act(R, a.fin, a.trans);
  DominantFactorization f = dominant_factor(R, neg(mu));
  NormalForm nf;
  nf.lambda = f.gamma;
  nf.J = i_lambda(R, f.gamma);
  nf.x = f.v;
  nf.y = mul(R, inv(R, a.fin), f.v);
  return nf;
}

AffineElt recompose(const RootSystem& R, const NormalForm& nf) {
  AffineElt t = from_translation(R, neg(nf.lambda));
  return aff_mul(R, aff_mul(R, from_finite(R, nf.x), t), from_finite(R, inv(R, nf.y)));
}

bool bruhat_leq_affine(const RootSystem& R, const AffineElt& a, const AffineElt& b) {
  // Comparable only within one coset of the length-zero subgroup.
  if (!in_affine_subgroup(R, aff_mul(R, a, aff_inv(R, b)))) return false;
  AffineElt x = a, y = b;
  Int lx = length_affine(R, x), ly = length_affine(R, y);
  while (true) {
    if (x == y) return true;
    if (lx > ly || ly == 0) return false;
    int g = -1;
    AffineElt ys;
    Int lys = 0;
    for (int k = 0; k <= R.rank(); ++k) {
      ys = aff_mul_gen_left(R, k, y);
      lys = length_affine(R, ys);
      if (lys < ly) {
        g = k;
        break;
      }
    }
    if (g < 0) throw Error("positive-length element with no left descent");
    AffineElt xs = aff_mul_gen_left(R, g, x);
    Int lxs = length_affine(R, xs);
    if (lxs < lx) {
      x = xs;
      lx = lxs;
    }
    y = ys;
    ly = lys;
  }
}

std::vector<int> reduced_word_affine(const RootSystem& R, const AffineElt& a) {
  if (!in_affine_subgroup(R, a))
    throw InvalidInput("reduced words exist only inside the affine Weyl group");
  std::vector<int> word;
  AffineElt cur = a;
  Int l = length_affine(R, cur);
  while (l > 0) {
    int g = -1;
    AffineElt nxt;
    Int ln = 0;
    for (int k = 0; k <= R.rank(); ++k) {
      nxt = aff_mul_gen_left(R, k, cur);
      ln = length_affine(R, nxt);
      if (ln < l) {
        g = k;
        break;
      }
    }
    if (g < 0) throw Error("positive-length element with no left descent");
    word.push_back(g);
    cur = nxt;
    l = ln;
  }
  if (!aff_is_identity(cur)) throw Error("nonzero-length residue after peeling descents");
  return word;
}

NodeSet relative_I(const RootSystem& R, const NodeSet& J, const AffineElt& w) {
  if (!is_min_rep(R, w, J)) throw InvalidInput("relative_I requires a minimal coset representative");
  NodeSet K = J;
  AffineElt wi = aff_inv(R, w);
  bool changed = true;
  while (changed) {
    changed = false;
    NodeSet K2;
    for (int i : K.nodes(R.rank())) {
      AffineElt c = aff_mul(R, aff_mul(R, w, from_finite(R, simple(R, i))), wi);
      if (!c.trans.is_zero()) continue;
      if (length(R, c.fin) != 1) continue;
      int j = -1;
      for (int t = 0; t < R.rank(); ++t)
        if (c.fin.img[t] == -(t + 1)) {
          j = t;
          break;
        }
      if (j >= 0 && K.contains(j)) K2.add(i);
    }
    if (K2 != K) {
      K = K2;
      changed = true;
    }
  }
  return K;
}

bool aff_less(const RootSystem& R, const AffineElt& a, const AffineElt& b) {
  Int la = length_affine(R, a), lb = length_affine(R, b);
  if (la != lb) return la < lb;
  if (a.fin != b.fin) return shortlex_less(R, a.fin, b.fin);
  return a.trans.c < b.trans.c;
}

} // namespace adlv
