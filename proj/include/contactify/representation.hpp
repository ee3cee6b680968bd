#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contactify/clifford.hpp"
#include "contactify/matrix.hpp"

namespace contactify {

struct NotClosed : std::runtime_error {
  NotClosed(const std::string& what) : std::runtime_error(what) {}
};
struct NotIndependent : std::runtime_error {
  NotIndependent(const std::string& what) : std::runtime_error(what) {}
};
struct SingularKilling : std::runtime_error {
  SingularKilling(const std::string& what) : std::runtime_error(what) {}
};
struct NotBlockDiagonal : std::runtime_error {
  NotBlockDiagonal(const std::string& what) : std::runtime_error(what) {}
};
struct NotInvariant : std::runtime_error {
  NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

/// Indexed family of square matrices over a shared abstract generator basis.
struct Representation {
  std::vector<QMatrix> matrices;
  std::vector<std::string> labels;

  int dim_algebra() const { return int(matrices.size()); }
  int space_dim() const { return matrices.empty() ? 0 : matrices[0].rows(); }

  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> l(n);
    for (int i = 0; i < n; i++) l[i] = "A_" + std::to_string(i + 1);
    return l;
  }
  static Representation make(std::vector<QMatrix> mats) {
    Representation r;
    r.labels = default_labels(int(mats.size()));
    r.matrices = std::move(mats);
    return r;
  }
};

/// Pair index I(i,j) = 1 + i + (j-3)j/2, a bijection from pairs 1<=i<j<=m
/// onto 1..m(m-1)/2 (1-based).
inline int pair_index(int i, int j) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("pair_index: need 1 <= i < j");
  return 1 + i + ((j - 3) * j) / 2;
}

/// Inverse of pair_index.
inline std::pair<int, int> pair_from_index(int idx) {
  for (int j = 2;; j++) {
    int lo = 1 + (j - 1) * (j - 2) / 2;  // index of (1, j)
    if (idx <= lo + j - 2) return {idx - lo + 1, j};
  }
}

/// Spin representation from Clifford generators: one generator per pair
/// (i < j), rho(A_I(i,j)) = (1/2) g_i g_j, ordered by pair index; optionally
/// followed by the scaling generator (1/2) Id.
inline Representation spin_representation(const CliffordGenerators& gens, bool add_scaling) {
  int m = gens.count();
  std::vector<QMatrix> mats(m * (m - 1) / 2);
  for (int j = 2; j <= m; j++)
    for (int i = 1; i < j; i++)
      mats[pair_index(i, j) - 1] = half() * (gens.generators[i - 1] * gens.generators[j - 1]);
  if (add_scaling) mats.push_back(half() * QMatrix::identity(gens.size()));
  return Representation::make(std::move(mats));
}

/// Structure constants c^K_{IJ} with [A_I, A_J] = c^K_{IJ} A_K. Stored
/// sparsely for I < J; antisymmetric in (I, J).
struct StructureConstants {
  int dim = 0;
  // terms[I][J] (0-based, I<J) = list of (K, c^K_IJ)
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> terms;

  const std::vector<std::pair<int, Rational>>& upper(int i, int j) const {
    return terms[i][j];
  }

  /// Coefficients of [A_I, A_J] for any order of I, J (0-based).
  std::vector<std::pair<int, Rational>> bracket(int i, int j) const {
    if (i == j) return {};
    if (i < j) return terms[i][j];
    auto out = terms[j][i];
    for (auto& [k, v] : out) v = -v;
    return out;
  }

  /// Dense matrix of ad(A_I): (ad_I)^K_J = c^K_{IJ}.
  QMatrix ad(int i) const {
    QMatrix m(dim, dim);
    for (int j = 0; j < dim; j++)
      for (auto& [k, v] : bracket(i, j)) m(k, j) = v;
    return m;
  }

  bool jacobi_holds() const {
    for (int i = 0; i < dim; i++)
      for (int j = i + 1; j < dim; j++)
        for (int k = j + 1; k < dim; k++) {
          std::map<int, Rational> acc;
          auto add_term = [&](int a, int b, int c) {
            for (auto& [l, v] : bracket(a, b))
              for (auto& [m2, w] : bracket(l, c)) acc[m2] += v * w;
          };
          // [[i,j],k] + [[j,k],i] + [[k,i],j]
          add_term(i, j, k);
          add_term(j, k, i);
          add_term(k, i, j);
          for (auto& [l, v] : acc)
            if (!v.is_zero()) return false;
        }
    return true;
  }
};

/// Expands every commutator of the representation matrices in the matrix
/// basis. Throws NotIndependent when the matrices are linearly dependent and
/// NotClosed when some commutator leaves their span.
inline StructureConstants structure_constants(const Representation& rep) {
  int d = rep.dim_algebra();
  int s = rep.space_dim();
  QMatrix basis(s * s, d);
  for (int k = 0; k < d; k++) {
    QMatrix v = rep.matrices[k].vectorize();
    for (int r = 0; r < s * s; r++) basis(r, k) = v(r, 0);
  }
  LinearSolver solver(basis);
  if (!solver.injective()) throw NotIndependent("representation matrices are dependent");
  StructureConstants sc;
  sc.dim = d;
  sc.terms.assign(d, std::vector<std::vector<std::pair<int, Rational>>>(d));
  for (int i = 0; i < d; i++)
    for (int j = i + 1; j < d; j++) {
      QMatrix com = bracket(rep.matrices[i], rep.matrices[j]);
      QMatrix x;
      try {
        x = solver.solve(com.vectorize());
      } catch (const std::domain_error&) {
        throw NotClosed("commutator [" + rep.labels[i] + "," + rep.labels[j] +
                        "] leaves the span");
      }
      for (int k = 0; k < d; k++)
        if (!x(k, 0).is_zero()) sc.terms[i][j].emplace_back(k, x(k, 0));
    }
  return sc;
}

/// Killing form K_IJ = c^L_IM c^M_JL = tr(ad_I ad_J).
inline QMatrix killing_form(const StructureConstants& sc) {
  std::vector<QMatrix> ads;
  ads.reserve(sc.dim);
  for (int i = 0; i < sc.dim; i++) ads.push_back(sc.ad(i));
  QMatrix k(sc.dim, sc.dim);
  for (int i = 0; i < sc.dim; i++)
    for (int j = i; j < sc.dim; j++) {
      Rational t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

/// Antisymmetric square: action on pairs e_a ^ e_b (a < b, pair-index
/// ordering). Dimension s(s-1)/2.
inline Representation wedge_rep(const Representation& rep) {
  int s = rep.space_dim();
  int n = s * (s - 1) / 2;
  auto idx = [&](int a, int b) { return pair_index(a + 1, b + 1) - 1; };  // a<b, 0-based in
  std::vector<QMatrix> out;
  out.reserve(rep.dim_algebra());
  for (const auto& m : rep.matrices) {
    QMatrix w(n, n);
    for (int a = 0; a < s; a++)
      for (int b = a + 1; b < s; b++) {
        int col = idx(a, b);
        // m e_a ^ e_b + e_a ^ m e_b
        for (int mu = 0; mu < s; mu++) {
          const Rational& ma = m(mu, a);
          if (!ma.is_zero() && mu != b) {
            if (mu < b) w(idx(mu, b), col) += ma;
            else w(idx(b, mu), col) -= ma;
          }
          const Rational& mb = m(mu, b);
          if (!mb.is_zero() && mu != a) {
            if (a < mu) w(idx(a, mu), col) += mb;
            else w(idx(mu, a), col) -= mb;
          }
        }
      }
    out.push_back(std::move(w));
  }
  Representation r;
  r.matrices = std::move(out);
  r.labels = rep.labels;
  return r;
}

/// Action on the k-th exterior power. The basis is indexed by k-subsets of
/// {0..s-1}; the order is fixed by the subsets argument (ascending elements
/// within a subset).
inline Representation exterior_power_rep(const Representation& rep,
                                         const std::vector<std::vector<int>>& subsets) {
  int s = rep.space_dim();
  int n = int(subsets.size());
  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < n; i++) pos[subsets[i]] = i;
  Representation out;
  out.labels = rep.labels;
  for (const auto& m : rep.matrices) {
    QMatrix w(n, n);
    for (int col = 0; col < n; col++) {
      const auto& sub = subsets[col];
      for (size_t t = 0; t < sub.size(); t++)
        for (int target = 0; target < s; target++) {
          const Rational& c = m(target, sub[t]);
          if (c.is_zero()) continue;
          // replace slot t by target, resort with sign
          std::vector<int> moved = sub;
          moved[t] = target;
          int sign = 1;
          bool zero = false;
          for (size_t i = 0; i < moved.size() && !zero; i++)
            for (size_t j = i + 1; j < moved.size(); j++) {
              if (moved[i] == moved[j]) {
                zero = true;
                break;
              }
              if (moved[i] > moved[j]) {
                std::swap(moved[i], moved[j]);
                sign = -sign;
              }
            }
          if (zero) continue;
          w(pos.at(moved), col) += Rational(sign) * c;
        }
    }
    out.matrices.push_back(std::move(w));
  }
  return out;
}

/// Tensor product action by the Leibniz rule on e_a (x) f_b, index a*s_b + b.
inline Representation tensor_rep(const Representation& a, const Representation& b) {
  if (a.dim_algebra() != b.dim_algebra())
    throw std::invalid_argument("tensor_rep: different abstract generator bases");
  std::vector<QMatrix> out;
  out.reserve(a.dim_algebra());
  QMatrix ia = QMatrix::identity(a.space_dim());
  QMatrix ib = QMatrix::identity(b.space_dim());
  for (int i = 0; i < a.dim_algebra(); i++)
    out.push_back(kron(a.matrices[i], ib) + kron(ia, b.matrices[i]));
  Representation r;
  r.matrices = std::move(out);
  r.labels = a.labels;
  return r;
}

/// Indices whose ad action is nonzero; the scaling/central generators drop out.
inline std::vector<int> semisimple_indices(const StructureConstants& sc) {
  std::vector<int> idx;
  for (int i = 0; i < sc.dim; i++) {
    bool nonzero = false;
    for (int j = 0; j < sc.dim && !nonzero; j++)
      if (!sc.bracket(i, j).empty()) nonzero = true;
    if (nonzero) idx.push_back(i);
  }
  return idx;
}

/// Casimir operator normalization * K^IJ rep(A_I) rep(A_J) over the
/// semisimple generator range. Throws SingularKilling when the restricted
/// Killing form is degenerate.
inline QMatrix casimir(const Representation& rep, const StructureConstants& sc,
                       const Rational& normalization) {
  auto idx = semisimple_indices(sc);
  int d = int(idx.size());
  if (d == 0) throw SingularKilling("no semisimple part");
  QMatrix k_full = killing_form(sc);
  QMatrix k(d, d);
  for (int i = 0; i < d; i++)
    for (int j = 0; j < d; j++) k(i, j) = k_full(idx[i], idx[j]);
  LinearSolver ks(k);
  if (ks.rank() < d) throw SingularKilling("Killing form degenerate on semisimple range");
  QMatrix kinv = ks.solve(QMatrix::identity(d));
  int s = rep.space_dim();
  QMatrix c(s, s);
  for (int i = 0; i < d; i++) {
    QMatrix t(s, s);
    for (int j = 0; j < d; j++)
      if (!kinv(i, j).is_zero()) t = t + kinv(i, j) * rep.matrices[idx[j]];
    c = c + rep.matrices[idx[i]] * t;
  }
  return normalization * c;
}

// --- exact eigen-decomposition helpers (rational spectra) -----------------

namespace polydetail {
using Poly = std::vector<Rational>;  // coefficients, low degree first, monic-ish

inline Poly normalize(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (!p.empty()) {
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
  }
  return p;
}
inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  return r;
}
inline Poly mod(Poly a, const Poly& b) {
  a = normalize(std::move(a));
  Poly bb = b;
  while (a.size() >= bb.size() && !a.empty()) {
    Rational f = a.back() / bb.back();
    size_t off = a.size() - bb.size();
    for (size_t i = 0; i < bb.size(); i++) a[off + i] -= f * bb[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}
inline Poly gcd(Poly a, Poly b) {
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = normalize(std::move(r));
  }
  return normalize(std::move(a));
}
inline Poly lcm(const Poly& a, const Poly& b) {
  if (a.empty()) return normalize(b);
  if (b.empty()) return normalize(a);
  Poly g = gcd(a, b);
  // a*b / g by synthetic division
  Poly prod = mul(a, b);
  // divide prod by g exactly
  Poly q(prod.size() - g.size() + 1);
  Poly rem = prod;
  for (int i = int(q.size()) - 1; i >= 0; i--) {
    Rational f = rem[i + g.size() - 1] / g.back();
    q[i] = f;
    for (size_t k = 0; k < g.size(); k++) rem[i + k] -= f * g[k];
  }
  return normalize(std::move(q));
}
inline Rational eval(const Poly& p, const Rational& x) {
  Rational r;
  for (int i = int(p.size()) - 1; i >= 0; i--) r = r * x + p[i];
  return r;
}
}  // namespace polydetail

/// Minimal polynomial of a square matrix via Krylov chains from standard
/// basis vectors (lcm over start vectors).
inline polydetail::Poly minimal_polynomial(const QMatrix& m) {
  int n = m.rows();
  polydetail::Poly minpoly;
  for (int start = 0; start < n; start++) {
    // Krylov chain from e_start
    std::vector<QMatrix> chain;
    QMatrix v(n, 1);
    v(start, 0) = Rational(1);
    chain.push_back(v);
    polydetail::Poly local;
    for (int deg = 1; deg <= n; deg++) {
      QMatrix w = m * chain.back();
      // try to express w in the chain
      QMatrix a(n, deg);
      for (int k = 0; k < deg; k++)
        for (int r = 0; r < n; r++) a(r, k) = chain[k](r, 0);
      LinearSolver ls(a);
      bool dependent = true;
      QMatrix x;
      try {
        x = ls.solve(w);
      } catch (const std::domain_error&) {
        dependent = false;
      }
      if (dependent) {
        local.assign(deg + 1, Rational(0));
        for (int k = 0; k < deg; k++) local[k] = -x(k, 0);
        local[deg] = Rational(1);
        break;
      }
      chain.push_back(w);
    }
    minpoly = polydetail::lcm(minpoly, local);
    if (int(minpoly.size()) == n + 1) break;  // degree n reached, cannot grow
  }
  return minpoly;
}

/// Rational roots of a rational-coefficient polynomial, found by clearing
/// denominators and scanning divisors of the end coefficients (trial
/// division; the spectra here are small rationals).
inline std::vector<Rational> rational_roots(const polydetail::Poly& p) {
  using polydetail::eval;
  if (p.empty()) return {};
  // clear denominators
  mpz_class scale = 1;
  for (const auto& c : p) {
    mpz_class d = c.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    scale = scale / g * d;
  }
  std::vector<mpz_class> ic;
  for (const auto& c : p) ic.push_back(c.num() * (scale / c.den()));
  size_t lo = 0;
  while (lo < ic.size() && ic[lo] == 0) lo++;
  std::vector<Rational> roots;
  if (lo > 0) roots.push_back(Rational(0));
  if (lo >= ic.size()) return roots;
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> out;
    v = abs(v);
    for (mpz_class d = 1; d * d <= v; d++) {
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
      if (d > 2'000'000) break;  // spectra are tiny; beyond this give up
    }
    return out;
  };
  for (const auto& pn : divisors(ic[lo]))
    for (const auto& qd : divisors(ic.back())) {
      for (int sign : {1, -1}) {
        Rational cand(mpq_class(sign * pn, qd));
        if (eval(p, cand).is_zero()) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct EigenComponent {
  Rational eigenvalue;
  std::vector<QMatrix> basis;  // column vectors
};

/// Exact eigenspace decomposition for operators with rational spectra.
/// Returns components sorted by eigenvalue; the dimensions sum to the full
/// space dimension iff the operator is diagonalizable over Q.
inline std::vector<EigenComponent> eigen_split(const QMatrix& op) {
  auto mp = minimal_polynomial(op);
  auto roots = rational_roots(mp);
  std::vector<EigenComponent> comps;
  for (const auto& lambda : roots) {
    QMatrix shifted = op - lambda * QMatrix::identity(op.rows());
    auto ns = nullspace(shifted);
    if (!ns.empty()) comps.push_back({lambda, std::move(ns)});
  }
  return comps;
}

/// Splits a representation whose matrices are all block-diagonal with two
/// equal blocks (top-left, bottom-right). Throws NotBlockDiagonal otherwise.
inline std::pair<Representation, Representation> split_weyl(const Representation& rep) {
  int s = rep.space_dim();
  if (s % 2 != 0) throw NotBlockDiagonal("odd dimension");
  int h = s / 2;
  Representation plus, minus;
  plus.labels = minus.labels = rep.labels;
  for (const auto& m : rep.matrices) {
    for (int i = 0; i < h; i++)
      for (int j = 0; j < h; j++)
        if (!m(i, h + j).is_zero() || !m(h + i, j).is_zero())
          throw NotBlockDiagonal("off-diagonal block not zero");
    QMatrix a(h, h), b(h, h);
    for (int i = 0; i < h; i++)
      for (int j = 0; j < h; j++) {
        a(i, j) = m(i, j);
        b(i, j) = m(h + i, h + j);
      }
    plus.matrices.push_back(std::move(a));
    minus.matrices.push_back(std::move(b));
  }
  return {std::move(plus), std::move(minus)};
}

/// Restriction of rep to the span of the given eigenbasis of a commuting
/// operator. Throws NotInvariant when the subspace is not rep-invariant.
inline Representation extract_component(const Representation& rep,
                                        const std::vector<QMatrix>& subspace_basis) {
  int s = rep.space_dim();
  int k = int(subspace_basis.size());
  QMatrix v(s, k);
  for (int c = 0; c < k; c++)
    for (int r = 0; r < s; r++) v(r, c) = subspace_basis[c](r, 0);
  LinearSolver solver(v);
  if (!solver.injective()) throw std::invalid_argument("extract_component: basis dependent");
  Representation out;
  out.labels = rep.labels;
  for (const auto& m : rep.matrices) {
    QMatrix rhs = m * v;
    QMatrix t;
    try {
      t = solver.solve(rhs);
    } catch (const std::domain_error&) {
      throw NotInvariant("subspace is not representation-invariant");
    }
    out.matrices.push_back(std::move(t));
  }
  return out;
}

inline Representation extract_component(const Representation& rep, const QMatrix& cas,
                                        const Rational& eigenvalue) {
  QMatrix shifted = cas - eigenvalue * QMatrix::identity(cas.rows());
  auto basis = nullspace(shifted);
  if (basis.empty()) throw NotInvariant("eigenvalue has trivial eigenspace");
  return extract_component(rep, basis);
}

/// Basis of intertwiners {M : M a_I = b_I M for all I}.
inline std::vector<QMatrix> intertwiners(const Representation& a, const Representation& b) {
  if (a.dim_algebra() != b.dim_algebra())
    throw std::invalid_argument("intertwiners: different generator bases");
  int sa = a.space_dim(), sb = b.space_dim();
  // unknowns m(i,j), i in [sb], j in [sa], column index i*sa + j
  QMatrix sys(a.dim_algebra() * sa * sb, sa * sb);
  int row = 0;
  for (int g = 0; g < a.dim_algebra(); g++) {
    const QMatrix& am = a.matrices[g];
    const QMatrix& bm = b.matrices[g];
    for (int i = 0; i < sb; i++)
      for (int j = 0; j < sa; j++) {
        // (M a - b M)(i,j) = sum_k m(i,k) a(k,j) - b(i,k) m(k,j)
        for (int k = 0; k < sa; k++)
          if (!am(k, j).is_zero()) sys(row, i * sa + k) += am(k, j);
        for (int k = 0; k < sb; k++)
          if (!bm(i, k).is_zero()) sys(row, k * sa + j) -= bm(i, k);
        row++;
      }
  }
  auto ns = nullspace(sys);
  std::vector<QMatrix> out;
  for (const auto& v : ns) {
    QMatrix m(sb, sa);
    for (int i = 0; i < sb; i++)
      for (int j = 0; j < sa; j++) m(i, j) = v(i * sa + j, 0);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace contactify
