#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactify/magical.hpp"
#include "contactify/matrix.hpp"
#include "contactify/representation.hpp"
#include "contactify/sparse_solver.hpp"

namespace contactify {

struct NotSurjective : std::runtime_error {
  NotSurjective(const std::string& what) : std::runtime_error(what) {}
};
struct Truncated : std::runtime_error {
  Truncated(const std::string& what) : std::runtime_error(what) {}
};

/// Structure constants with an integer grade per basis vector.
/// Invariant: [g_i, g_j] lies in g_{grade(i)+grade(j)}.
struct GradedLieAlgebra {
  std::vector<int> grades;
  StructureConstants sc;
  std::vector<std::string> provenance;

  int dim() const { return int(grades.size()); }

  std::map<int, int> grade_dims() const {
    std::map<int, int> d;
    for (int g : grades) d[g]++;
    return d;
  }

  bool grading_respected() const {
    for (int i = 0; i < dim(); i++)
      for (int j = i + 1; j < dim(); j++)
        for (auto& [k, v] : sc.upper(i, j))
          if (grades[k] != grades[i] + grades[j]) return false;
    return true;
  }
};

/// The 2-step nilpotent algebra n_- = n_-2 (+) n_-1 defined by a full omega:
/// [X, Y] = omega(X, Y) on n_-1, all other brackets zero. Basis order: the r
/// grade -2 vectors e_i, then the s grade -1 vectors f_mu.
inline GradedLieAlgebra build_nminus(const OmegaMap& omega) {
  if (!omega.full()) throw NotSurjective("omega is not surjective onto R^r");
  int r = omega.r, s = omega.s;
  GradedLieAlgebra n;
  n.grades.assign(r, -2);
  n.grades.insert(n.grades.end(), s, -1);
  n.sc.dim = r + s;
  n.sc.terms.assign(n.sc.dim, std::vector<std::vector<std::pair<int, Rational>>>(n.sc.dim));
  for (int mu = 0; mu < s; mu++)
    for (int nu = mu + 1; nu < s; nu++)
      for (int i = 0; i < r; i++) {
        const Rational& c = omega.component[i](mu, nu);
        if (!c.is_zero()) n.sc.terms[r + mu][r + nu].emplace_back(i, c);
      }
  for (int i = 0; i < r; i++) n.provenance.push_back("n_-2 basis e_" + std::to_string(i + 1));
  for (int mu = 0; mu < s; mu++)
    n.provenance.push_back("n_-1 basis f_" + std::to_string(mu + 1));
  return n;
}

/// Result of the prolongation: the assembled graded algebra (grades -2..top),
/// the dimension per grade, and whether the prolongation terminated (some
/// n_k = 0 was reached within max_k).
struct Prolongation {
  GradedLieAlgebra algebra;
  std::vector<int> grade_dims;  // for grades -2, -1, 0, ..., top
  int top_grade = 0;
  bool complete = false;

  int total_dim() const { return algebra.dim(); }
};

namespace tanakadetail {

/// Per-grade basis of prolonged elements, stored by their action on n_-:
/// act1[a] is d_{k-1} x s (column mu = coords of [a, f_mu] in grade k-1),
/// act2[a] is d_{k-2} x r (column i = coords of [a, e_i] in grade k-2).
struct GradeBasis {
  std::vector<QMatrix> act1;
  std::vector<QMatrix> act2;
  int dim() const { return int(act1.size()); }
};

}  // namespace tanakadetail

/// Tanaka prolongation of a 2-step graded nilpotent algebra: computes n_0
/// (strata-preserving derivations) and n_k for k >= 1 from the constraint
/// A[X,Y] = [AX,Y] + [X,AY], assembling all brackets with the inductive rule
/// [A,B]X = [A,BX] - [B,AX]. Stops early at the first n_k = 0.
inline Prolongation prolong(const GradedLieAlgebra& nminus, int max_k = 4) {
  using tanakadetail::GradeBasis;
  // -- unpack n_-
  int r = 0, s = 0;
  for (int g : nminus.grades) {
    if (g == -2) r++;
    else if (g == -1) s++;
    else throw std::invalid_argument("prolong: input must be 2-step graded (grades -1, -2)");
  }
  for (int i = 0; i < r; i++)
    if (nminus.grades[i] != -2)
      throw std::invalid_argument("prolong: basis must be ordered grade -2, then grade -1");
  // omega from the structure constants
  std::vector<QMatrix> omega(r, QMatrix(s, s));
  for (int mu = 0; mu < s; mu++)
    for (int nu = mu + 1; nu < s; nu++)
      for (auto& [k, v] : nminus.sc.upper(r + mu, r + nu)) {
        if (k >= r) throw std::invalid_argument("prolong: [n_-1, n_-1] must land in n_-2");
        omega[k](mu, nu) = v;
        omega[k](nu, mu) = -v;
      }

  std::map<int, GradeBasis> levels;  // grade k >= 0 -> basis
  auto dim_of = [&](int g) -> int {
    if (g == -1) return s;
    if (g == -2) return r;
    if (g < -2) return 0;
    auto it = levels.find(g);
    return it == levels.end() ? 0 : it->second.dim();
  };
  // action of a basis element of grade g on f_mu / e_i, as coordinate columns
  auto act_on_f = [&](int g, int a, int mu) -> QMatrix {
    if (g == -2) return QMatrix(0, 1);
    if (g == -1) {  // [f_a, f_mu] = omega coords in e
      QMatrix v(r, 1);
      for (int i = 0; i < r; i++) v(i, 0) = omega[i](a, mu);
      return v;
    }
    const QMatrix& m = levels.at(g).act1[a];
    QMatrix v(m.rows(), 1);
    for (int i = 0; i < m.rows(); i++) v(i, 0) = m(i, mu);
    return v;
  };
  auto act_on_e = [&](int g, int a, int i) -> QMatrix {
    if (g < 0) return QMatrix(std::max(dim_of(g - 2), 0), 1);  // zero
    const QMatrix& m = levels.at(g).act2[a];
    QMatrix v(m.rows(), 1);
    for (int k = 0; k < m.rows(); k++) v(k, 0) = m(k, i);
    return v;
  };

  // -- n_0: strata-preserving derivations (P on n_-1, Q on n_-2)
  {
    SparseSystem sys(s * s + r * r);
    auto p_idx = [&](int a, int b) { return a * s + b; };
    auto q_idx = [&](int i, int j) { return s * s + i * r + j; };
    for (int i = 0; i < r; i++)
      for (int mu = 0; mu < s; mu++)
        for (int nu = mu + 1; nu < s; nu++) {
          SparseSystem::Row row;
          for (int j = 0; j < r; j++)
            if (!omega[j](mu, nu).is_zero()) row.emplace_back(q_idx(i, j), omega[j](mu, nu));
          for (int a = 0; a < s; a++) {
            if (!omega[i](a, nu).is_zero()) row.emplace_back(p_idx(a, mu), -omega[i](a, nu));
            if (!omega[i](mu, a).is_zero()) row.emplace_back(p_idx(a, nu), -omega[i](mu, a));
          }
          sys.add_row(std::move(row));
        }
    GradeBasis g0;
    for (const auto& v : sys.kernel()) {
      QMatrix p(s, s), q(r, r);
      for (int a = 0; a < s; a++)
        for (int b = 0; b < s; b++) p(a, b) = v(p_idx(a, b), 0);
      for (int i = 0; i < r; i++)
        for (int j = 0; j < r; j++) q(i, j) = v(q_idx(i, j), 0);
      g0.act1.push_back(std::move(p));
      g0.act2.push_back(std::move(q));
    }
    levels[0] = std::move(g0);
  }

  // -- n_k for k >= 1
  bool complete = false;
  int top = 0;
  for (int k = 1; k <= max_k; k++) {
    int dk1 = dim_of(k - 1), dk2 = dim_of(k - 2);
    int dk3 = dim_of(k - 3), dk4 = dim_of(k - 4);
    int n_alpha = dk1 * s, n_beta = dk2 * r;
    SparseSystem sys(n_alpha + n_beta);
    auto a_idx = [&](int a, int mu) { return a * s + mu; };
    auto b_idx = [&](int b, int i) { return n_alpha + b * r + i; };
    // (a) pairs in n_-1: A omega(f_mu, f_nu) = [alpha(f_mu), f_nu] - [alpha(f_nu), f_mu]
    for (int mu = 0; mu < s; mu++)
      for (int nu = mu + 1; nu < s; nu++)
        for (int c = 0; c < dk2; c++) {
          SparseSystem::Row row;
          for (int i = 0; i < r; i++)
            if (!omega[i](mu, nu).is_zero()) row.emplace_back(b_idx(c, i), omega[i](mu, nu));
          for (int a = 0; a < dk1; a++) {
            QMatrix v1 = act_on_f(k - 1, a, nu);
            if (!v1(c, 0).is_zero()) row.emplace_back(a_idx(a, mu), -v1(c, 0));
            QMatrix v2 = act_on_f(k - 1, a, mu);
            if (!v2(c, 0).is_zero()) row.emplace_back(a_idx(a, nu), v2(c, 0));
          }
          sys.add_row(std::move(row));
        }
    // (b) mixed pairs: 0 = [alpha(f_mu), e_i] + [f_mu, beta(e_i)]
    if (dk3 > 0)
      for (int mu = 0; mu < s; mu++)
        for (int i = 0; i < r; i++)
          for (int c = 0; c < dk3; c++) {
            SparseSystem::Row row;
            for (int a = 0; a < dk1; a++) {
              QMatrix v = act_on_e(k - 1, a, i);
              if (v.rows() > c && !v(c, 0).is_zero()) row.emplace_back(a_idx(a, mu), v(c, 0));
            }
            for (int b = 0; b < dk2; b++) {
              QMatrix v = act_on_f(k - 2, b, mu);
              if (v.rows() > c && !v(c, 0).is_zero()) row.emplace_back(b_idx(b, i), -v(c, 0));
            }
            sys.add_row(std::move(row));
          }
    // (c) pairs in n_-2: 0 = [beta(e_i), e_j] - [beta(e_j), e_i]
    if (dk4 > 0)
      for (int i = 0; i < r; i++)
        for (int j = i + 1; j < r; j++)
          for (int c = 0; c < dk4; c++) {
            SparseSystem::Row row;
            for (int b = 0; b < dk2; b++) {
              QMatrix v1 = act_on_e(k - 2, b, j);
              if (v1.rows() > c && !v1(c, 0).is_zero()) row.emplace_back(b_idx(b, i), v1(c, 0));
              QMatrix v2 = act_on_e(k - 2, b, i);
              if (v2.rows() > c && !v2(c, 0).is_zero()) row.emplace_back(b_idx(b, j), -v2(c, 0));
            }
            sys.add_row(std::move(row));
          }
    GradeBasis gk;
    for (const auto& v : sys.kernel()) {
      QMatrix alpha(dk1, s), beta(dk2, r);
      for (int a = 0; a < dk1; a++)
        for (int mu = 0; mu < s; mu++) alpha(a, mu) = v(a_idx(a, mu), 0);
      for (int b = 0; b < dk2; b++)
        for (int i = 0; i < r; i++) beta(b, i) = v(b_idx(b, i), 0);
      gk.act1.push_back(std::move(alpha));
      gk.act2.push_back(std::move(beta));
    }
    int dk = gk.dim();
    if (dk == 0) {
      complete = true;
      break;
    }
    levels[k] = std::move(gk);
    top = k;
  }
  if (!complete && max_k >= 1)
    throw Truncated("prolongation did not terminate within max_k = " + std::to_string(max_k));

  // -- assemble global basis and brackets
  std::vector<int> grade_list;  // grades in basis order
  std::map<int, int> offset;
  {
    int off = 0;
    for (int g = -2; g <= top; g++) {
      offset[g] = off;
      off += dim_of(g);
      for (int a = 0; a < dim_of(g); a++) grade_list.push_back(g);
    }
  }
  int total = int(grade_list.size());

  // expansion solvers per grade: columns = vectorized (act1, act2)
  std::map<int, LinearSolver> expanders;
  for (int g = 0; g <= top; g++) {
    int d = dim_of(g);
    int rows = dim_of(g - 1) * s + dim_of(g - 2) * r;
    QMatrix basis(rows, d);
    for (int a = 0; a < d; a++) {
      const auto& m1 = levels[g].act1[a];
      const auto& m2 = levels[g].act2[a];
      int rr = 0;
      for (int i = 0; i < m1.rows(); i++)
        for (int j = 0; j < m1.cols(); j++) basis(rr++, a) = m1(i, j);
      for (int i = 0; i < m2.rows(); i++)
        for (int j = 0; j < m2.cols(); j++) basis(rr++, a) = m2(i, j);
    }
    expanders.emplace(g, LinearSolver(basis));
    if (d > 0 && !expanders.at(g).injective())
      throw std::logic_error("prolong: action maps of a grade are dependent");
  }

  // bracket tables for nonnegative grade pairs, filled by ascending total
  // grade with [A,B]X = [A,BX] - [B,AX]
  std::map<std::pair<int, int>, std::vector<std::vector<QMatrix>>> tables;
  // bracket of (g1, a) with (g2, b) as coordinate vector in grade g1+g2
  std::function<QMatrix(int, int, int, int)> bracket_coords =
      [&](int g1, int a, int g2, int b) -> QMatrix {
    int gt = g1 + g2;
    if (gt < -2 || dim_of(gt) == 0) return QMatrix(std::max(dim_of(gt), 0), 1);
    if (g1 < 0 && g2 < 0) {
      // only [n_-1, n_-1] is nonzero
      QMatrix v(dim_of(gt), 1);
      if (g1 == -1 && g2 == -1)
        for (int i = 0; i < r; i++) v(i, 0) = omega[i](a, b);
      return v;
    }
    if (g1 < 0) {
      QMatrix v = bracket_coords(g2, b, g1, a);
      return -v;
    }
    if (g2 == -1) return act_on_f(g1, a, b);
    if (g2 == -2) return act_on_e(g1, a, b);
    if (g1 > g2) {
      QMatrix v = bracket_coords(g2, b, g1, a);
      return -v;
    }
    return tables.at({g1, g2})[a][b];
  };

  for (int gt = 0; gt <= 2 * top; gt++)
    for (int g1 = 0; g1 <= top; g1++) {
      int g2 = gt - g1;
      if (g2 < g1 || g2 > top) continue;
      int d1 = dim_of(g1), d2 = dim_of(g2);
      std::vector<std::vector<QMatrix>> table(d1, std::vector<QMatrix>(d2));
      for (int a = 0; a < d1; a++)
        for (int b = 0; b < d2; b++) {
          // action of [A,B] on f_mu and e_i
          int dt1 = dim_of(gt - 1), dt2 = dim_of(gt - 2);
          QMatrix r1(dt1, s), r2(dt2, r);
          for (int mu = 0; mu < s; mu++) {
            // [A,[B,f_mu]] - [B,[A,f_mu]]
            QMatrix acc(dt1, 1);
            QMatrix bf = act_on_f(g2, b, mu);  // coords in g2-1
            for (int c = 0; c < bf.rows(); c++)
              if (!bf(c, 0).is_zero()) {
                QMatrix t = bracket_coords(g1, a, g2 - 1, c);
                acc = acc + bf(c, 0) * t;
              }
            QMatrix af = act_on_f(g1, a, mu);
            for (int c = 0; c < af.rows(); c++)
              if (!af(c, 0).is_zero()) {
                QMatrix t = bracket_coords(g2, b, g1 - 1, c);
                acc = acc - af(c, 0) * t;
              }
            for (int c = 0; c < dt1; c++) r1(c, mu) = acc(c, 0);
          }
          for (int i = 0; i < r; i++) {
            QMatrix acc(dt2, 1);
            QMatrix be = act_on_e(g2, b, i);
            for (int c = 0; c < be.rows(); c++)
              if (!be(c, 0).is_zero()) {
                QMatrix t = bracket_coords(g1, a, g2 - 2, c);
                acc = acc + be(c, 0) * t;
              }
            QMatrix ae = act_on_e(g1, a, i);
            for (int c = 0; c < ae.rows(); c++)
              if (!ae(c, 0).is_zero()) {
                QMatrix t = bracket_coords(g2, b, g1 - 2, c);
                acc = acc - ae(c, 0) * t;
              }
            for (int c = 0; c < dt2; c++) r2(c, i) = acc(c, 0);
          }
          if (gt > top) {
            if (!r1.is_zero() || !r2.is_zero())
              throw std::logic_error("prolong: bracket escapes the computed grades");
            table[a][b] = QMatrix(0, 1);
            continue;
          }
          // expand (r1, r2) in the grade gt basis
          int rows = dt1 * s + dt2 * r;
          QMatrix vec(rows, 1);
          int rr = 0;
          for (int i = 0; i < r1.rows(); i++)
            for (int j = 0; j < r1.cols(); j++) vec(rr++, 0) = r1(i, j);
          for (int i = 0; i < r2.rows(); i++)
            for (int j = 0; j < r2.cols(); j++) vec(rr++, 0) = r2(i, j);
          table[a][b] = expanders.at(gt).solve(vec);
        }
      tables[{g1, g2}] = std::move(table);
    }

  // -- global structure constants
  GradedLieAlgebra g;
  g.grades = grade_list;
  g.sc.dim = total;
  g.sc.terms.assign(total, std::vector<std::vector<std::pair<int, Rational>>>(total));
  auto put = [&](int gi, int a, int gj, int b, const QMatrix& coords, int target_grade) {
    int bi = offset[gi] + a, bj = offset[gj] + b;
    if (coords.rows() == 0) return;
    int toff = offset.count(target_grade) ? offset[target_grade] : -1;
    if (toff < 0) return;
    std::vector<std::pair<int, Rational>> terms;
    for (int k = 0; k < coords.rows(); k++)
      if (!coords(k, 0).is_zero()) terms.emplace_back(toff + k, coords(k, 0));
    if (bi < bj) {
      g.sc.terms[bi][bj] = std::move(terms);
    } else if (bj < bi) {
      for (auto& [k, v] : terms) v = -v;
      g.sc.terms[bj][bi] = std::move(terms);
    }
  };
  for (int gi = -2; gi <= top; gi++)
    for (int gj = gi; gj <= top; gj++) {
      int gt = gi + gj;
      if (gt < -2) continue;
      for (int a = 0; a < dim_of(gi); a++) {
        int bstart = (gi == gj) ? a + 1 : 0;
        for (int b = bstart; b < dim_of(gj); b++) {
          if (dim_of(gt) == 0) continue;
          QMatrix coords = bracket_coords(gi, a, gj, b);
          put(gi, a, gj, b, coords, gt);
        }
      }
    }

  for (int i = 0; i < r; i++) g.provenance.push_back("n_-2 basis e_" + std::to_string(i + 1));
  for (int mu = 0; mu < s; mu++)
    g.provenance.push_back("n_-1 basis f_" + std::to_string(mu + 1));
  for (int gr = 0; gr <= top; gr++)
    for (int a = 0; a < dim_of(gr); a++)
      g.provenance.push_back("n_" + std::to_string(gr) + " element #" + std::to_string(a + 1));

  Prolongation out;
  out.algebra = std::move(g);
  out.top_grade = top;
  out.complete = complete;
  for (int gr = -2; gr <= top; gr++) out.grade_dims.push_back(dim_of(gr));
  return out;
}

/// Report whether sigma = tau (+) rho embeds n_00 into the computed n_0.
struct EmbedReport {
  bool all_in_n0 = true;
  bool injective = true;
  int image_dim = 0;
  int n0_dim = 0;
  bool proper() const { return image_dim < n0_dim; }
};

inline EmbedReport embed_check(const Representation& rho, const Representation& tau,
                               const Prolongation& prolonged) {
  int s = rho.space_dim(), r = tau.space_dim();
  // collect the n_0 basis action pairs from the assembled algebra
  const GradedLieAlgebra& g = prolonged.algebra;
  std::vector<int> n0_idx, f_idx, e_idx;
  for (int i = 0; i < g.dim(); i++) {
    if (g.grades[i] == 0) n0_idx.push_back(i);
    if (g.grades[i] == -1) f_idx.push_back(i);
    if (g.grades[i] == -2) e_idx.push_back(i);
  }
  EmbedReport rep;
  rep.n0_dim = int(n0_idx.size());
  QMatrix basis(s * s + r * r, rep.n0_dim);
  for (int c = 0; c < rep.n0_dim; c++) {
    // action on f: [D, f_mu] = sum P^a_mu f_a; on e: Q
    for (int mu = 0; mu < s; mu++)
      for (auto& [k, v] : g.sc.bracket(n0_idx[c], f_idx[mu])) {
        int a = k - int(e_idx.size());  // f-range starts after e-range
        basis(a * s + mu, c) = v;
      }
    for (int i = 0; i < r; i++)
      for (auto& [k, v] : g.sc.bracket(n0_idx[c], e_idx[i])) basis(s * s + k * r + i, c) = v;
  }
  LinearSolver solver(basis);
  QMatrix images(s * s + r * r, rho.dim_algebra());
  for (int gidx = 0; gidx < rho.dim_algebra(); gidx++) {
    const QMatrix& p = rho.matrices[gidx];
    const QMatrix& q = tau.matrices[gidx];
    for (int a = 0; a < s; a++)
      for (int mu = 0; mu < s; mu++) images(a * s + mu, gidx) = p(a, mu);
    for (int i = 0; i < r; i++)
      for (int j = 0; j < r; j++) images(s * s + i * r + j, gidx) = q(i, j);
  }
  try {
    solver.solve(images);
  } catch (const std::domain_error&) {
    rep.all_in_n0 = false;
  }
  rep.image_dim = rank(images);
  rep.injective = rep.image_dim == rho.dim_algebra();
  return rep;
}

/// Killing signature, semisimplicity (Killing nondegeneracy) and grading
/// symmetry (dim n_k = dim n_-k) of a graded algebra.
struct ClassifyReport {
  int positives = 0, negatives = 0, zeros = 0;
  bool semisimple = false;
  bool grading_symmetric = false;
};

inline ClassifyReport classify(const GradedLieAlgebra& g) {
  QMatrix k = killing_form(g.sc);
  auto [pos, neg, zero] = signature(k);
  ClassifyReport rep;
  rep.positives = pos;
  rep.negatives = neg;
  rep.zeros = zero;
  rep.semisimple = zero == 0;
  auto dims = g.grade_dims();
  rep.grading_symmetric = true;
  for (auto& [gr, d] : dims) {
    int mirror = dims.count(-gr) ? dims.at(-gr) : 0;
    if (d != mirror) rep.grading_symmetric = false;
  }
  return rep;
}

}  // namespace contactify
