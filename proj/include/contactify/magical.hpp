#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "contactify/matrix.hpp"
#include "contactify/representation.hpp"
#include "contactify/sparse_solver.hpp"

namespace contactify {

struct NoInvariantSubspace : std::runtime_error {
  NoInvariantSubspace(const std::string& what) : std::runtime_error(what) {}
};

/// The tensor omega^i_{mu nu}: a linear map Lambda^2 S -> R, stored as r
/// antisymmetric s x s matrices. Unknown packing and canonical scaling use
/// lexicographic (i, mu, nu) order with mu < nu.
struct OmegaMap {
  int r = 0, s = 0;
  std::vector<QMatrix> component;  // r matrices, each s x s, antisymmetric

  static int pair_count(int s) { return s * (s - 1) / 2; }

  /// Position of (mu < nu) in lexicographic pair order, 0-based.
  static int pair_pos(int mu, int nu, int s) {
    // pairs (0,1),(0,2),...,(0,s-1),(1,2),...
    return mu * s - mu * (mu + 1) / 2 + (nu - mu - 1);
  }

  int unknown_index(int i, int mu, int nu) const {
    return i * pair_count(s) + pair_pos(mu, nu, s);
  }

  static OmegaMap from_vector(int r, int s, const QMatrix& v) {
    OmegaMap w;
    w.r = r;
    w.s = s;
    w.component.assign(r, QMatrix(s, s));
    int p = pair_count(s);
    for (int i = 0; i < r; i++)
      for (int mu = 0; mu < s; mu++)
        for (int nu = mu + 1; nu < s; nu++) {
          const Rational& val = v(i * p + pair_pos(mu, nu, s), 0);
          w.component[i](mu, nu) = val;
          w.component[i](nu, mu) = -val;
        }
    return w;
  }

  QMatrix to_vector() const {
    int p = pair_count(s);
    QMatrix v(r * p, 1);
    for (int i = 0; i < r; i++)
      for (int mu = 0; mu < s; mu++)
        for (int nu = mu + 1; nu < s; nu++)
          v(i * p + pair_pos(mu, nu, s), 0) = component[i](mu, nu);
    return v;
  }

  OmegaMap scaled(const Rational& c) const {
    OmegaMap w = *this;
    for (auto& m : w.component) m = c * m;
    return w;
  }

  bool is_zero() const {
    for (const auto& m : component)
      if (!m.is_zero()) return false;
    return true;
  }

  /// Surjectivity onto R^r: the r x (s(s-1)/2) coefficient matrix has rank r.
  bool full() const {
    int p = pair_count(s);
    QMatrix m(r, p);
    for (int i = 0; i < r; i++)
      for (int mu = 0; mu < s; mu++)
        for (int nu = mu + 1; nu < s; nu++) m(i, pair_pos(mu, nu, s)) = component[i](mu, nu);
    return rank(m) == r;
  }

  /// Exact check of the defining equation for one generator pair (rho, tau):
  /// rho^T W_i + W_i rho = sum_j tau^i_j W_j.
  bool satisfies(const QMatrix& rho, const QMatrix& tau) const {
    QMatrix rho_t = rho.transpose();
    for (int i = 0; i < r; i++) {
      QMatrix lhs = rho_t * component[i] + component[i] * rho;
      QMatrix rhs(s, s);
      for (int j = 0; j < r; j++)
        if (!tau(i, j).is_zero()) rhs = rhs + tau(i, j) * component[j];
      if (lhs != rhs) return false;
    }
    return true;
  }
};

/// Assembles the linear system of the equivariance equation
///   rho(A)^a_mu w^i_{a nu} + rho(A)^a_nu w^i_{mu a} = tau(A)^i_j w^j_{mu nu}
/// over unknowns w^i_{mu nu} (mu < nu) for every generator A.
inline SparseSystem omega_system(const Representation& rho, const Representation& tau) {
  if (rho.dim_algebra() != tau.dim_algebra())
    throw std::invalid_argument("omega_system: different generator bases");
  int s = rho.space_dim();
  int r = tau.space_dim();
  int p = OmegaMap::pair_count(s);
  SparseSystem sys(r * p);
  auto signed_pos = [&](int a, int b, int& pos, int& sign) {
    // w_{ab} with a != b resolved to packed (min,max) with sign
    if (a < b) {
      pos = OmegaMap::pair_pos(a, b, s);
      sign = 1;
    } else {
      pos = OmegaMap::pair_pos(b, a, s);
      sign = -1;
    }
  };
  for (int g = 0; g < rho.dim_algebra(); g++) {
    const QMatrix& rm = rho.matrices[g];
    const QMatrix& tm = tau.matrices[g];
    for (int i = 0; i < r; i++)
      for (int mu = 0; mu < s; mu++)
        for (int nu = mu + 1; nu < s; nu++) {
          SparseSystem::Row row;
          for (int a = 0; a < s; a++) {
            const Rational& c1 = rm(a, mu);  // rho^a_mu w^i_{a nu}
            if (!c1.is_zero() && a != nu) {
              int pos, sgn;
              signed_pos(a, nu, pos, sgn);
              row.emplace_back(i * p + pos, Rational(sgn) * c1);
            }
            const Rational& c2 = rm(a, nu);  // rho^a_nu w^i_{mu a}
            if (!c2.is_zero() && a != mu) {
              int pos, sgn;
              signed_pos(mu, a, pos, sgn);
              row.emplace_back(i * p + pos, Rational(sgn) * c2);
            }
          }
          for (int j = 0; j < r; j++) {
            const Rational& t = tm(i, j);
            if (!t.is_zero()) row.emplace_back(j * p + OmegaMap::pair_pos(mu, nu, s), -t);
          }
          sys.add_row(std::move(row));
        }
  }
  return sys;
}

/// Basis of the solution space of the equivariance equation; each basis
/// element is antisymmetric by construction. Empty list = only the trivial
/// solution. Solutions are re-verified exactly post-solve.
inline std::vector<OmegaMap> solve_omega(const Representation& rho, const Representation& tau) {
  int s = rho.space_dim();
  int r = tau.space_dim();
  SparseSystem sys = omega_system(rho, tau);
  auto kernel = sys.kernel();
  std::vector<OmegaMap> out;
  for (const auto& v : kernel) {
    OmegaMap w = OmegaMap::from_vector(r, s, v);
    for (int g = 0; g < rho.dim_algebra(); g++)
      if (!w.satisfies(rho.matrices[g], tau.matrices[g]))
        throw std::logic_error("solve_omega: post-solve verification failed");
    out.push_back(std::move(w));
  }
  return out;
}

/// Joint solve for (omega, tau) given rho only: finds the rep-invariant
/// r-dimensional component of the natural action L_A(W) = rho(A)^T W + W rho(A)
/// on antisymmetric matrices via Casimir splitting, then reads tau off the
/// restricted action. Throws NoInvariantSubspace when no such component
/// exists.
inline std::vector<std::pair<OmegaMap, Representation>> solve_omega_joint(
    const Representation& rho, int r) {
  int s = rho.space_dim();
  int p = OmegaMap::pair_count(s);
  if (r == p) {
    // the whole wedge space: tau is the natural action itself
    Representation tau;
    tau.labels = rho.labels;
    OmegaMap whole;
    whole.r = p;
    whole.s = s;
    // W_k = E_{mu nu} - E_{nu mu} for the k-th pair in lex order
    std::vector<QMatrix> basis;
    for (int mu = 0; mu < s; mu++)
      for (int nu = mu + 1; nu < s; nu++) {
        QMatrix w(s, s);
        w(mu, nu) = Rational(1);
        w(nu, mu) = Rational(-1);
        whole.component.push_back(w);
      }
    for (const auto& rm : rho.matrices) {
      QMatrix t(p, p);
      QMatrix rt = rm.transpose();
      int i = 0;
      for (int mu = 0; mu < s; mu++)
        for (int nu = mu + 1; nu < s; nu++, i++) {
          QMatrix lw = rt * whole.component[i] + whole.component[i] * rm;
          int j = 0;
          for (int a = 0; a < s; a++)
            for (int b = a + 1; b < s; b++, j++) t(i, j) = lw(a, b);
        }
      tau.matrices.push_back(std::move(t));
    }
    std::vector<std::pair<OmegaMap, Representation>> out;
    out.emplace_back(std::move(whole), std::move(tau));
    return out;
  }

  StructureConstants sc = structure_constants(rho);
  // action on packed antisymmetric matrices
  Representation action;
  action.labels = rho.labels;
  for (const auto& rm : rho.matrices) {
    QMatrix t(p, p);
    QMatrix rt = rm.transpose();
    int col = 0;
    for (int mu = 0; mu < s; mu++)
      for (int nu = mu + 1; nu < s; nu++, col++) {
        QMatrix w(s, s);
        w(mu, nu) = Rational(1);
        w(nu, mu) = Rational(-1);
        QMatrix lw = rt * w + w * rm;
        int rowi = 0;
        for (int a = 0; a < s; a++)
          for (int b = a + 1; b < s; b++, rowi++) t(rowi, col) = lw(a, b);
      }
    action.matrices.push_back(std::move(t));
  }
  QMatrix cas = casimir(action, sc, Rational(1));
  auto comps = eigen_split(cas);
  std::vector<std::pair<OmegaMap, Representation>> out;
  for (const auto& comp : comps) {
    if (int(comp.basis.size()) != r) continue;
    OmegaMap w;
    w.r = r;
    w.s = s;
    for (const auto& v : comp.basis) {
      QMatrix m(s, s);
      int k = 0;
      for (int mu = 0; mu < s; mu++)
        for (int nu = mu + 1; nu < s; nu++, k++) {
          m(mu, nu) = v(k, 0);
          m(nu, mu) = -v(k, 0);
        }
      w.component.push_back(std::move(m));
    }
    // read tau off: rho^T W_i + W_i rho = sum_j tau^i_j W_j
    QMatrix basis_mat(p, r);
    for (int j = 0; j < r; j++)
      for (int k = 0; k < p; k++) basis_mat(k, j) = comp.basis[j](k, 0);
    LinearSolver solver(basis_mat);
    Representation tau;
    tau.labels = rho.labels;
    bool ok = true;
    for (const auto& rm : rho.matrices) {
      QMatrix t(r, r);
      QMatrix rt = rm.transpose();
      for (int i = 0; i < r && ok; i++) {
        QMatrix lw = rt * w.component[i] + w.component[i] * rm;
        QMatrix packed(p, 1);
        int k = 0;
        for (int a = 0; a < s; a++)
          for (int b = a + 1; b < s; b++, k++) packed(k, 0) = lw(a, b);
        QMatrix coeffs;
        try {
          coeffs = solver.solve(packed);
        } catch (const std::domain_error&) {
          ok = false;
          break;
        }
        for (int j = 0; j < r; j++) t(i, j) = coeffs(j, 0);
      }
      if (!ok) break;
      tau.matrices.push_back(std::move(t));
    }
    if (ok) out.emplace_back(std::move(w), std::move(tau));
  }
  if (out.empty()) throw NoInvariantSubspace("no r-dimensional invariant component");
  return out;
}

/// Lemma-style verification report for a solved triple (rho, tau, omega).
struct TauReport {
  bool part1_all = true;       // (tau([A,B]) - [tau(A),tau(B)]) omega = 0
  bool tau_is_representation = true;  // tau([A,B]) = [tau(A),tau(B)]
  std::vector<std::pair<int, int>> part1_failures;  // generator pairs (0-based)
  std::vector<std::pair<int, int>> rep_failures;
};

inline TauReport verify_tau_representation(const Representation& rho,
                                           const Representation& tau,
                                           const OmegaMap& omega) {
  StructureConstants sc = structure_constants(rho);
  int d = rho.dim_algebra();
  int r = tau.space_dim();
  TauReport rep;
  for (int i = 0; i < d; i++)
    for (int j = i + 1; j < d; j++) {
      QMatrix m = -bracket(tau.matrices[i], tau.matrices[j]);
      for (auto& [k, c] : sc.upper(i, j)) m = m + c * tau.matrices[k];
      if (!m.is_zero()) {
        rep.tau_is_representation = false;
        rep.rep_failures.emplace_back(i, j);
      }
      // part (1): M applied to omega must vanish
      bool part1 = true;
      for (int a = 0; a < r && part1; a++) {
        QMatrix acc(omega.s, omega.s);
        for (int b = 0; b < r; b++)
          if (!m(a, b).is_zero()) acc = acc + m(a, b) * omega.component[b];
        part1 = acc.is_zero();
      }
      if (!part1) {
        rep.part1_all = false;
        rep.part1_failures.emplace_back(i, j);
      }
    }
  return rep;
}

}  // namespace contactify
