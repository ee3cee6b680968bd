#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactify/forms.hpp"
#include "contactify/matrix.hpp"
#include "contactify/representation.hpp"
#include "contactify/sparse_solver.hpp"

namespace contactify {

struct AnsatzTooLarge : std::runtime_error {
  AnsatzTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Polynomial vector field on the contactification coordinates; components
/// in coordinate order (u's then x's) as degree-0 forms.
struct VectorField {
  CoordSystem coords;
  std::vector<PolyForm> components;

  std::string str() const {
    std::string out;
    bool first = true;
    for (int c = 0; c < coords.dim(); c++) {
      if (components[c].is_zero()) continue;
      if (!first) out += ";  ";
      out += "(" + components[c].str() + ") d/d" + coords.name(c);
      first = false;
    }
    return first ? "0" : out;
  }
};

/// Interior product Y -| f for a polynomial field.
inline PolyForm contract(const VectorField& y, const PolyForm& f) {
  if (f.degree() == 0) return PolyForm(f.coords(), 0);
  PolyForm out(f.coords(), f.degree() - 1);
  for (auto& [k, v] : f.terms()) {
    for (size_t t = 0; t < k.diffs.size(); t++) {
      int var = k.diffs[t];
      const PolyForm& comp = y.components[var];
      if (comp.is_zero()) continue;
      int sign = (t % 2 == 0) ? 1 : -1;
      std::vector<uint8_t> rest;
      for (size_t u = 0; u < k.diffs.size(); u++)
        if (u != t) rest.push_back(k.diffs[u]);
      for (auto& [ck, cv] : comp.terms()) {
        PolyForm::Monomial mono = k.mono;
        for (int i = 0; i < f.coords().dim(); i++) mono[i] = uint8_t(mono[i] + ck.mono[i]);
        out.add_term(rest, std::move(mono), Rational(sign) * v * cv);
      }
    }
  }
  return out;
}

/// Cartan formula L_Y f = d(Y -| f) + Y -| df.
inline PolyForm lie_derivative(const VectorField& y, const PolyForm& f) {
  return d(contract(y, f)) + contract(y, d(f));
}

/// Exact test that L_Y lambda^i lies in the span of the lambda's for all i,
/// through the forms path (independent of the solver's assembly).
inline bool is_symmetry(const ContactSystem& cs, const VectorField& y) {
  for (int i = 0; i < cs.r; i++) {
    PolyForm ly = lie_derivative(y, cs.lambdas[i]);
    // Q^i_j = du^j-coefficient of L_Y lambda^i (vertical frame is du-dual)
    PolyForm residual = ly;
    for (int j = 0; j < cs.r; j++) {
      // extract the du^j coefficient as a polynomial
      PolyForm qj(cs.coords, 0);
      for (auto& [k, v] : ly.terms())
        if (k.diffs.size() == 1 && k.diffs[0] == cs.coords.u_index(j))
          qj.add_term({}, k.mono, v);
      if (qj.is_zero()) continue;
      for (auto& [qk, qv] : qj.terms())
        for (auto& [lk, lv] : cs.lambdas[j].terms()) {
          PolyForm::Monomial mono = qk.mono;
          for (int t = 0; t < cs.coords.dim(); t++) mono[t] = uint8_t(mono[t] + lk.mono[t]);
          residual.add_term(lk.diffs, std::move(mono), -qv * lv);
        }
    }
    if (!residual.is_zero()) return false;
  }
  return true;
}

/// Full wedge-form check L_Y lambda^i ^ lambda^1 ^ ... ^ lambda^r = 0;
/// exponential in r, intended for the small systems.
inline bool is_symmetry_wedge(const ContactSystem& cs, const VectorField& y) {
  PolyForm all = cs.lambdas[0];
  for (int j = 1; j < cs.r; j++) all = wedge(all, cs.lambdas[j]);
  for (int i = 0; i < cs.r; i++) {
    PolyForm ly = lie_derivative(y, cs.lambdas[i]);
    if (!wedge(ly, all).is_zero()) return false;
  }
  return true;
}

struct SymmetryOptions {
  int wmax = 4;
  size_t max_unknowns = 30000;  // AnsatzTooLarge above this unless allow_huge
  bool allow_huge = false;
  SparseSystem::KernelOptions kernel;
};

struct SymmetrySpace {
  int dimension = 0;
  std::vector<VectorField> basis;
  size_t unknowns = 0;
  size_t equations = 0;
};

namespace symdetail {

/// Monomials of bounded weighted degree in a fixed canonical order
/// (by weighted degree, then lexicographic exponents).
struct MonomialTable {
  CoordSystem coords;
  int wmax;
  std::vector<std::vector<uint8_t>> monos;
  std::map<std::vector<uint8_t>, int> index;
  std::vector<int> wdeg;

  MonomialTable(const CoordSystem& c, int wm) : coords(c), wmax(wm) {
    std::vector<uint8_t> cur(c.dim(), 0);
    std::vector<std::pair<int, std::vector<uint8_t>>> all;
    enumerate(cur, 0, 0, all);
    std::sort(all.begin(), all.end());
    for (auto& [w, m] : all) {
      index[m] = int(monos.size());
      monos.push_back(m);
      wdeg.push_back(w);
    }
  }

  void enumerate(std::vector<uint8_t>& cur, int var, int w,
                 std::vector<std::pair<int, std::vector<uint8_t>>>& out) {
    if (var == coords.dim()) {
      out.emplace_back(w, cur);
      return;
    }
    int step = coords.weight(var);
    for (int e = 0; w + e * step <= wmax; e++) {
      cur[var] = uint8_t(e);
      enumerate(cur, var + 1, w + e * step, out);
    }
    cur[var] = 0;
  }

  int count_up_to(int w) const {
    int n = 0;
    for (size_t i = 0; i < monos.size(); i++)
      if (wdeg[i] <= w) n++;
    return n;
  }

  /// id of mono * extra variable, or -1 when out of range.
  int shifted(int id, int var) const {
    std::vector<uint8_t> m = monos[id];
    m[var]++;
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
};

using LinComb = std::map<int, Rational>;          // unknown id -> coefficient
using LPoly = std::map<int, LinComb>;             // mono id -> linear form

inline void lpoly_add(LPoly& acc, int mono, int unknown, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = acc[mono][unknown];
  slot += c;
  if (slot.is_zero()) {
    acc[mono].erase(unknown);
    if (acc[mono].empty()) acc.erase(mono);
  }
}

}  // namespace symdetail

/// Brute-force solver for infinitesimal symmetries with polynomial
/// coefficients of bounded weighted degree: x-components up to wmax-1,
/// u-components up to wmax. Expands
///   d/dx^b (Y -| lambda^i) + omega^i_{ab} a^a
///     = sum_j d/du^j (Y -| lambda^i) * theta^j_b
/// coefficient-wise over the monomial basis, and solves exactly. Every basis
/// field is re-verified through the forms path.
inline SymmetrySpace symmetry_space(const ContactSystem& cs, const SymmetryOptions& opt = {}) {
  using namespace symdetail;
  int r = cs.r, s = cs.s, sign = cs.sign_convention;
  const CoordSystem& coords = cs.coords;
  MonomialTable table(coords, opt.wmax);

  // unknown layout: x-components (weighted degree <= wmax-1), then
  // u-components (<= wmax); within a block, by coordinate then monomial id
  std::vector<int> a_monos, b_monos;
  for (size_t m = 0; m < table.monos.size(); m++) {
    if (table.wdeg[m] <= opt.wmax - 1) a_monos.push_back(int(m));
    if (table.wdeg[m] <= opt.wmax) b_monos.push_back(int(m));
  }
  size_t n_unknowns = size_t(s) * a_monos.size() + size_t(r) * b_monos.size();
  if (!opt.allow_huge && n_unknowns > opt.max_unknowns)
    throw AnsatzTooLarge("ansatz has " + std::to_string(n_unknowns) +
                         " unknowns (cap " + std::to_string(opt.max_unknowns) + ")");
  std::map<int, int> a_pos, b_pos;  // mono id -> position within block
  for (size_t i = 0; i < a_monos.size(); i++) a_pos[a_monos[i]] = int(i);
  for (size_t i = 0; i < b_monos.size(); i++) b_pos[b_monos[i]] = int(i);
  auto a_unknown = [&](int gamma, int mono) { return gamma * int(a_monos.size()) + a_pos.at(mono); };
  auto b_unknown = [&](int i, int mono) {
    return s * int(a_monos.size()) + i * int(b_monos.size()) + b_pos.at(mono);
  };

  // theta^i_b = sign * sum_{a<b} w^i_{ab} x^a  (the dx^b coefficient of
  // lambda^i minus the du part)
  auto theta = [&](int i, int b) {
    std::vector<std::pair<int, Rational>> t;  // (x index a, coefficient)
    for (int a = 0; a < b; a++) {
      const Rational& c = cs.omega.component[i](a, b);
      if (!c.is_zero()) t.emplace_back(a, Rational(sign) * c);
    }
    return t;
  };

  // g^i = b^i + sum_gamma theta^i_gamma a^gamma as linear-form polynomials
  std::vector<LPoly> g(r);
  for (int i = 0; i < r; i++) {
    for (int m : b_monos) lpoly_add(g[i], m, b_unknown(i, m), Rational(1));
    for (int gamma = 0; gamma < s; gamma++) {
      auto th = theta(i, gamma);
      if (th.empty()) continue;
      for (auto& [alpha, c] : th)
        for (int m : a_monos) {
          int shifted = table.shifted(m, coords.x_index(alpha));
          if (shifted >= 0) lpoly_add(g[i], shifted, a_unknown(gamma, m), c);
        }
    }
  }

  auto derivative = [&](const LPoly& p, int var) {
    LPoly out;
    for (auto& [m, lin] : p) {
      int e = table.monos[m][var];
      if (e == 0) continue;
      std::vector<uint8_t> reduced = table.monos[m];
      reduced[var]--;
      int rid = table.index.at(reduced);
      for (auto& [u, c] : lin) {
        Rational& slot = out[rid][u];
        slot += Rational(e) * c;
        if (slot.is_zero()) out[rid].erase(u);
      }
      if (out.count(rid) && out[rid].empty()) out.erase(rid);
    }
    return out;
  };

  SparseSystem sys(static_cast<int>(n_unknowns));
  for (int i = 0; i < r; i++) {
    std::vector<LPoly> dg_du(r);
    for (int j = 0; j < r; j++) dg_du[j] = derivative(g[i], coords.u_index(j));
    for (int b = 0; b < s; b++) {
      LPoly eq = derivative(g[i], coords.x_index(b));
      // + sign * w^i_{ab} a^a  (full antisymmetric tensor)
      for (int a = 0; a < s; a++) {
        const Rational& c = cs.omega.component[i](a, b);
        if (c.is_zero()) continue;
        for (int m : a_monos) lpoly_add(eq, m, a_unknown(a, m), Rational(sign) * c);
      }
      // - sum_j dg/du^j * theta^j_b
      for (int j = 0; j < r; j++) {
        auto th = theta(j, b);
        if (th.empty() || dg_du[j].empty()) continue;
        for (auto& [alpha, c] : th)
          for (auto& [m, lin] : dg_du[j]) {
            int shifted = table.shifted(m, coords.x_index(alpha));
            if (shifted < 0) continue;
            for (auto& [u, cc] : lin) lpoly_add(eq, shifted, u, -c * cc);
          }
      }
      for (auto& [m, lin] : eq) {
        SparseSystem::Row row(lin.begin(), lin.end());
        sys.add_row(std::move(row));
      }
    }
  }

  auto kernel = sys.kernel(opt.kernel);
  SymmetrySpace out;
  out.unknowns = n_unknowns;
  out.equations = sys.row_count();
  out.dimension = int(kernel.size());
  for (const auto& v : kernel) {
    VectorField y;
    y.coords = coords;
    y.components.assign(coords.dim(), PolyForm(coords, 0));
    for (int gamma = 0; gamma < s; gamma++)
      for (int m : a_monos) {
        const Rational& c = v(a_unknown(gamma, m), 0);
        if (!c.is_zero())
          y.components[coords.x_index(gamma)].add_term({}, table.monos[m], c);
      }
    for (int i = 0; i < r; i++)
      for (int m : b_monos) {
        const Rational& c = v(b_unknown(i, m), 0);
        if (!c.is_zero()) y.components[coords.u_index(i)].add_term({}, table.monos[m], c);
      }
    if (!is_symmetry(cs, y))
      throw std::logic_error("symmetry_space: re-substitution check failed");
    out.basis.push_back(std::move(y));
  }
  return out;
}

/// The weighted Euler field sum x d/dx + 2 sum u d/du.
inline VectorField grading_field(const CoordSystem& coords) {
  VectorField y;
  y.coords = coords;
  y.components.assign(coords.dim(), PolyForm(coords, 0));
  for (int c = 0; c < coords.dim(); c++) {
    PolyForm::Monomial mono(coords.dim(), 0);
    mono[c] = 1;
    y.components[c].add_term({}, mono, Rational(coords.weight(c)));
  }
  return y;
}

/// Lie bracket of polynomial vector fields.
inline VectorField field_bracket(const VectorField& a, const VectorField& b) {
  const CoordSystem& coords = a.coords;
  VectorField out;
  out.coords = coords;
  out.components.assign(coords.dim(), PolyForm(coords, 0));
  for (int c = 0; c < coords.dim(); c++) {
    PolyForm acc(coords, 0);
    for (int k = 0; k < coords.dim(); k++) {
      // a^k d_k b^c - b^k d_k a^c
      for (auto& [kb, vb] : b.components[c].terms()) {
        if (kb.mono[k] == 0) continue;
        PolyForm::Monomial reduced = kb.mono;
        reduced[k]--;
        for (auto& [ka, va] : a.components[k].terms()) {
          PolyForm::Monomial mono = reduced;
          for (int t = 0; t < coords.dim(); t++) mono[t] = uint8_t(mono[t] + ka.mono[t]);
          acc.add_term({}, std::move(mono), Rational(long(kb.mono[k])) * va * vb);
        }
      }
      for (auto& [ka, va] : a.components[c].terms()) {
        if (ka.mono[k] == 0) continue;
        PolyForm::Monomial reduced = ka.mono;
        reduced[k]--;
        for (auto& [kb, vb] : b.components[k].terms()) {
          PolyForm::Monomial mono = reduced;
          for (int t = 0; t < coords.dim(); t++) mono[t] = uint8_t(mono[t] + kb.mono[t]);
          acc.add_term({}, std::move(mono), -Rational(long(ka.mono[k])) * va * vb);
        }
      }
    }
    out.components[c] = std::move(acc);
  }
  return out;
}

/// Re-expands all pairwise brackets of the basis in the basis itself;
/// throws NotClosed if some bracket leaves the span (wmax too small).
inline StructureConstants closure_check(const std::vector<VectorField>& basis) {
  if (basis.empty()) return {};
  const CoordSystem& coords = basis[0].coords;
  // coordinate space: union of (component, monomial) supports
  std::map<std::pair<int, PolyForm::Monomial>, int> support;
  auto touch = [&](const VectorField& y) {
    for (int c = 0; c < coords.dim(); c++)
      for (auto& [k, v] : y.components[c].terms()) {
        auto key = std::make_pair(c, k.mono);
        if (!support.count(key)) {
          int id = int(support.size());
          support[key] = id;
        }
      }
  };
  for (const auto& y : basis) touch(y);
  std::vector<VectorField> brackets;
  int n = int(basis.size());
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      brackets.push_back(field_bracket(basis[i], basis[j]));
      touch(brackets.back());
    }
  int rows = int(support.size());
  QMatrix span(rows, n);
  auto pack = [&](const VectorField& y, QMatrix& m, int col) {
    for (int c = 0; c < coords.dim(); c++)
      for (auto& [k, v] : y.components[c].terms())
        m(support.at({c, k.mono}), col) = v;
  };
  for (int i = 0; i < n; i++) pack(basis[i], span, i);
  LinearSolver solver(span);
  if (!solver.injective()) throw NotIndependent("closure_check: basis fields dependent");
  StructureConstants sc;
  sc.dim = n;
  sc.terms.assign(n, std::vector<std::vector<std::pair<int, Rational>>>(n));
  int idx = 0;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++, idx++) {
      QMatrix rhs(rows, 1);
      pack(brackets[idx], rhs, 0);
      QMatrix x;
      try {
        x = solver.solve(rhs);
      } catch (const std::domain_error&) {
        throw NotClosed("bracket [" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        "] leaves the span (wmax too small?)");
      }
      for (int k = 0; k < n; k++)
        if (!x(k, 0).is_zero()) sc.terms[i][j].emplace_back(k, x(k, 0));
    }
  return sc;
}

}  // namespace contactify
