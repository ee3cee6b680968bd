#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactify/clifford.hpp"
#include "contactify/magical.hpp"
#include "contactify/representation.hpp"
#include "contactify/tables.hpp"

namespace contactify {

/// Expected invariants of a preset, cross-checked by the pipeline on every
/// run. Killing inertia values were produced by the exact-inertia oracle and
/// then frozen here.
struct PresetExpectation {
  std::vector<int> grade_dims;  // grades -2..2
  int total = 0;
  int killing_pos = 0;
  int killing_neg = 0;
  bool n0_equals_n00 = false;
  std::string algebra;
};

struct Preset {
  std::string name;
  std::string recipe;  // construction summary printed by `describe`
  int r = 0, s = 0;
  bool has_reps = true;
  int sign_convention = 1;
  Rational omega_scale = Rational(1);
  std::function<std::pair<Representation, Representation>()> build_pair;
  std::function<OmegaMap()> explicit_omega;  // forms-only preset
  QMatrix h;                                 // empty when no 4-form is attached
  bool phi_golden = false;                   // a printed 4-form display exists
  int stabilizer_strict_dim = -1;
  int stabilizer_conformal_dim = -1;
  bool check_identity_weight = false;  // S = 4 carried by the identity
  PresetExpectation expect;
  bool oracle_default = false;  // run the symmetry oracle in `run --oracle`
  bool oracle_huge = false;     // ansatz above the cap; needs --allow-huge
};

namespace presetdetail {

/// rho = tau_2 (x) (tau_5 ^ tau_5) of sl(2,R) (+) sl(5,R): generators
/// A_1..A_3 the sl(2) basis {E12, E21, E11 - E22}, A_4..A_27 the sl(5) basis
/// {E_ab (a != b), row-major} then {E_aa - E_(a+1)(a+1)}.
inline std::pair<Representation, Representation> sl2_sl5_pair() {
  Representation two, five;
  two.matrices.push_back(QMatrix::unit(2, 1, 2));
  two.matrices.push_back(QMatrix::unit(2, 2, 1));
  two.matrices.push_back(QMatrix::unit(2, 1, 1) - QMatrix::unit(2, 2, 2));
  for (int a = 1; a <= 5; a++)
    for (int b = 1; b <= 5; b++)
      if (a != b) five.matrices.push_back(QMatrix::unit(5, a, b));
  for (int a = 1; a <= 4; a++)
    five.matrices.push_back(QMatrix::unit(5, a, a) - QMatrix::unit(5, a + 1, a + 1));
  int d = 3 + 24;
  auto labels = Representation::default_labels(d);
  // extend both to the direct sum algebra
  Representation two_ext, five_ext;
  two_ext.labels = five_ext.labels = labels;
  for (int i = 0; i < d; i++) {
    two_ext.matrices.push_back(i < 3 ? two.matrices[i] : QMatrix(2, 2));
    five_ext.matrices.push_back(i < 3 ? QMatrix(5, 5) : five.matrices[i - 3]);
  }
  Representation wedge5 = wedge_rep(five_ext);     // Lambda^2 R^5, pair order
  Representation rho = tensor_rep(two_ext, wedge5);  // e_a (x) w_p, index a*10+p

  // structural tau on Lambda^4 R^5: basis by ascending missing index
  std::vector<std::vector<int>> subsets = {
      {1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}};
  Representation tau = exterior_power_rep(five_ext, subsets);
  return {rho, tau};
}

/// Defining representation of gl(6,R): one generator per matrix unit E_ab,
/// row-major.
inline std::pair<Representation, Representation> gl6_pair() {
  Representation rho;
  for (int a = 1; a <= 6; a++)
    for (int b = 1; b <= 6; b++) rho.matrices.push_back(QMatrix::unit(6, a, b));
  rho.labels = Representation::default_labels(36);
  Representation tau = wedge_rep(rho);
  return {rho, tau};
}

/// The seven 2-forms of the original rank-8 Pfaffian system on R^15,
/// as omega coefficients (mu < nu entries).
inline OmegaMap cartan_omega() {
  OmegaMap w;
  w.r = 7;
  w.s = 8;
  w.component.assign(7, QMatrix(8, 8));
  auto set = [&](int i, int mu, int nu, long c) {
    w.component[i](mu - 1, nu - 1) = Rational(c);
    w.component[i](nu - 1, mu - 1) = Rational(-c);
  };
  set(0, 1, 8, 1); set(0, 2, 5, 1); set(0, 3, 7, 1); set(0, 4, 6, 1);
  set(1, 1, 5, -1); set(1, 2, 8, 1); set(1, 3, 6, 1); set(1, 4, 7, -1);
  set(2, 1, 7, -1); set(2, 2, 6, -1); set(2, 3, 8, 1); set(2, 4, 5, 1);
  set(3, 1, 2, 1); set(3, 3, 4, 1); set(3, 5, 8, 1); set(3, 6, 7, 1);
  set(4, 1, 6, -1); set(4, 2, 7, 1); set(4, 3, 5, -1); set(4, 4, 8, 1);
  set(5, 1, 4, 1); set(5, 2, 3, 1); set(5, 5, 7, -1); set(5, 6, 8, 1);
  set(6, 1, 3, 1); set(6, 2, 4, -1); set(6, 5, 6, 1); set(6, 7, 8, 1);
  return w;
}

}  // namespace presetdetail

inline const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> catalog = [] {
    std::vector<Preset> v;

    {
      Preset p;
      p.name = "b3-flat36";
      p.recipe =
          "rho, tau: the two defining 3-dimensional representations of n_00 = so(3); "
          "flat (3,6)-distribution on R^6";
      p.r = 3;
      p.s = 3;
      p.sign_convention = -1;
      p.omega_scale = Rational(-1);
      p.build_pair = [] { return tables::so3_pair(); };
      p.expect = {{3, 3, 9, 3, 3}, 21, 12, 9, false, "so(4,3)"};
      p.oracle_default = true;
      v.push_back(std::move(p));
    }
    for (int eps : {1, -1}) {
      Preset p;
      p.name = eps == 1 ? "qc-pos" : "qc-neg";
      p.recipe = std::string("rho: spinorial 4-dimensional representation of n_00 = R + ") +
                 (eps == 1 ? "so(3)" : "so(1,2)") +
                 "; tau: its 3-dimensional vector counterpart; quaternionic-contact-type "
                 "distribution on R^7";
      p.r = 3;
      p.s = 4;
      p.omega_scale = Rational(1);
      p.build_pair = [eps] { return tables::quaternionic_pair(eps); };
      if (eps == 1)
        p.expect = {{3, 4, 7, 4, 3}, 21, 8, 13, false, "sp(2,1)"};
      else
        p.expect = {{3, 4, 7, 4, 3}, 21, 12, 9, false, "sp(6,R)"};
      p.oracle_default = true;
      v.push_back(std::move(p));
    }
    {
      Preset p;
      p.name = "f4-split";
      p.recipe =
          "rho: spin representation of n_00 = R + so(4,3) on 8-dimensional real spinors "
          "(pair products of the split Pauli tower); tau: the 7-dimensional component of "
          "the bispinor space, Casimir eigenvalue 6";
      p.r = 7;
      p.s = 8;
      p.build_pair = [] {
        return std::make_pair(spin_representation(pauli_tower(4), true),
                              tables::so43_vector_rep());
      };
      p.h = tables::f4_split_h();
      p.phi_golden = true;
      p.stabilizer_strict_dim = 21;
      p.stabilizer_conformal_dim = 22;
      p.check_identity_weight = true;
      p.expect = {{7, 8, 22, 8, 7}, 52, 28, 24, true, "f_I (split f4)"};
      p.oracle_default = true;
      v.push_back(std::move(p));
    }
    {
      Preset p;
      p.name = "f4-fII";
      p.recipe =
          "rho: spin representation of n_00 = R + so(0,7) (pair products of the compact "
          "generator set); tau: the 7-dimensional component of the bispinor space";
      p.r = 7;
      p.s = 8;
      p.sign_convention = -1;
      p.build_pair = [] {
        return std::make_pair(
            spin_representation(compact_generators(CompactCase::cl07), true),
            tables::so07_vector_rep());
      };
      p.h = tables::f4_compact_h();
      p.phi_golden = true;
      p.stabilizer_strict_dim = 21;
      p.stabilizer_conformal_dim = 22;
      p.expect = {{7, 8, 22, 8, 7}, 52, 16, 36, true, "f_II"};
      v.push_back(std::move(p));
    }
    {
      Preset p;
      p.name = "e6-I-24";
      p.recipe =
          "rho: Dirac spinor representation of n_00 = R + so(4,4) on R^16; tau: the "
          "8-dimensional component of rho_+ (x) rho_-";
      p.r = 8;
      p.s = 16;
      p.omega_scale = Rational(-1);
      p.build_pair = [] {
        return std::make_pair(spin_representation(dirac_tower(4), true),
                              tables::so44_vector_rep());
      };
      p.h = tables::e6_split_h();
      p.phi_golden = true;
      p.stabilizer_strict_dim = 29;
      p.stabilizer_conformal_dim = 30;
      p.expect = {{8, 16, 30, 16, 8}, 78, 42, 36, false, "e_I (split e6)"};
      p.oracle_huge = true;
      v.push_back(std::move(p));
    }
    {
      Preset p;
      p.name = "e6-IV-24";
      p.recipe =
          "rho: Dirac spinor representation of n_00 = R + so(8,0) on R^16 (real form of "
          "the conjugated generator set); tau: the 8-dimensional component of "
          "rho_+ (x) rho_-";
      p.r = 8;
      p.s = 16;
      p.build_pair = [] {
        return std::make_pair(
            spin_representation(compact_generators(CompactCase::cl80), true),
            tables::so80_vector_rep());
      };
      p.h = tables::e6_compact_h();
      p.stabilizer_strict_dim = 29;
      p.stabilizer_conformal_dim = 30;
      p.expect = {{8, 16, 30, 16, 8}, 78, 26, 52, false, "e_IV"};
      p.oracle_huge = true;
      v.push_back(std::move(p));
    }
    {
      Preset p;
      p.name = "e6-I-25";
      p.recipe =
          "rho: S = R^2 (x) Lambda^2 R^5 from the defining representations of n_00 = "
          "sl(2,R) + sl(5,R); tau: the 5-dimensional component of rho ^ rho "
          "(realized on Lambda^4 R^5)";
      p.r = 5;
      p.s = 20;
      p.omega_scale = Rational(-1);
      p.build_pair = [] { return presetdetail::sl2_sl5_pair(); };
      p.expect = {{5, 20, 28, 20, 5}, 78, 42, 36, false, "e_I (split e6)"};
      p.oracle_huge = true;
      v.push_back(std::move(p));
    }
    {
      Preset p;
      p.name = "so76-21";
      p.recipe =
          "rho: defining representation of n_00 = gl(6,R) on R^6; tau = rho ^ rho on "
          "Lambda^2 R^6 = R^15";
      p.r = 15;
      p.s = 6;
      p.omega_scale = Rational(-1);
      p.build_pair = [] { return presetdetail::gl6_pair(); };
      p.expect = {{15, 6, 36, 6, 15}, 78, 42, 36, true, "so(7,6)"};
      p.oracle_default = true;
      v.push_back(std::move(p));
    }
    {
      Preset p;
      p.name = "cartan-f4-original";
      p.recipe =
          "forms-only: the seven explicit 2-forms of the original rank-8 Pfaffian system "
          "on R^15; prolongation of the induced nilpotent algebra";
      p.r = 7;
      p.s = 8;
      p.has_reps = false;
      p.explicit_omega = [] { return presetdetail::cartan_omega(); };
      // The exact inertia (both by prolongation and by the brute-force
      // oracle) is (16,36): this system is coordinate-permutation
      // equivalent to the f4-fII one, not to f4-split.
      p.expect = {{7, 8, 22, 8, 7}, 52, 16, 36, false, "f_II"};
      p.oracle_default = true;
      v.push_back(std::move(p));
    }
    return v;
  }();
  return catalog;
}

inline const Preset& find_preset(const std::string& name) {
  for (const auto& p : preset_catalog())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace contactify
