#pragma once

#include "contactify/matrix.hpp"
#include "contactify/representation.hpp"

namespace contactify {
namespace tables {

// Builtin generator tables for the preset catalog. Where a source table
// carried a typo, the entry here is the corrected value forced by closure
// and by the equivariance equation (see the repository notes in README).

inline QMatrix E7(int i, int j) { return QMatrix::unit(7, i, j); }
inline QMatrix E8(int i, int j) { return QMatrix::unit(8, i, j); }

/// Defining so(3) pair used by the (3,6)-distribution preset.
inline std::pair<Representation, Representation> so3_pair() {
  Representation rho, tau;
  rho.matrices = {
      QMatrix::from_int({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}}),
      QMatrix::from_int({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}),
      QMatrix::from_int({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}),
  };
  tau.matrices = {
      QMatrix::from_int({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}}),
      QMatrix::from_int({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}),
      QMatrix::from_int({{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}),
  };
  rho.labels = tau.labels = Representation::default_labels(3);
  return {rho, tau};
}

/// Spinorial 4-dimensional representation of R + so(3) (eps = +1) or
/// R + so(1,2) (eps = -1), with its 3-dimensional vector counterpart.
/// The (3,1) entry of tau(A_2) is +1; closure forces it.
inline std::pair<Representation, Representation> quaternionic_pair(int eps) {
  QMatrix s1 = QMatrix::from_int({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  QMatrix s2(4, 4), s3(4, 4);
  long e = eps;
  s2 = QMatrix::from_int({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  if (eps == -1) {
    s2(0, 3) = Rational(1);
    s2(1, 2) = Rational(1);
  }
  s3 = QMatrix::from_int({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  if (eps == -1) {
    s3(0, 2) = Rational(1);
    s3(1, 3) = Rational(-1);
  }
  Representation rho, tau;
  Rational h = half();
  rho.matrices = {(-h) * s3, h * s2, Rational(-e, 2) * s1, h * QMatrix::identity(4)};
  tau.matrices = {
      QMatrix(3, 3), QMatrix(3, 3), QMatrix(3, 3), QMatrix::identity(3),
  };
  tau.matrices[0](1, 2) = Rational(e);
  tau.matrices[0](2, 1) = Rational(-1);
  tau.matrices[1](0, 2) = Rational(-e);
  tau.matrices[1](2, 0) = Rational(1);
  tau.matrices[2](0, 1) = Rational(-e);
  tau.matrices[2](1, 0) = Rational(e);
  rho.labels = tau.labels = Representation::default_labels(4);
  return {rho, tau};
}

/// Vectorial representation of R + so(4,3) on the 7-dimensional component
/// of the bispinor space, in the basis paired with the split f4 preset.
inline Representation so43_vector_rep() {
  Rational h = half();
  std::vector<QMatrix> t(22);
  t[0] = E7(6, 6) - E7(2, 2);
  t[1] = h * (E7(2, 3) - E7(3, 2) + E7(2, 5) - E7(5, 2) + E7(3, 6) - E7(6, 3) + E7(5, 6) - E7(6, 5));
  t[2] = h * (E7(2, 3) + E7(3, 2) + E7(2, 5) + E7(5, 2) + E7(3, 6) + E7(6, 3) + E7(5, 6) + E7(6, 5));
  t[3] = h * (E7(2, 3) + E7(3, 2) - E7(2, 5) - E7(5, 2) - E7(3, 6) - E7(6, 3) + E7(5, 6) + E7(6, 5));
  t[4] = h * (E7(2, 3) - E7(3, 2) - E7(2, 5) + E7(5, 2) - E7(3, 6) + E7(6, 3) + E7(5, 6) - E7(6, 5));
  t[5] = E7(3, 3) - E7(5, 5);
  t[6] = h * (E7(1, 2) - E7(2, 1) - E7(1, 6) + E7(6, 1) - E7(2, 7) + E7(7, 2) + E7(6, 7) - E7(7, 6));
  t[7] = h * (-E7(1, 2) - E7(2, 1) - E7(1, 6) - E7(6, 1) - E7(2, 7) - E7(7, 2) - E7(6, 7) - E7(7, 6));
  t[8] = h * (E7(1, 3) - E7(3, 1) + E7(1, 5) - E7(5, 1) - E7(3, 7) + E7(7, 3) - E7(5, 7) + E7(7, 5));
  t[9] = h * (E7(1, 3) + E7(3, 1) - E7(1, 5) - E7(5, 1) + E7(3, 7) + E7(7, 3) - E7(5, 7) - E7(7, 5));
  t[10] = h * (-E7(1, 2) - E7(2, 1) + E7(1, 6) + E7(6, 1) + E7(2, 7) + E7(7, 2) - E7(6, 7) - E7(7, 6));
  t[11] = h * (E7(1, 2) - E7(2, 1) + E7(1, 6) - E7(6, 1) + E7(2, 7) - E7(7, 2) + E7(6, 7) - E7(7, 6));
  t[12] = h * (-E7(1, 3) - E7(3, 1) - E7(1, 5) - E7(5, 1) + E7(3, 7) + E7(7, 3) + E7(5, 7) + E7(7, 5));
  t[13] = h * (-E7(1, 3) + E7(3, 1) + E7(1, 5) - E7(5, 1) - E7(3, 7) + E7(7, 3) + E7(5, 7) - E7(7, 5));
  t[14] = E7(1, 1) - E7(7, 7);
  t[15] = h * (Rational(2) * E7(2, 4) - E7(4, 2) + E7(4, 6) - Rational(2) * E7(6, 4));
  t[16] = h * (Rational(2) * E7(2, 4) + E7(4, 2) + E7(4, 6) + Rational(2) * E7(6, 4));
  t[17] = h * (Rational(2) * E7(3, 4) - E7(4, 3) - E7(4, 5) + Rational(2) * E7(5, 4));
  t[18] = h * (Rational(-2) * E7(3, 4) - E7(4, 3) + E7(4, 5) + Rational(2) * E7(5, 4));
  t[19] = h * (Rational(-2) * E7(1, 4) + E7(4, 1) + E7(4, 7) - Rational(2) * E7(7, 4));
  t[20] = h * (Rational(2) * E7(1, 4) + E7(4, 1) - E7(4, 7) - Rational(2) * E7(7, 4));
  t[21] = QMatrix::identity(7);
  Representation tau;
  tau.matrices = std::move(t);
  tau.labels = Representation::default_labels(22);
  return tau;
}

/// Vectorial representation of R + so(0,7) for the compact f4 preset.
/// The A_4 entry is E(1,6) - E(6,1); closure forces the sign.
inline Representation so07_vector_rep() {
  auto D = [](int i, int j) { return E7(i, j) - E7(j, i); };
  std::vector<QMatrix> t = {
      D(3, 1), D(1, 2), D(3, 2), D(1, 6), D(3, 6), D(6, 2), D(1, 7),
      D(3, 7), D(7, 2), D(7, 6), D(5, 1), D(5, 3), D(2, 5), D(6, 5),
      D(7, 5), D(1, 4), D(3, 4), D(4, 2), D(4, 6), D(4, 7), D(5, 4),
  };
  t.push_back(QMatrix::identity(7));
  Representation tau;
  tau.matrices = std::move(t);
  tau.labels = Representation::default_labels(22);
  return tau;
}

/// Vectorial representation of R + so(4,4) (the tau leg of the triality).
inline Representation so44_vector_rep() {
  Rational h = half();
  std::vector<QMatrix> t(29);
  t[0] = E8(6, 6) - E8(2, 2);
  t[1] = h * (E8(2, 3) - E8(3, 2) + E8(2, 5) - E8(5, 2) + E8(3, 6) - E8(6, 3) + E8(5, 6) - E8(6, 5));
  t[2] = h * (E8(2, 3) + E8(3, 2) + E8(2, 5) + E8(5, 2) + E8(3, 6) + E8(6, 3) + E8(5, 6) + E8(6, 5));
  t[3] = h * (E8(2, 3) + E8(3, 2) - E8(2, 5) - E8(5, 2) - E8(3, 6) - E8(6, 3) + E8(5, 6) + E8(6, 5));
  t[4] = h * (E8(2, 3) - E8(3, 2) - E8(2, 5) + E8(5, 2) - E8(3, 6) + E8(6, 3) + E8(5, 6) - E8(6, 5));
  t[5] = E8(3, 3) - E8(5, 5);
  t[6] = h * (E8(1, 2) - E8(2, 1) - E8(1, 6) + E8(6, 1) - E8(2, 7) + E8(7, 2) + E8(6, 7) - E8(7, 6));
  t[7] = h * (-E8(1, 2) - E8(2, 1) - E8(1, 6) - E8(6, 1) - E8(2, 7) - E8(7, 2) - E8(6, 7) - E8(7, 6));
  t[8] = h * (E8(1, 3) - E8(3, 1) + E8(1, 5) - E8(5, 1) - E8(3, 7) + E8(7, 3) - E8(5, 7) + E8(7, 5));
  t[9] = h * (E8(1, 3) + E8(3, 1) - E8(1, 5) - E8(5, 1) + E8(3, 7) + E8(7, 3) - E8(5, 7) - E8(7, 5));
  t[10] = h * (-E8(1, 2) - E8(2, 1) + E8(1, 6) + E8(6, 1) + E8(2, 7) + E8(7, 2) - E8(6, 7) - E8(7, 6));
  t[11] = h * (E8(1, 2) - E8(2, 1) + E8(1, 6) - E8(6, 1) + E8(2, 7) - E8(7, 2) + E8(6, 7) - E8(7, 6));
  t[12] = h * (-E8(1, 3) - E8(3, 1) - E8(1, 5) - E8(5, 1) + E8(3, 7) + E8(7, 3) + E8(5, 7) + E8(7, 5));
  t[13] = h * (-E8(1, 3) + E8(3, 1) + E8(1, 5) - E8(5, 1) - E8(3, 7) + E8(7, 3) + E8(5, 7) - E8(7, 5));
  t[14] = E8(1, 1) - E8(7, 7);
  t[15] = h * (E8(2, 4) - E8(4, 2) + E8(2, 8) - E8(8, 2) + E8(4, 6) - E8(6, 4) - E8(6, 8) + E8(8, 6));
  t[16] = h * (E8(2, 4) + E8(4, 2) + E8(2, 8) + E8(8, 2) + E8(4, 6) + E8(6, 4) + E8(6, 8) + E8(8, 6));
  t[17] = h * (E8(3, 4) - E8(4, 3) + E8(3, 8) - E8(8, 3) - E8(4, 5) + E8(5, 4) + E8(5, 8) - E8(8, 5));
  t[18] = h * (-E8(3, 4) - E8(4, 3) - E8(3, 8) - E8(8, 3) + E8(4, 5) + E8(5, 4) + E8(5, 8) + E8(8, 5));
  t[19] = h * (-E8(1, 4) + E8(4, 1) - E8(1, 8) + E8(8, 1) + E8(4, 7) - E8(7, 4) - E8(7, 8) + E8(8, 7));
  t[20] = h * (E8(1, 4) + E8(4, 1) + E8(1, 8) + E8(8, 1) - E8(4, 7) - E8(7, 4) - E8(7, 8) - E8(8, 7));
  t[21] = h * (-E8(2, 4) - E8(4, 2) + E8(2, 8) + E8(8, 2) + E8(4, 6) + E8(6, 4) - E8(6, 8) - E8(8, 6));
  t[22] = h * (-E8(2, 4) + E8(4, 2) + E8(2, 8) - E8(8, 2) + E8(4, 6) - E8(6, 4) + E8(6, 8) - E8(8, 6));
  t[23] = h * (-E8(3, 4) - E8(4, 3) + E8(3, 8) + E8(8, 3) - E8(4, 5) - E8(5, 4) + E8(5, 8) + E8(8, 5));
  t[24] = h * (E8(3, 4) - E8(4, 3) - E8(3, 8) + E8(8, 3) + E8(4, 5) - E8(5, 4) + E8(5, 8) - E8(8, 5));
  t[25] = h * (E8(1, 4) + E8(4, 1) - E8(1, 8) - E8(8, 1) + E8(4, 7) + E8(7, 4) - E8(7, 8) - E8(8, 7));
  t[26] = h * (-E8(1, 4) + E8(4, 1) + E8(1, 8) - E8(8, 1) - E8(4, 7) + E8(7, 4) - E8(7, 8) + E8(8, 7));
  t[27] = -E8(4, 4) + E8(8, 8);
  t[28] = QMatrix::identity(8);
  Representation tau;
  tau.matrices = std::move(t);
  tau.labels = Representation::default_labels(29);
  return tau;
}

/// Vectorial representation of R + so(8,0) (the tau leg of the triality).
inline Representation so80_vector_rep() {
  auto D = [](int i, int j) { return E8(i, j) - E8(j, i); };
  std::vector<QMatrix> t = {
      D(3, 8), D(7, 8), D(3, 7), D(8, 4), D(4, 3), D(4, 7), D(5, 8),
      D(3, 5), D(7, 5), D(5, 4), D(2, 8), D(3, 2), D(7, 2), D(2, 4),
      D(5, 2), D(1, 8), D(3, 1), D(7, 1), D(1, 4), D(5, 1), D(2, 1),
      D(6, 8), D(3, 6), D(7, 6), D(6, 4), D(5, 6), D(2, 6), D(1, 6),
  };
  t.push_back(QMatrix::identity(8));
  Representation tau;
  tau.matrices = std::move(t);
  tau.labels = Representation::default_labels(29);
  return tau;
}

/// h matrices for the invariant 4-forms Phi = h_ij w^i ^ w^j. The split f4
/// h has h_44 = 1 (not 1/2); only that value reproduces the printed 4-form.
inline QMatrix f4_split_h() {
  QMatrix m(7, 7);
  Rational h = half();
  m(0, 6) = h; m(6, 0) = h;
  m(1, 5) = -h; m(5, 1) = -h;
  m(2, 4) = h; m(4, 2) = h;
  m(3, 3) = Rational(1);
  return m;
}

inline QMatrix f4_compact_h() { return Rational(-1) * QMatrix::identity(7); }

inline QMatrix e6_split_h() {
  QMatrix m(8, 8);
  Rational h = half();
  m(0, 6) = h; m(6, 0) = h;
  m(1, 5) = -h; m(5, 1) = -h;
  m(2, 4) = h; m(4, 2) = h;
  m(3, 7) = h; m(7, 3) = h;
  return m;
}

inline QMatrix e6_compact_h() { return QMatrix::identity(8); }

}  // namespace tables
}  // namespace contactify
