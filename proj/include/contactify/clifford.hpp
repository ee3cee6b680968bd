#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactify/matrix.hpp"

namespace contactify {

/// 2x2 building blocks. Factor codes used in tensor words: 'I', 'x' (sigma_x),
/// 'e' (epsilon = -i sigma_y, real), 'z' (sigma_z).
inline const QMatrix& pauli2(char code) {
  static const QMatrix I = QMatrix::from_int({{1, 0}, {0, 1}});
  static const QMatrix X = QMatrix::from_int({{0, 1}, {1, 0}});
  static const QMatrix E = QMatrix::from_int({{0, -1}, {1, 0}});
  static const QMatrix Z = QMatrix::from_int({{1, 0}, {0, -1}});
  switch (code) {
    case 'I': return I;
    case 'x': return X;
    case 'e': return E;
    case 'z': return Z;
  }
  throw std::invalid_argument("pauli2: unknown factor code");
}

/// Kronecker product of 2x2 factors given as a word, e.g. "zIe" is
/// sigma_z (x) I (x) epsilon.
inline QMatrix from_word(const std::string& word) {
  if (word.empty()) throw std::invalid_argument("from_word: empty word");
  QMatrix m = pauli2(word[0]);
  for (size_t i = 1; i < word.size(); i++) m = kron(m, pauli2(word[i]));
  return m;
}

/// Factors a matrix as sign * (2x2 tensor word) when it has that shape.
inline std::optional<std::pair<int, std::string>> to_word(const QMatrix& m) {
  if (!m.is_square() || m.rows() == 0) return std::nullopt;
  int n = m.rows();
  if (n == 1) {
    if (m(0, 0) == Rational(1)) return std::make_pair(1, std::string());
    if (m(0, 0) == Rational(-1)) return std::make_pair(-1, std::string());
    return std::nullopt;
  }
  if (n % 2 != 0) return std::nullopt;
  std::string best;
  for (char code : {'I', 'x', 'e', 'z'}) {
    const QMatrix& a = pauli2(code);
    // candidate block structure: m = a (x) b
    int h = n / 2;
    QMatrix b(h, h);
    bool found_block = false;
    for (int bi = 0; bi < 2 && !found_block; bi++)
      for (int bj = 0; bj < 2 && !found_block; bj++) {
        if (a(bi, bj).is_zero()) continue;
        for (int i = 0; i < h; i++)
          for (int j = 0; j < h; j++)
            b(i, j) = m(bi * h + i, bj * h + j) / a(bi, bj);
        found_block = true;
      }
    if (!found_block) continue;
    if (kron(a, b) != m) continue;
    auto sub = to_word(b);
    if (!sub) continue;
    return std::make_pair(sub->first, std::string(1, code) + sub->second);
  }
  return std::nullopt;
}

/// A set of Clifford algebra generators with its diagonal metric:
/// g_i g_j + g_j g_i = 2 g_ij Id, with g_ij = diag(metric).
struct CliffordGenerators {
  std::vector<QMatrix> generators;
  std::vector<int> metric;  // +1 / -1 per generator
  std::string label;

  int count() const { return int(generators.size()); }
  int size() const { return generators.empty() ? 0 : generators[0].rows(); }

  /// Exact check of the Clifford identity for every pair.
  bool check_identity() const {
    int n = count();
    if (int(metric.size()) != n) return false;
    QMatrix id = QMatrix::identity(size());
    for (int i = 0; i < n; i++)
      for (int j = i; j < n; j++) {
        QMatrix anti = generators[i] * generators[j] + generators[j] * generators[i];
        QMatrix want = i == j ? Rational(2 * metric[i]) * id : QMatrix::zero(size(), size());
        if (anti != want) return false;
      }
    return true;
  }
};

namespace detail {
inline std::vector<int> alternating_metric(int count) {
  std::vector<int> g(count);
  for (int i = 0; i < count; i++) g[i] = (i % 2 == 0) ? 1 : -1;
  return g;
}
}  // namespace detail

/// Inductive tower of generalized Pauli matrices: 2n-1 generators of size
/// 2^(n-1), metric diag(1,-1,...,-1,1).
inline CliffordGenerators pauli_tower(int n) {
  if (n < 1) throw std::invalid_argument("pauli_tower: n must be positive");
  std::vector<QMatrix> sig = {QMatrix::identity(1)};
  for (int k = 1; k < n; k++) {
    const QMatrix& sx = pauli2('x');
    const QMatrix& ep = pauli2('e');
    std::vector<QMatrix> gam;
    gam.reserve(sig.size() + 1);
    for (const auto& s : sig) gam.push_back(kron(sx, s));
    gam.push_back(kron(ep, QMatrix::identity(sig[0].rows())));
    // extend by the product of all previous generators
    QMatrix prod = gam[0];
    for (size_t i = 1; i < gam.size(); i++) prod = prod * gam[i];
    sig = std::move(gam);
    sig.push_back(std::move(prod));
  }
  CliffordGenerators out{std::move(sig), detail::alternating_metric(2 * n - 1),
                         "pauli(" + std::to_string(n) + "," + std::to_string(n - 1) + ")"};
  return out;
}

/// Inductive tower of Dirac matrices: 2n generators of size 2^n, metric
/// diag(1,-1,...,1,-1).
inline CliffordGenerators dirac_tower(int n) {
  if (n < 1) throw std::invalid_argument("dirac_tower: n must be positive");
  CliffordGenerators pauli = pauli_tower(n);
  const QMatrix& sx = pauli2('x');
  const QMatrix& ep = pauli2('e');
  std::vector<QMatrix> gam;
  gam.reserve(pauli.generators.size() + 1);
  for (const auto& s : pauli.generators) gam.push_back(kron(sx, s));
  gam.push_back(kron(ep, QMatrix::identity(pauli.size())));
  CliffordGenerators out{std::move(gam), detail::alternating_metric(2 * n),
                         "dirac(" + std::to_string(n) + "," + std::to_string(n) + ")"};
  return out;
}

enum class CompactCase { cl07, cl08, cl80 };

/// Fixed compact-signature generator sets:
///   cl07: seven 8x8 generators with metric -Id(7);
///   cl08: eight 16x16 generators with metric -Id(8);
///   cl80: eight real 16x16 generators with metric +Id(8).
inline CliffordGenerators compact_generators(CompactCase which) {
  static const std::vector<std::string> cl07_words = {"zIe", "zex", "zez", "xeI",
                                                      "xxe", "xze", "eII"};
  switch (which) {
    case CompactCase::cl07: {
      std::vector<QMatrix> gens;
      for (const auto& w : cl07_words) gens.push_back(from_word(w));
      return {std::move(gens), std::vector<int>(7, -1), "cl(0,7)"};
    }
    case CompactCase::cl08: {
      std::vector<QMatrix> gens;
      for (const auto& w : cl07_words) gens.push_back(from_word("x" + w));
      gens.push_back(from_word("eIII"));
      return {std::move(gens), std::vector<int>(8, -1), "cl(0,8)"};
    }
    case CompactCase::cl80: {
      // Start from the split Dirac set and conjugate by (iB + Id) with
      // B = sigma_z (x) eps (x) sigma_z (x) eps, B^2 = Id. Over the reals
      // the conjugation acts as: gamma_odd (commuting with B) is unchanged,
      // gamma_even (anticommuting with B) becomes -B gamma_even. The result
      // is rational throughout.
      CliffordGenerators dirac = dirac_tower(4);
      QMatrix b = from_word("zeze");
      std::vector<QMatrix> gens;
      for (int i = 0; i < dirac.count(); i++) {
        const QMatrix& g = dirac.generators[i];
        QMatrix bg = b * g, gb = g * b;
        if (i % 2 == 0) {
          if (bg != gb) throw std::logic_error("cl80: expected [B, gamma_odd] = 0");
          gens.push_back(g);
        } else {
          if (bg != -gb) throw std::logic_error("cl80: expected {B, gamma_even} = 0");
          gens.push_back(-bg);
        }
      }
      return {std::move(gens), std::vector<int>(8, 1), "cl(8,0)"};
    }
  }
  throw std::invalid_argument("compact_generators: unknown case");
}

}  // namespace contactify
