#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "contactify/matrix.hpp"
#include "contactify/rational.hpp"

namespace contactify {

namespace detail {

/// Forward elimination over the rationals with one pivot per leading column.
/// Pivot rows are frozen once installed; incoming rows reduce against them.
class ExactElimination {
public:
  using Row = std::vector<std::pair<int, Rational>>;

  explicit ExactElimination(int ncols) : pivot_of_col_(ncols, -1) {}

  bool insert(const Row& row) {
    std::map<int, Rational> work(row.begin(), row.end());
    while (!work.empty()) {
      auto it = work.begin();
      int c = it->first;
      int pr = pivot_of_col_[c];
      if (pr < 0) {
        Rational inv = it->second.inverse();
        Row stored;
        stored.reserve(work.size());
        for (auto& [cc, vv] : work) stored.emplace_back(cc, vv * inv);
        pivot_of_col_[c] = int(pivot_rows_.size());
        pivot_rows_.push_back(std::move(stored));
        return true;
      }
      Rational coef = it->second;
      work.erase(it);
      const Row& prow = pivot_rows_[pr];
      for (size_t k = 1; k < prow.size(); k++) {  // entry 0 is the leading 1
        Rational& slot = work[prow[k].first];
        slot -= coef * prow[k].second;
        if (slot.is_zero()) work.erase(prow[k].first);
      }
    }
    return false;
  }

  int rank() const { return int(pivot_rows_.size()); }

  std::vector<int> free_cols() const {
    std::vector<int> f;
    for (int c = 0; c < int(pivot_of_col_.size()); c++)
      if (pivot_of_col_[c] < 0) f.push_back(c);
    return f;
  }

  std::vector<int> sorted_pivot_cols() const {
    std::vector<int> p;
    for (int c = 0; c < int(pivot_of_col_.size()); c++)
      if (pivot_of_col_[c] >= 0) p.push_back(c);
    return p;
  }

  /// Kernel vector with x[free_col] = 1 and all other free coordinates 0.
  std::vector<Rational> back_substitute(int free_col) const {
    std::vector<Rational> x(pivot_of_col_.size());
    x[free_col] = Rational(1);
    auto pcols = sorted_pivot_cols();
    for (auto it = pcols.rbegin(); it != pcols.rend(); ++it) {
      const Row& prow = pivot_rows_[pivot_of_col_[*it]];
      Rational acc;
      for (size_t k = 1; k < prow.size(); k++)
        if (!x[prow[k].first].is_zero()) acc += prow[k].second * x[prow[k].first];
      x[*it] = -acc;
    }
    return x;
  }

private:
  std::vector<int> pivot_of_col_;
  std::vector<Row> pivot_rows_;
};

/// The same elimination over F_p with word-size arithmetic.
class ModularElimination {
public:
  using Row = std::vector<std::pair<int, uint64_t>>;

  ModularElimination(int ncols, uint64_t p) : p_(p), pivot_of_col_(ncols, -1) {}

  bool insert(const Row& row) {
    std::map<int, uint64_t> work(row.begin(), row.end());
    while (!work.empty()) {
      auto it = work.begin();
      int c = it->first;
      int pr = pivot_of_col_[c];
      if (pr < 0) {
        uint64_t inv = invmod_u64(it->second, p_);
        Row stored;
        stored.reserve(work.size());
        for (auto& [cc, vv] : work) stored.emplace_back(cc, mulmod_u64(vv, inv, p_));
        pivot_of_col_[c] = int(pivot_rows_.size());
        pivot_rows_.push_back(std::move(stored));
        return true;
      }
      uint64_t coef = it->second;
      work.erase(it);
      const Row& prow = pivot_rows_[pr];
      for (size_t k = 1; k < prow.size(); k++) {
        auto [slot_it, inserted] = work.try_emplace(prow[k].first, 0);
        uint64_t t = mulmod_u64(coef, prow[k].second, p_);
        uint64_t& v = slot_it->second;
        v = v >= t ? v - t : v + p_ - t;
        if (v == 0) work.erase(slot_it);
      }
    }
    return false;
  }

  int rank() const { return int(pivot_rows_.size()); }

  std::vector<int> free_cols() const {
    std::vector<int> f;
    for (int c = 0; c < int(pivot_of_col_.size()); c++)
      if (pivot_of_col_[c] < 0) f.push_back(c);
    return f;
  }

  std::vector<uint64_t> back_substitute(int free_col) const {
    std::vector<uint64_t> x(pivot_of_col_.size(), 0);
    x[free_col] = 1;
    std::vector<int> pcols;
    for (int c = 0; c < int(pivot_of_col_.size()); c++)
      if (pivot_of_col_[c] >= 0) pcols.push_back(c);
    for (auto it = pcols.rbegin(); it != pcols.rend(); ++it) {
      const Row& prow = pivot_rows_[pivot_of_col_[*it]];
      uint64_t acc = 0;
      for (size_t k = 1; k < prow.size(); k++)
        if (x[prow[k].first]) {
          uint64_t t = mulmod_u64(prow[k].second, x[prow[k].first], p_);
          acc += t;
          if (acc >= p_) acc -= p_;
        }
      x[*it] = acc ? p_ - acc : 0;
    }
    return x;
  }

private:
  uint64_t p_;
  std::vector<int> pivot_of_col_;
  std::vector<Row> pivot_rows_;
};

/// Deterministic ladder of word-size primes for the modular path.
inline uint64_t nth_solver_prime(int n) {
  static std::vector<uint64_t> cache;
  if (cache.empty()) cache.push_back((uint64_t(1) << 61) - 1);
  while (int(cache.size()) <= n) {
    mpz_class next;
    mpz_nextprime(next.get_mpz_t(), mpz_class(static_cast<unsigned long>(cache.back() + 1)).get_mpz_t());
    cache.push_back(mpz_get_ui(next.get_mpz_t()));
  }
  return cache[n];
}

/// Rational reconstruction of u mod m (standard half-extended Euclid bound).
inline bool rational_reconstruct(const mpz_class& u, const mpz_class& m, Rational& out) {
  mpz_class n_bound;
  mpz_sqrt(n_bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
  mpz_class r0 = m, r1 = u % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > n_bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  if (t1 == 0) return false;
  mpz_class den = t1 < 0 ? mpz_class(-t1) : t1;
  mpz_class num = t1 < 0 ? mpz_class(-r1) : r1;
  if (den > n_bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && g != 0) return false;
  out = Rational(mpq_class(num, den));
  return true;
}

}  // namespace detail

/// Sparse homogeneous system A x = 0 over Q. kernel() returns the canonical
/// basis (RREF rows of the kernel) as column vectors.
///
/// Large systems run elimination mod word-size primes with CRT and rational
/// reconstruction; every reconstructed basis is re-verified exactly against
/// all rows, so an unlucky prime can cost time but never correctness.
class SparseSystem {
public:
  using Row = std::vector<std::pair<int, Rational>>;

  explicit SparseSystem(int ncols) : ncols_(ncols) {}

  int cols() const { return ncols_; }
  size_t row_count() const { return rows_.size(); }

  /// Adds one equation; terms need not be sorted or combined.
  void add_row(Row row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Row out;
    for (auto& [c, v] : row) {
      if (v.is_zero()) continue;
      if (c < 0 || c >= ncols_) throw std::out_of_range("SparseSystem: column index");
      if (!out.empty() && out.back().first == c)
        out.back().second += v;
      else
        out.emplace_back(c, v);
    }
    Row clean;
    for (auto& [c, v] : out)
      if (!v.is_zero()) clean.emplace_back(c, v);
    if (!clean.empty()) rows_.push_back(std::move(clean));
  }

  struct KernelOptions {
    bool use_modular = true;
    size_t modular_threshold = 2'000'000;  // rows * cols
    int max_primes = 8;
  };

  std::vector<QMatrix> kernel() const { return kernel(KernelOptions{}); }

  std::vector<QMatrix> kernel(const KernelOptions& opt) const {
    if (opt.use_modular && rows_.size() * size_t(ncols_) >= opt.modular_threshold) {
      auto res = kernel_modular(opt);
      if (res) return *res;
    }
    return kernel_exact();
  }

  int rank() const {
    detail::ExactElimination e(ncols_);
    for (const auto& r : rows_) e.insert(r);
    return e.rank();
  }

  bool in_kernel(const QMatrix& v) const {
    for (const auto& row : rows_) {
      Rational s;
      for (const auto& [c, val] : row)
        if (!v(c, 0).is_zero()) s += val * v(c, 0);
      if (!s.is_zero()) return false;
    }
    return true;
  }

private:
  std::vector<QMatrix> kernel_exact() const {
    detail::ExactElimination e(ncols_);
    for (const auto& r : rows_) e.insert(r);
    auto free_cols = e.free_cols();
    if (free_cols.empty()) return {};
    QMatrix span(int(free_cols.size()), ncols_);
    for (size_t i = 0; i < free_cols.size(); i++) {
      auto x = e.back_substitute(free_cols[i]);
      for (int c = 0; c < ncols_; c++) span(int(i), c) = x[c];
    }
    return canonical_row_basis(span);
  }

  std::optional<std::vector<QMatrix>> kernel_modular(const KernelOptions& opt) const {
    // Accumulated CRT state per kernel entry, keyed by the free-column set.
    std::vector<int> free_ref;
    std::vector<std::vector<mpz_class>> residues;  // per kernel vector, per column
    mpz_class modulus = 1;
    int used_primes = 0;
    for (int pi = 0; pi < opt.max_primes; pi++) {
      uint64_t p = detail::nth_solver_prime(pi);
      detail::ModularElimination e(ncols_, p);
      bool bad = false;
      for (const auto& r : rows_) {
        detail::ModularElimination::Row mr;
        mr.reserve(r.size());
        try {
          for (const auto& [c, v] : r) {
            uint64_t m = v.mod(p);
            if (m) mr.emplace_back(c, m);
          }
        } catch (const std::domain_error&) {
          bad = true;  // denominator divisible by p
          break;
        }
        e.insert(mr);
      }
      if (bad) continue;
      auto fc = e.free_cols();
      if (free_ref.empty() || fc.size() < free_ref.size()) {
        // higher rank than previously seen: restart accumulation
        free_ref = fc;
        residues.assign(fc.size(), std::vector<mpz_class>(ncols_, 0));
        modulus = 1;
        used_primes = 0;
      } else if (fc != free_ref) {
        continue;  // lower rank (unlucky prime): skip
      }
      if (free_ref.empty()) return std::vector<QMatrix>{};
      // canonicalize the mod-p kernel: RREF rows of the kernel matrix
      std::vector<std::vector<uint64_t>> vecs;
      for (int f : free_ref) vecs.push_back(e.back_substitute(f));
      modular_rref_rows(vecs, p);
      // CRT-combine into accumulated residues
      mpz_class new_modulus = modulus * mpz_class(static_cast<unsigned long>(p));
      for (size_t i = 0; i < vecs.size(); i++)
        for (int c = 0; c < ncols_; c++) {
          mpz_class cur = residues[i][c];
          uint64_t target = vecs[i][c];
          // x = cur (mod modulus), x = target (mod p)
          uint64_t cur_mod_p = detail::mpz_mod_u64(cur, p);
          uint64_t diff = target >= cur_mod_p ? target - cur_mod_p : target + p - cur_mod_p;
          uint64_t minv = used_primes == 0
                              ? 1
                              : detail::invmod_u64(detail::mpz_mod_u64(modulus, p), p);
          uint64_t k = detail::mulmod_u64(diff, minv, p);
          residues[i][c] = cur + modulus * mpz_class(static_cast<unsigned long>(k));
        }
      modulus = new_modulus;
      used_primes++;
      // attempt reconstruction and exact verification
      std::vector<QMatrix> basis;
      bool ok = true;
      for (size_t i = 0; i < residues.size() && ok; i++) {
        QMatrix v(ncols_, 1);
        for (int c = 0; c < ncols_ && ok; c++) {
          Rational val;
          if (!detail::rational_reconstruct(residues[i][c], modulus, val)) ok = false;
          else v(c, 0) = val;
        }
        if (ok) basis.push_back(std::move(v));
      }
      if (!ok) continue;
      bool verified = true;
      for (const auto& v : basis)
        if (!in_kernel(v)) { verified = false; break; }
      if (!verified) continue;
      // Each verified vector lies in the kernel and the set is independent
      // (distinct unit free coordinates); since dim ker <= #free(p), this is
      // a full canonical basis.
      QMatrix span(int(basis.size()), ncols_);
      for (size_t i = 0; i < basis.size(); i++)
        for (int c = 0; c < ncols_; c++) span(int(i), c) = basis[i](c, 0);
      return canonical_row_basis(span);
    }
    return std::nullopt;  // fall back to exact
  }

  /// In-place RREF of dense mod-p row vectors (small row count).
  static void modular_rref_rows(std::vector<std::vector<uint64_t>>& rows, uint64_t p) {
    if (rows.empty()) return;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); c++) {
      size_t sel = r;
      while (sel < rows.size() && rows[sel][c] == 0) sel++;
      if (sel == rows.size()) continue;
      std::swap(rows[r], rows[sel]);
      uint64_t inv = detail::invmod_u64(rows[r][c], p);
      for (size_t j = c; j < ncols; j++)
        rows[r][j] = detail::mulmod_u64(rows[r][j], inv, p);
      for (size_t i = 0; i < rows.size(); i++) {
        if (i == r || rows[i][c] == 0) continue;
        uint64_t f = rows[i][c];
        for (size_t j = c; j < ncols; j++) {
          uint64_t t = detail::mulmod_u64(f, rows[r][j], p);
          rows[i][j] = rows[i][j] >= t ? rows[i][j] - t : rows[i][j] + p - t;
        }
      }
      r++;
    }
  }

  int ncols_;
  std::vector<Row> rows_;
};

}  // namespace contactify
