#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "contactify/clifford.hpp"
#include "contactify/matrix.hpp"
#include "contactify/rational.hpp"
#include "contactify/sparse_solver.hpp"

using namespace contactify;

namespace {

QMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational(-7, 2).den() == 2);
  CHECK_THROWS(Rational(1, 0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2).mod(7) == 4);  // 2 * 4 = 8 = 1 mod 7
}

TEST_CASE("kron identities") {
  QMatrix i2 = QMatrix::identity(2);
  CHECK(kron(i2, i2) == QMatrix::identity(4));
  CHECK(kron(pauli2('z'), i2) ==
        QMatrix::from_int({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
  // expansion of sigma_x (x) eps by definition, entry by entry
  CHECK(kron(pauli2('x'), pauli2('e')) ==
        QMatrix::from_int({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}));
}

TEST_CASE("kron mixed product property") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; trial++) {
    QMatrix a = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
    QMatrix b = random_matrix(rng, 2, 2), d2 = random_matrix(rng, 2, 3);
    CHECK(kron(a, b) * kron(c, d2) == kron(a * c, b * d2));
  }
}

TEST_CASE("nullspace basics") {
  CHECK(nullspace(QMatrix::identity(3)).empty());
  auto ns = nullspace(QMatrix::from_int({{1, 1}, {1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0](0, 0) == Rational(1));
  CHECK(ns[0](1, 0) == Rational(-1));
}

TEST_CASE("rank-nullity and exactness of nullspace") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; trial++) {
    int rows = 2 + trial % 4, cols = 2 + (trial * 5) % 5;
    QMatrix m = random_matrix(rng, rows, cols);
    auto ns = nullspace(m);
    CHECK(rank(m) + int(ns.size()) == cols);
    for (const auto& v : ns) CHECK((m * v).is_zero());
  }
}

TEST_CASE("signature basics") {
  QMatrix d = QMatrix::from_int({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
  CHECK(signature(d) == std::make_tuple(2, 1, 0));
  CHECK(signature(QMatrix::zero(2, 2)) == std::make_tuple(0, 0, 2));
  CHECK_THROWS(signature(QMatrix::from_int({{0, 1}, {2, 0}})));
  // zero diagonal needs the symmetrization step
  CHECK(signature(QMatrix::from_int({{0, 1}, {1, 0}})) == std::make_tuple(1, 1, 0));
}

TEST_CASE("signature is a congruence invariant") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 8; trial++) {
    QMatrix a = random_matrix(rng, 4, 4);
    QMatrix sym = a + a.transpose();
    QMatrix p;
    do {
      p = random_matrix(rng, 4, 4);
    } while (rank(p) < 4);
    CHECK(signature(sym) == signature(p.transpose() * sym * p));
  }
}

TEST_CASE("sparse kernel agrees with dense nullspace") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; trial++) {
    int rows = 3 + trial % 5, cols = 4 + trial % 4;
    QMatrix m = random_matrix(rng, rows, cols);
    auto dense = nullspace(m);
    SparseSystem sys(cols);
    for (int i = 0; i < rows; i++) {
      SparseSystem::Row row;
      for (int j = 0; j < cols; j++)
        if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
      sys.add_row(std::move(row));
    }
    SparseSystem::KernelOptions exact_opt;
    exact_opt.use_modular = false;
    auto sparse_exact = sys.kernel(exact_opt);
    SparseSystem::KernelOptions mod_opt;
    mod_opt.use_modular = true;
    mod_opt.modular_threshold = 0;  // force the modular path
    auto sparse_mod = sys.kernel(mod_opt);
    REQUIRE(sparse_exact.size() == dense.size());
    REQUIRE(sparse_mod.size() == dense.size());
    for (size_t k = 0; k < dense.size(); k++) {
      CHECK(sparse_exact[k] == dense[k]);
      CHECK(sparse_mod[k] == dense[k]);
    }
  }
}

TEST_CASE("linear solver round trip") {
  std::mt19937 rng(23);
  QMatrix a = random_matrix(rng, 5, 3);
  while (rank(a) < 3) a = random_matrix(rng, 5, 3);
  QMatrix x_true = random_matrix(rng, 3, 2);
  QMatrix b = a * x_true;
  LinearSolver solver(a);
  REQUIRE(solver.injective());
  CHECK(solver.solve(b) == x_true);
  QMatrix bad = b;
  bad(0, 0) += Rational(1);
  bool threw = false;
  try {
    QMatrix sol = solver.solve(bad);
    threw = (a * sol != bad);
  } catch (const std::domain_error&) {
    threw = true;
  }
  CHECK(threw);
}
