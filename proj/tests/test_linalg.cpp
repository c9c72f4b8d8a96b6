#include <doctest.h>

#include <cmath>

#include "jointspec/linalg/dense.hpp"
#include "jointspec/linalg/symmetric.hpp"
#include "support.hpp"

using namespace jointspec;
using namespace testing;
using linalg::MatrixD;
using linalg::RationalMatrix;

TEST_SUITE("linalg") {

TEST_CASE("identity has one eigenvalue class and identity basis") {
  const auto eig = linalg::eigendecompose(linalg::SymmetricMatrix(MatrixD::identity(2)));
  CHECK(eig.eigenvalues == std::vector<double>{1.0, 1.0});
  CHECK(eig.classes.size() == 1);
  CHECK(linalg::max_abs_diff(eig.basis, MatrixD::identity(2)) < 1e-15);
}

TEST_CASE("eigendecomposition reconstructs and has det +1") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = graphs::random_integer_symmetric(5, -3, 3, rng);
    const auto eig = linalg::eigendecompose(a);
    MatrixD lam(5, 5);
    for (std::size_t i = 0; i < 5; ++i) lam(i, i) = eig.eigenvalues[i];
    const MatrixD back = eig.basis * lam * eig.basis.transpose();
    CHECK(linalg::max_abs_diff(back, a.dense()) < 1e-10);
    CHECK(linalg::determinant(eig.basis) == doctest::Approx(1.0));
    CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
  }
}

TEST_CASE("K3 classes group the double eigenvalue") {
  const auto eig = linalg::eigendecompose(K3().weights());
  REQUIRE(eig.classes.size() == 2);
  CHECK(eig.classes[0] == std::vector<int>{0, 1});
  CHECK(eig.classes[1] == std::vector<int>{2});
}

TEST_CASE("P2 basis columns are (1,-1)/sqrt2 and (1,1)/sqrt2 up to signs") {
  const auto eig = linalg::eigendecompose(P2().weights());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::fabs(eig.basis(0, 0)) == doctest::Approx(s));
  CHECK(eig.basis(0, 0) * eig.basis(1, 0) == doctest::Approx(-0.5));
  CHECK(eig.basis(0, 1) * eig.basis(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("exact and float determinants agree; Leibniz agrees with Bareiss") {
  CHECK(linalg::exact_determinant(RationalMatrix::identity(3)) == 1);
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = graphs::random_integer_symmetric(5, -2, 2, rng);
    const Rational d = linalg::exact_determinant(a.exact());
    CHECK(linalg::leibniz_determinant(a.exact()) == d);
    CHECK(linalg::determinant(a.dense()) == doctest::Approx(d.get_d()).epsilon(1e-9));
  }
}

TEST_CASE("singular matrices give zero, non-square input throws") {
  RationalMatrix m(2, 2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 1;
  CHECK(linalg::exact_determinant(m) == 0);
  CHECK_THROWS_AS(linalg::leibniz_determinant(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("matrix power and column mix conventions") {
  const auto p2 = P2().matrix<Rational>();
  CHECK(linalg::matrix_power(p2, 0) == RationalMatrix::identity(2));
  CHECK(linalg::column_mix(p2, MultiIndex{0, 0}) == RationalMatrix::identity(2));
  CHECK(linalg::column_mix(p2, MultiIndex{1, 1}) == p2);
  CHECK_THROWS_AS(linalg::column_mix(p2, MultiIndex{1}), std::invalid_argument);
}

TEST_CASE("schur block at z = 0 is the identity") {
  const int u[] = {0};
  CHECK(linalg::schur_block(P2().dense(), u, 0.0)(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("schur block equals the block of the direct inverse") {
  Rng rng(3);
  const int u[] = {1, 3};
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = graphs::random_integer_symmetric(5, -1, 1, rng);
    const double z = 0.05;
    MatrixD m = MatrixD::identity(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) -= z * a(i, j);
    const MatrixD full = linalg::inverse(m);
    CHECK(linalg::max_abs_diff(linalg::schur_block(a.dense(), u, z), linalg::principal_submatrix(full, std::span<const int>(u))) <
          1e-12);
  }
}

TEST_CASE("symmetric matrix rejects asymmetry") {
  MatrixD m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS(linalg::SymmetricMatrix(m));
}

TEST_CASE("characteristic polynomial of K3") {
  const auto c = linalg::characteristic_polynomial(K3().matrix<Rational>());
  // det(xI - A) = x^3 - 3x - 2
  CHECK(c == std::vector<Rational>{-2, -3, 0, 1});
}

}
