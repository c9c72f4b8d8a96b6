#include <doctest.h>

#include <cmath>

#include "jointspec/jsm/measure.hpp"
#include "jointspec/jsm/moments.hpp"
#include "jointspec/jsm/partitions.hpp"
#include "jointspec/jsm/slater.hpp"
#include "support.hpp"

using namespace jointspec;
using namespace testing;

TEST_SUITE("jsm") {

TEST_CASE("diag(3,5) has a single atom") {
  const auto mu = jsm::build_measure(linalg::eigendecompose(D35().weights()));
  REQUIRE(mu.atoms.size() == 1);
  CHECK(mu.atoms[0].point == std::vector<double>{3.0, 5.0});
  CHECK(mu.atoms[0].weight == doctest::Approx(1.0));
  CHECK(jsm::moment_oracle(mu, MultiIndex{2, 1}) == doctest::Approx(45.0));
}

TEST_CASE("K3 measure has total mass one and the right marginals") {
  const auto mu = jsm::build_measure(linalg::eigendecompose(K3().weights()));
  CHECK(mu.total_mass() == doctest::Approx(1.0));
  const auto rep = jsm::marginal_check(K3().weights(), 0, 4);
  CHECK(rep.exact);
  CHECK(rep.max_deviation_determinant == 0.0);
  REQUIRE(rep.max_deviation_measure);
  CHECK(*rep.max_deviation_measure < 1e-10);
}

TEST_CASE("measure construction is capped") {
  CHECK_THROWS_WITH_AS(jsm::build_measure(linalg::eigendecompose(graphs::path(10).weights())),
                       doctest::Contains("n = 9"), std::domain_error);
}

TEST_CASE("zero multi-index gives moment one") {
  Rng rng(2);
  const auto a = graphs::random_integer_symmetric(4, -2, 2, rng);
  const auto m = jsm::generalized_moment(a, MultiIndex::zeros(4));
  REQUIRE(m.exact);
  CHECK(*m.exact == 1);
}

TEST_CASE("determinant moments match the atom sum on random matrices") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = graphs::random_integer_symmetric(4, -2, 2, rng);
    const auto mu = jsm::build_measure(linalg::eigendecompose(a));
    for (int j = 0; j < 5; ++j) {
      MultiIndex k = MultiIndex::zeros(4);
      for (std::size_t i = 0; i < 4; ++i) k[i] = static_cast<unsigned>(rng.uniform_int(0, 3));
      const auto m = jsm::generalized_moment(a, k);
      CHECK(m.value == doctest::Approx(jsm::moment_oracle(mu, k)).epsilon(1e-7).scale(jsm::moment_magnitude(mu, k)));
    }
  }
}

TEST_CASE("diag(3,5) covariance vanishes; power covariance at k = 0 vanishes") {
  const auto d = D35().matrix<Rational>();
  CHECK(jsm::covariance_matrix(d) == linalg::RationalMatrix(2, 2));
  CHECK(jsm::power_covariance(K3().matrix<Rational>(), 0, 2, 0) == 0);
  CHECK_THROWS_AS(jsm::power_covariance(d, 1, 1, 2), std::domain_error);
}

TEST_CASE("Laplacian and power covariance on a random simple graph") {
  Rng rng(23);
  const auto g = graphs::gnp(7, 0.5, rng);
  const auto a = g.matrix<Rational>();
  CHECK(jsm::covariance_matrix(a) == linalg::to_rational(g.laplacian()));
  for (unsigned k = 1; k <= 3; ++k) {
    const auto ak = linalg::matrix_power(a, k);
    const Rational expected = -ak(0, 1) * ak(0, 1);
    CHECK(jsm::power_covariance(a, 0, 1, k) == expected);
  }
}

TEST_CASE("singleton cumulant of a loopless graph is zero") {
  const int u[] = {1};
  CHECK(jsm::cumulant(K3().matrix<Rational>(), std::span<const int>(u)) == 0);
  CHECK(jsm::set_partitions(std::vector<int>{0, 1, 2}).size() == 5);
}

TEST_CASE("analytic minor with f(x) = x on the full set is det A") {
  const auto a = K3().matrix<Rational>();
  const int all[] = {0, 1, 2};
  const auto s = jsm::analytic_minor(a, std::span<const int>(all), jsm::Polynomial<Rational>{{0, 1}});
  CHECK(s.lhs == 2);
  CHECK(s.rhs == 2);
  const auto tr = jsm::trace_identity(a, std::span<const int>(all), jsm::Polynomial<Rational>{{0, 1}});
  CHECK(tr.lhs == 0);
  CHECK(tr.rhs == 0);
}

TEST_CASE("degree-one char poly for a singleton subset") {
  const int u[] = {0};
  const auto cp = jsm::submatrix_charpoly(P2().matrix<Rational>(), std::span<const int>(u), jsm::Polynomial<Rational>{{0, 1}});
  CHECK(cp.lhs == std::vector<Rational>{0, 1});
  CHECK(cp.rhs == cp.lhs);
}

TEST_CASE("Slater probabilities") {
  const auto eig = linalg::eigendecompose(D35().weights());
  const int one[] = {0}, two[] = {1};
  CHECK(jsm::slater_probability(eig, one, two).lhs == doctest::Approx(0.0));
  CHECK(jsm::slater_probability(eig, one, two).rhs == doctest::Approx(0.0));
  const auto ep = linalg::eigendecompose(graphs::path(3).weights());
  const int all[] = {0, 1, 2};
  CHECK(jsm::slater_probability(ep, all, all).lhs == doctest::Approx(1.0));
  CHECK(jsm::slater_probability(ep, all, all).rhs == doctest::Approx(1.0));
  const int sig[] = {0};
  CHECK(jsm::multivariate_marginal(eig, one, one, sig).lhs == doctest::Approx(1.0));
}

TEST_CASE("basis independence on K_{1,3}") {
  const auto rep = jsm::basis_independence_check(graphs::star(3).weights(), 20, 99);
  CHECK_FALSE(rep.skipped);
  CHECK(rep.trials == 20);
  CHECK(rep.max_deviation < 1e-8);
}

TEST_CASE("Hadamard lemma on block-supported matrices") {
  linalg::RationalMatrix m(4, 4), b(4, 4), c(4, 4);
  Rng rng(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      m(i, j) = Rational(static_cast<long>(rng.uniform_int(-5, 5)), static_cast<long>(rng.uniform_int(1, 4)));
      m(i, j).canonicalize();
      if (i / 2 == j / 2) {
        c(i, j) = 1;
        b(i, j) = static_cast<long>(rng.uniform_int(-3, 3));
      }
    }
  const auto s = jsm::hadamard_lemma(m, b, c);
  CHECK(s.lhs == s.rhs);
}

}
