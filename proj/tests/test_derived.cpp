#include <doctest.h>

#include <cmath>

#include "jointspec/hikes/generating.hpp"
#include "jointspec/hikes/walks.hpp"
#include "jointspec/jsm/measure.hpp"
#include "jointspec/jsm/moments.hpp"
#include "jointspec/jsm/partitions.hpp"
#include "jointspec/jsm/slater.hpp"
#include "jointspec/starlimit/limit_law.hpp"
#include "jointspec/starlimit/star_product.hpp"
#include "support.hpp"

using namespace jointspec;
using namespace testing;
using linalg::RationalMatrix;

namespace {

RationalMatrix exact(const WeightedGraph& g) { return g.matrix<Rational>(); }

template <class Series>
void check_series(const Series& s, const std::vector<Rational>& expected) {
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CAPTURE(k);
    CHECK(s[k] == expected[k]);
  }
}

void check_close(const std::vector<double>& got, const std::vector<Rational>& expected, double tol) {
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (tol == 0) CHECK(got[i] == expected[i].get_d());
    else CHECK(got[i] == doctest::Approx(expected[i].get_d()).epsilon(tol));
  }
}

std::vector<double> sorted_degrees(const linalg::SymmetricMatrix& a) {
  std::vector<double> d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j);
    d.push_back(s);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("derived") {

TEST_CASE("linalg reference values") {
  const auto& t = oracle();
  check_close(linalg::eigendecompose(P2().weights()).eigenvalues, t.row("eigenvalues P2"), 1e-12);
  check_close(linalg::eigendecompose(K3().weights()).eigenvalues, t.row("eigenvalues K3"), 1e-12);
  CHECK(linalg::exact_determinant(exact(K3())) == t.scalar("det K3"));
  CHECK(linalg::exact_determinant(exact(P2())) == t.scalar("det P2"));
  CHECK(linalg::matrix_power(exact(P2()), 2) == t.matrix("power P2 2"));
  CHECK(linalg::matrix_power(exact(K3()), 2) == t.matrix("power K3 2"));
  CHECK(linalg::column_mix(exact(P2()), MultiIndex{2, 0}) == t.matrix("column_mix P2 2,0"));
  const int one[] = {0};
  CHECK(linalg::schur_block(P2().dense(), one, 0.5)(0, 0) ==
        doctest::Approx(t.scalar("schur P2 u=1 z=1/2").get_d()).epsilon(1e-14));
  CHECK(linalg::schur_block(K3().dense(), one, 0.25)(0, 0) ==
        doctest::Approx(t.scalar("schur K3 u=1 z=1/4").get_d()).epsilon(1e-12));
}

TEST_CASE("jsm reference values") {
  const auto& t = oracle();
  const auto mu = jsm::build_measure(linalg::eigendecompose(P2().weights()));
  REQUIRE(mu.atoms.size() == 2);
  CHECK(mu.atoms[0].point[0] == doctest::Approx(-1.0));
  CHECK(mu.atoms[0].weight == doctest::Approx(t.scalar("measure P2 atom -1 1").get_d()));
  CHECK(mu.atoms[1].point[0] == doctest::Approx(1.0));
  CHECK(mu.atoms[1].weight == doctest::Approx(t.scalar("measure P2 atom 1 -1").get_d()));

  CHECK(jsm::generalized_moment(exact(P2()), MultiIndex{2, 0}) == t.scalar("moment P2 2,0"));
  CHECK(jsm::generalized_moment(exact(P2()), MultiIndex{1, 1}) == t.scalar("moment P2 1,1"));
  CHECK(jsm::moment_oracle(mu, MultiIndex{1, 0}) == doctest::Approx(t.scalar("oracle P2 1,0").get_d()));
  CHECK(jsm::generalized_moment(exact(D35()), MultiIndex{2, 1}) == t.scalar("moment diag35 2,1"));

  const auto k3 = exact(K3());
  const auto marg = t.row("marginal K3 1");
  for (unsigned k = 0; k < marg.size(); ++k)
    CHECK(jsm::generalized_moment(k3, MultiIndex::unit(3, 0, k)) == marg[k]);
  const auto marg_d = t.row("marginal diag35 2");
  for (unsigned k = 0; k < marg_d.size(); ++k)
    CHECK(jsm::generalized_moment(exact(D35()), MultiIndex::unit(2, 1, k)) == marg_d[k]);

  CHECK(jsm::covariance_matrix(exact(P2())) == t.matrix("covariance P2"));
  CHECK(jsm::covariance_matrix(k3) == t.matrix("covariance K3"));
  CHECK(jsm::power_covariance(exact(P2()), 0, 1, 1) == t.scalar("power_covariance P2 1 2 1"));
  CHECK(jsm::power_covariance(k3, 0, 1, 2) == t.scalar("power_covariance K3 1 2 2"));

  const int all3[] = {0, 1, 2};
  const int both[] = {0, 1};
  CHECK(jsm::cumulant(k3, std::span<const int>(all3)) == t.scalar("cumulant K3 1,2,3"));
  CHECK(jsm::cumulant(exact(P2()), std::span<const int>(both)) == t.scalar("cumulant P2 1,2"));

  const jsm::Polynomial<Rational> x{{0, 1}}, x2{{0, 0, 1}}, one_plus_x{{1, 1}};
  const auto minor = jsm::analytic_minor(k3, std::span<const int>(both), x2);
  CHECK(minor.lhs == t.scalar("analytic_minor K3 x^2 u=1,2"));
  CHECK(minor.rhs == minor.lhs);
  const auto minor2 = jsm::analytic_minor(exact(P2()), std::span<const int>(both), one_plus_x);
  CHECK(minor2.lhs == t.scalar("analytic_minor P2 1+x u=1,2"));
  CHECK(minor2.rhs == minor2.lhs);
  const int first[] = {0};
  const auto tr = jsm::trace_identity(exact(P2()), std::span<const int>(first), x2);
  CHECK(tr.lhs == t.scalar("trace P2 x^2 u=1"));
  CHECK(tr.rhs == tr.lhs);
  const auto tr3 = jsm::trace_identity(k3, std::span<const int>(all3), x2);
  CHECK(tr3.lhs == t.scalar("trace K3 x^2 u=all"));
  CHECK(tr3.rhs == tr3.lhs);
  const auto cp = jsm::submatrix_charpoly(exact(P2()), std::span<const int>(both), x);
  CHECK(cp.lhs == t.row("charpoly P2 x u=1,2"));
  CHECK(cp.rhs == cp.lhs);
  const auto cp3 = jsm::submatrix_charpoly(k3, std::span<const int>(both), x2);
  CHECK(cp3.lhs == t.row("charpoly K3 x^2 u=1,2"));
  CHECK(cp3.rhs == cp3.lhs);

  const auto eig = linalg::eigendecompose(P2().weights());
  const auto sl = jsm::slater_probability(eig, std::span<const int>(first), std::span<const int>(first));
  CHECK(sl.lhs == doctest::Approx(t.scalar("slater P2 u=1 v=1").get_d()));
  CHECK(sl.rhs == doctest::Approx(sl.lhs));
  const int id[] = {0, 1};
  const auto mm = jsm::multivariate_marginal(eig, std::span<const int>(both), std::span<const int>(both),
                                             std::span<const int>(id));
  CHECK(mm.lhs == doctest::Approx(t.scalar("multivariate_marginal P2 s=1,2 t=1,2").get_d()));
  CHECK(mm.rhs == doctest::Approx(mm.lhs));
}

TEST_CASE("starlimit reference values") {
  const auto& t = oracle();
  check_close(sorted_degrees(starlimit::build_star_product(P2(), {0}, 3).assembled()),
              t.row("star P2 u=1 n=3 degrees"), 0);
  check_close(sorted_degrees(starlimit::build_star_product(P3(), {1}, 2).assembled()),
              t.row("star P3 u=2 n=2 degrees"), 0);
  const int first[] = {0};
  for (std::size_t n : {1, 2, 5}) {
    const auto expected = t.scalar("scaled K3 u=1 k=2 n=" + std::to_string(n));
    CHECK(starlimit::scaled_moment(starlimit::build_star_product(K3(), {0}, n), MultiIndex{2}) ==
          doctest::Approx(expected.get_d()));
    const auto r = starlimit::scaled_moment_reduced(K3(), first, n, MultiIndex{2});
    REQUIRE(r.exact_unscaled);
    CHECK(*r.exact_unscaled == expected * Rational(static_cast<long>(n)));
  }
  const auto law = starlimit::make_limit_law(P3(), {0, 2});
  REQUIRE(law.d_exact);
  CHECK(*law.d_exact == t.matrix("limit D P3 u=1,3"));
  const auto lim = starlimit::limit_moment(law, MultiIndex{2, 2});
  REQUIRE(lim.exact);
  CHECK(*lim.exact == t.scalar("limit P3 u=1,3 k=2,2"));

  const auto law1 = starlimit::make_limit_law(P2(), {0});
  const double zs[] = {0.1};
  const auto mgf = starlimit::rademacher_mgf_check(law1, zs, 40);
  const double expected = t.scalar("mgf D=1 z=0.1").get_d();
  CHECK(std::fabs(mgf.sides.lhs - expected) <= 1e-10);
  CHECK(std::fabs(mgf.sides.rhs - expected) <= 1e-10);
}

TEST_CASE("hikes reference values") {
  const auto& t = oracle();
  const auto k3 = exact(K3());
  const auto p2 = exact(P2());
  CHECK(Rational(static_cast<long>(hikes::CycleCatalog(P2()).size())) == t.scalar("cycles P2"));
  CHECK(Rational(static_cast<long>(hikes::CycleCatalog(K3()).size())) == t.scalar("cycles K3"));
  const hikes::CycleCatalog cat3(K3());
  CHECK(Rational(static_cast<long>(hikes::enumerate_hikes(cat3, 2).size())) == t.scalar("hike count K3 L=2"));
  CHECK(Rational(static_cast<long>(hikes::enumerate_hikes(cat3, 3).size())) == t.scalar("hike count K3 L=3"));
  CHECK(Rational(static_cast<long>(hikes::enumerate_hikes(hikes::CycleCatalog(P2()), 4).size())) ==
        t.scalar("hike count P2 L=4"));

  check_series(hikes::zeta_series(k3, 10), t.row("zeta K3"));
  check_series(hikes::zeta_series(p2, 10), t.row("zeta P2"));
  check_series(hikes::mobius_series(k3, 10), t.row("mobius K3"));
  const int first[] = {0};
  const std::span<const int> u1(first);
  check_series(hikes::excursion_matrix(k3, u1, 10).entry(0, 0), t.row("excursion K3 u=1"));
  check_series(hikes::excursion_matrix(p2, u1, 10).entry(0, 0), t.row("excursion P2 u=1"));
  check_series(hikes::ru_series(k3, u1, 10), t.row("ru K3 u=1"));
  const int both[] = {0, 1};
  CHECK(hikes::resolvent_block(k3, std::span<const int>(both), 4)[2] == t.matrix("resolvent K3 u=1,2 z^2"));
  check_series(hikes::ru_series(p2, u1, 8).log(), t.row("log ru P2 u=1"));
  check_series(hikes::ru_series(k3, u1, 6).log(), t.row("log ru K3 u=1"));
  check_series(hikes::boolean_cumulants(p2, 0, 10), t.row("boolean P2 1"));
  check_series(hikes::boolean_cumulants(k3, 0, 10), t.row("boolean K3 1"));
  check_series(hikes::von_mangoldt_series(k3, 10), t.row("trace R K3"));
}

}
