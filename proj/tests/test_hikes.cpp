#include <doctest.h>

#include "jointspec/hikes/generating.hpp"
#include "jointspec/hikes/walks.hpp"
#include "support.hpp"

using namespace jointspec;
using namespace testing;

namespace {
using Series = hikes::TruncatedSeries<Rational>;

Series constant(std::size_t degree, long c) { return Series::constant(degree, Rational(c)); }
}  // namespace

TEST_SUITE("hikes") {

TEST_CASE("simple cycles") {
  linalg::MatrixD loop(1, 1);
  loop(0, 0) = 2.5;
  const auto cycles = hikes::enumerate_simple_cycles(WeightedGraph(linalg::SymmetricMatrix(loop)));
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].length() == 1);
  CHECK(hikes::enumerate_simple_cycles(graphs::complete(4)).size() == 6 + 8 + 6);
  CHECK(hikes::canonical_rotation({3, 1, 2}) == std::vector<int>{1, 2, 3});
}

TEST_CASE("hike enumeration matches the closure reference") {
  for (const auto& g : {P2(), K3(), graphs::cycle(4), graphs::star(3)}) {
    const hikes::CycleCatalog cat(g);
    auto lex = hikes::enumerate_hikes(cat, 6);
    auto ref = hikes::enumerate_hikes_by_closure(cat, 6);
    std::sort(lex.begin(), lex.end());
    CHECK(lex == ref);
    for (const auto& h : lex) CHECK(hikes::is_normal_form(cat, h));
  }
}

TEST_CASE("hike enumeration cap") {
  CHECK_THROWS_WITH(hikes::enumerate_hikes(hikes::CycleCatalog(K3()), 11), doctest::Contains("10"));
}

TEST_CASE("zeta and Mobius of the empty graph") {
  const auto e = graphs::empty(3).matrix<Rational>();
  CHECK(hikes::zeta_series(e, 5)[0] == 1);
  CHECK(hikes::zeta_series(e, 5)[3] == 0);
  CHECK(hikes::mobius_series(e, 5)[0] == 1);
  CHECK(hikes::von_mangoldt_series(e, 4)[0] == 3);
  CHECK(hikes::von_mangoldt_series(e, 4)[2] == 0);
}

TEST_CASE("zeta times Mobius is one and Mobius is the cycle-cover sum") {
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const WeightedGraph g(graphs::random_integer_symmetric(4, -1, 2, rng));
    const auto a = g.matrix<Rational>();
    const auto m = hikes::mobius_series(a, 8);
    CHECK((hikes::zeta_series(a, 8) * m).coefficients() == constant(8, 1).coefficients());
    CHECK(m.coefficients() == hikes::cycle_cover_series(hikes::CycleCatalog(g), a, 8).coefficients());
  }
}

TEST_CASE("excursion matrix first coefficient is A_uu") {
  const auto a = K3().matrix<Rational>();
  const int u[] = {0, 1};
  const auto e = hikes::excursion_matrix(a, std::span<const int>(u), 4);
  CHECK(e[1](0, 1) == 1);
  CHECK(e[0](0, 0) == 0);
  CHECK(hikes::excursion_enumeration(a, std::span<const int>(u), 4).entry(0, 1).coefficients() ==
        e.entry(0, 1).coefficients());
  CHECK_THROWS(hikes::excursion_matrix(a, std::span<const int>(), 4));
}

TEST_CASE("resolvent block has identity constant term and matches powers") {
  const auto a = P2().matrix<Rational>();
  const int u[] = {0};
  const auto r = hikes::resolvent_block(a, std::span<const int>(u), 6);
  CHECK(r[0] == linalg::RationalMatrix::identity(1));
  for (unsigned k = 0; k <= 6; ++k) CHECK(r[k](0, 0) == linalg::matrix_power(a, k)(0, 0));
}

TEST_CASE("r_u for the full vertex set is zeta") {
  const auto a = K3().matrix<Rational>();
  const int all[] = {0, 1, 2};
  CHECK(hikes::ru_series(a, std::span<const int>(all), 8).coefficients() == hikes::zeta_series(a, 8).coefficients());
  CHECK(hikes::ru_by_zeta_ratio(a, std::span<const int>(all), 8).coefficients() ==
        hikes::zeta_series(a, 8).coefficients());
}

TEST_CASE("right divisor filter") {
  const hikes::CycleCatalog cat(K3());
  const auto edge23 = cat.index_of({1, 2});
  REQUIRE(edge23);
  const int w1[] = {*edge23};
  CHECK_FALSE(hikes::right_divisor_filter(cat, hikes::normal_form(cat, w1), hikes::mask_of(std::vector<int>{0})));
  const auto tri = cat.index_of({0, 1, 2});
  REQUIRE(tri);
  const int w2[] = {*tri};
  for (int v = 0; v < 3; ++v) CHECK(hikes::right_divisor_filter(cat, hikes::normal_form(cat, w2), hikes::VertexMask{1} << v));
}

TEST_CASE("von Mangoldt of pyramids") {
  const hikes::CycleCatalog cat(K3());
  const int e12 = *cat.index_of({0, 1}), e23 = *cat.index_of({1, 2});
  const int pyramid[] = {e12, e23};
  const auto h = hikes::normal_form(cat, pyramid);
  CHECK(hikes::pyramid_top(cat, h) == e23);
  CHECK(hikes::von_mangoldt(cat, h) == 2);
  CHECK(hikes::von_mangoldt_u(cat, h, hikes::mask_of(std::vector<int>{0})) == 0);
  CHECK(hikes::von_mangoldt_u(cat, h, hikes::mask_of(std::vector<int>{2})) == 1);
  const hikes::CycleCatalog c4(graphs::cycle(4));
  const int a = *c4.index_of({0, 1}), b = *c4.index_of({2, 3});
  const int two_tops[] = {a, b};
  CHECK(hikes::von_mangoldt(c4, hikes::normal_form(c4, two_tops)) == 0);
}

TEST_CASE("log r_u has zero constant term") {
  const auto a = graphs::cycle(4).matrix<Rational>();
  const int u[] = {0, 2};
  CHECK(hikes::ru_series(a, std::span<const int>(u), 8).log()[0] == 0);
}

TEST_CASE("Boolean cumulants of an isolated vertex vanish") {
  const auto b = hikes::boolean_cumulants(graphs::empty(2).matrix<Rational>(), 0, 6);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(b[k] == 0);
}

TEST_CASE("closed walk visits reproduce log r_i") {
  const auto a = graphs::cycle(5).matrix<Rational>();
  const int u[] = {2};
  CHECK(hikes::closed_walk_visit_series(a, 2, 8).coefficients() ==
        hikes::ru_series(a, std::span<const int>(u), 8).log().coefficients());
}

TEST_CASE("series arithmetic") {
  Series s(4, {Rational(1), Rational(-1)});
  const auto inv = s.inverse();
  for (std::size_t k = 0; k <= 4; ++k) CHECK(inv[k] == 1);
  CHECK_THROWS(Series(3).inverse());
  CHECK_THROWS(Series(3, {Rational(2)}).log());
}

}
