#include "jointspec/hikes/generating.hpp"

namespace jointspec::hikes {

template TruncatedSeries<double> mobius_series(const Matrix<double>&, std::size_t);
template TruncatedSeries<Rational> mobius_series(const Matrix<Rational>&, std::size_t);
template TruncatedSeries<double> zeta_series(const Matrix<double>&, std::size_t);
template TruncatedSeries<Rational> zeta_series(const Matrix<Rational>&, std::size_t);
template TruncatedSeries<Rational> cycle_cover_series(const CycleCatalog&, const Matrix<Rational>&, std::size_t);
template MatrixSeries<double> excursion_matrix(const Matrix<double>&, std::span<const int>, std::size_t,
                                               const double&);
template MatrixSeries<Rational> excursion_matrix(const Matrix<Rational>&, std::span<const int>, std::size_t,
                                                 const Rational&);
template MatrixSeries<Rational> resolvent_block(const Matrix<Rational>&, std::span<const int>, std::size_t);
template TruncatedSeries<Rational> ru_series(const Matrix<Rational>&, std::span<const int>, std::size_t);
template TruncatedSeries<Rational> ru_by_zeta_ratio(const Matrix<Rational>&, std::span<const int>, std::size_t);
template TruncatedSeries<Rational> boolean_cumulants(const Matrix<Rational>&, int, std::size_t);

}  // namespace jointspec::hikes
