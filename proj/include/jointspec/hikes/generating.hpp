#pragma once

#include <functional>
#include <vector>

#include "jointspec/hikes/heaps.hpp"
#include "jointspec/hikes/series.hpp"
#include "jointspec/linalg/symmetric.hpp"

namespace jointspec::hikes {

/// M(z) = det(I - zA), read off the characteristic polynomial.
template <class T>
TruncatedSeries<T> mobius_series(const Matrix<T>& a, std::size_t degree) {
  const std::vector<T> charpoly = linalg::characteristic_polynomial(a);  // det(xI - A), ascending in x
  const std::size_t n = a.rows();
  TruncatedSeries<T> m(degree);
  for (std::size_t k = 0; k <= n && k <= degree; ++k) m[k] = charpoly[n - k];
  return m;
}

/// zeta(z) = 1 / det(I - zA).
template <class T>
TruncatedSeries<T> zeta_series(const Matrix<T>& a, std::size_t degree) {
  return mobius_series(a, degree).inverse();
}

/// sum over sets of pairwise vertex-disjoint simple cycles of prod(-w(c) z^{l(c)}).
template <class T>
TruncatedSeries<T> cycle_cover_series(const CycleCatalog& catalog, const Matrix<T>& a, std::size_t degree) {
  const std::vector<T> w = catalog.weights(a);
  TruncatedSeries<T> s(degree);
  std::function<void(std::size_t, VertexMask, std::size_t, const T&)> rec = [&](std::size_t from, VertexMask used,
                                                                                std::size_t len, const T& acc) {
    s[len] += acc;
    for (std::size_t c = from; c < catalog.size(); ++c) {
      if (catalog[c].mask & used) continue;
      if (len + catalog[c].length() > degree) continue;
      T next = acc * w[c];
      next = -next;
      rec(c + 1, used | catalog[c].mask, len + catalog[c].length(), next);
    }
  };
  rec(0, 0, 0, T(1));
  return s;
}

/// sum_k A^k z^k.
template <class T>
MatrixSeries<T> resolvent_series(const Matrix<T>& a, std::size_t degree) {
  MatrixSeries<T> r(a.rows(), a.cols(), degree);
  r[0] = Matrix<T>::identity(a.rows());
  for (std::size_t k = 1; k <= degree; ++k) r[k] = r[k - 1] * a;
  return r;
}

/// (u,u) block of each coefficient of a matrix series.
template <class T>
MatrixSeries<T> block(const MatrixSeries<T>& s, std::span<const int> u) {
  MatrixSeries<T> b(u.size(), u.size(), s.degree());
  for (std::size_t k = 0; k <= s.degree(); ++k) b[k] = linalg::principal_submatrix(s[k], u);
  return b;
}

/// E_u(z) = z A_uu + z^2 A_{u,c} (I - z A_{c,c})^{-1} A_{c,u}, with c the complement of u.
/// `multiplier` scales the excursion term (n for an n-fold star product).
template <class T>
MatrixSeries<T> excursion_matrix(const Matrix<T>& a, std::span<const int> u, std::size_t degree,
                                 const T& multiplier = T(1)) {
  if (u.empty()) throw std::domain_error("excursions need a nonempty vertex subset");
  const std::vector<int> rest = linalg::complement(u, a.rows());
  MatrixSeries<T> e(u.size(), u.size(), degree);
  if (degree >= 1) e[1] = linalg::principal_submatrix(a, u);
  if (rest.empty()) return e;
  const Matrix<T> a_ur = linalg::submatrix(a, u, std::span<const int>(rest));
  const Matrix<T> a_ru = linalg::submatrix(a, std::span<const int>(rest), u);
  const Matrix<T> a_rr = linalg::principal_submatrix(a, std::span<const int>(rest));
  Matrix<T> inner_power = Matrix<T>::identity(rest.size());
  for (std::size_t k = 2; k <= degree; ++k) {
    e[k] = (a_ur * inner_power * a_ru) * multiplier;
    inner_power = inner_power * a_rr;
  }
  return e;
}

/// (I - E_u(z))^{-1}.
template <class T>
MatrixSeries<T> resolvent_block(const Matrix<T>& a, std::span<const int> u, std::size_t degree) {
  return (MatrixSeries<T>::identity(u.size(), degree) - excursion_matrix(a, u, degree)).inverse();
}

/// r_u(z) = det (I - E_u(z))^{-1}.
template <class T>
TruncatedSeries<T> ru_series(const Matrix<T>& a, std::span<const int> u, std::size_t degree) {
  return resolvent_block(a, u, degree).determinant();
}

/// zeta(z) / zeta_c(z) = det(I - z A_cc) / det(I - zA), c the complement of u.
template <class T>
TruncatedSeries<T> ru_by_zeta_ratio(const Matrix<T>& a, std::span<const int> u, std::size_t degree) {
  const std::vector<int> rest = linalg::complement(u, a.rows());
  TruncatedSeries<T> complement_mobius = TruncatedSeries<T>::constant(degree, T(1));
  if (!rest.empty()) complement_mobius = mobius_series(linalg::principal_submatrix(a, std::span<const int>(rest)), degree);
  return zeta_series(a, degree) * complement_mobius;
}

/// Hike zeta function of the induced subgraph on u: 1 / det(I - z A_uu).
template <class T>
TruncatedSeries<T> induced_zeta(const Matrix<T>& a, std::span<const int> u, std::size_t degree) {
  return zeta_series(linalg::principal_submatrix(a, u), degree);
}

/// tr R(z).
template <class T>
TruncatedSeries<T> von_mangoldt_series(const Matrix<T>& a, std::size_t degree) {
  return resolvent_series(a, degree).trace();
}

/// tr R_u(z).
template <class T>
TruncatedSeries<T> von_mangoldt_u_series(const Matrix<T>& a, std::span<const int> u, std::size_t degree) {
  return resolvent_block(a, u, degree).trace();
}

/// B(z) = 1 - 1/M(z) with M(z) = sum_k (A^k)_ii z^k.
template <class T>
TruncatedSeries<T> boolean_cumulants(const Matrix<T>& a, int i, std::size_t degree) {
  const auto ui = static_cast<std::size_t>(i);
  TruncatedSeries<T> m(degree);
  std::vector<T> v(a.rows(), T(0));
  v[ui] = T(1);
  for (std::size_t k = 0; k <= degree; ++k) {
    m[k] = v[ui];
    v = linalg::multiply(a, std::span<const T>(v));
  }
  return TruncatedSeries<T>::constant(degree, T(1)) - m.inverse();
}

/// Totals by length over enumerated hikes: sum of weight(h) * value(h).
template <class T, class Fn>
TruncatedSeries<T> hike_totals(const std::vector<Hike>& hikes, const std::vector<T>& cycle_weights, std::size_t degree,
                               Fn&& value) {
  TruncatedSeries<T> s(degree);
  for (const Hike& h : hikes) {
    if (h.length > degree) continue;
    const T v = value(h);
    if (is_zero(v)) continue;
    s[h.length] += hike_weight(cycle_weights, h) * v;
  }
  return s;
}

}  // namespace jointspec::hikes
