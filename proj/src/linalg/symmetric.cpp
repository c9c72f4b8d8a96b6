#include "jointspec/linalg/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace jointspec::linalg {

SymmetricMatrix::SymmetricMatrix(const MatrixD& m, double tol) : m_(m) {
  if (!m.square()) throw std::invalid_argument("symmetric matrix must be square");
  if (m.rows() == 0) throw std::invalid_argument("symmetric matrix must have dimension >= 1");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j))) throw std::invalid_argument("matrix entries must be finite");
      if (std::fabs(m(i, j) - m(j, i)) > tol)
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (m_(i, j) + m_(j, i));
      m_(i, j) = m_(j, i) = avg;
    }
  for (double x : m_.data())
    if (!is_integer_value(x)) {
      integral_ = false;
      break;
    }
}

double EigenSystem::class_value(int c) const {
  const auto& members = classes.at(static_cast<std::size_t>(c));
  double s = 0.0;
  for (int i : members) s += eigenvalues[static_cast<std::size_t>(i)];
  return s / static_cast<double>(members.size());
}

std::vector<std::vector<int>> eigenvalue_classes(const std::vector<double>& sorted, double scale, double tol) {
  std::vector<std::vector<int>> classes;
  const double eps = tol * std::max(1.0, scale);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > eps) classes.emplace_back();
    classes.back().push_back(static_cast<int>(i));
  }
  return classes;
}

namespace {

void assign_classes(EigenSystem& eig, double scale, double tol) {
  eig.classes = eigenvalue_classes(eig.eigenvalues, scale, tol);
  eig.class_of.assign(eig.eigenvalues.size(), 0);
  for (std::size_t c = 0; c < eig.classes.size(); ++c)
    for (int i : eig.classes[c]) eig.class_of[static_cast<std::size_t>(i)] = static_cast<int>(c);
}

double off_diagonal_norm2(const MatrixD& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += m(i, j) * m(i, j);
  return s;
}

}  // namespace

EigenSystem eigendecompose(const SymmetricMatrix& a, const EigenConfig& cfg) {
  const std::size_t n = a.size();
  MatrixD m = a.dense();
  MatrixD v = MatrixD::identity(n);
  const double fro2 = std::max(a.frobenius() * a.frobenius(), 1e-300);

  int sweep = 0;
  while (off_diagonal_norm2(m) > 1e-28 * fro2) {
    if (sweep++ >= cfg.max_sweeps)
      throw ConvergenceError("Jacobi diagonalization did not converge within " + std::to_string(cfg.max_sweeps) +
                             " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return m(x, x) < m(y, y); });

  EigenSystem eig;
  eig.eigenvalues.resize(n);
  eig.basis = MatrixD(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto src = static_cast<std::size_t>(order[j]);
    eig.eigenvalues[j] = m(src, src);
    for (std::size_t i = 0; i < n; ++i) eig.basis(i, j) = v(i, src);
  }
  if (determinant(eig.basis) < 0.0)
    for (std::size_t i = 0; i < n; ++i) eig.basis(i, 0) = -eig.basis(i, 0);

  assign_classes(eig, a.frobenius(), cfg.class_tolerance);
  return eig;
}

EigenSystem with_basis(const EigenSystem& eig, MatrixD basis) {
  if (basis.rows() != eig.size() || basis.cols() != eig.size()) throw std::invalid_argument("basis dimension mismatch");
  EigenSystem out = eig;
  out.basis = std::move(basis);
  return out;
}

std::vector<int> complement(std::span<const int> u, std::size_t n) {
  std::vector<bool> in(n, false);
  for (int i : u) {
    if (i < 0 || static_cast<std::size_t>(i) >= n) throw std::out_of_range("vertex index out of range");
    in[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) rest.push_back(static_cast<int>(i));
  return rest;
}

MatrixD schur_block(const MatrixD& a, std::span<const int> u, double z) {
  const std::size_t n = a.rows();
  if (u.empty() || u.size() >= n) throw std::domain_error("schur_block requires a proper nonempty subset");
  const std::vector<int> rest = complement(u, n);
  const MatrixD a_uu = principal_submatrix(a, u);
  const MatrixD a_ur = submatrix(a, u, std::span<const int>(rest));
  const MatrixD a_ru = submatrix(a, std::span<const int>(rest), u);
  const MatrixD a_rr = principal_submatrix(a, std::span<const int>(rest));

  MatrixD inner = MatrixD::identity(rest.size()) - z * a_rr;
  const MatrixD inner_inv = inverse(inner, "inner block I - z A_(complement,complement)");
  MatrixD outer = MatrixD::identity(u.size()) - z * a_uu - (z * z) * (a_ur * inner_inv * a_ru);
  return inverse(outer, "outer Schur complement I - z A_uu - z^2 A_u,c (I - z A_c,c)^-1 A_c,u");
}

}  // namespace jointspec::linalg
