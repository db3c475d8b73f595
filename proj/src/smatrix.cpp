#include "qsuper/smatrix.hpp"

#include <cmath>
#include <string>

#include "qsuper/errors.hpp"

namespace qsuper {

int tensor_base_dim(const SMatrix& r) {
  if (r.rows() != r.cols())
    throw Error(ErrorKind::NonSquareTensorDim, "matrix is not square");
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(r.rows()))));
  if (n < 1 || n * n != r.rows())
    throw Error(ErrorKind::NonSquareTensorDim,
                std::to_string(r.rows()) + " is not a square number");
  return n;
}

SMatrix rhat(const SMatrix& r, std::span<const int> parities) {
  int n = tensor_base_dim(r);
  return permutation_matrix<Scalar>(n, parities) * r;
}

CheckReport verify_ybe(const SMatrix& r, std::span<const int> parities) {
  int n = tensor_base_dim(r);
  if (!parities.empty() && static_cast<int>(parities.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "parity vector length differs from base dimension");
  SMatrix id = SMatrix::Identity(n, n);
  SMatrix r12 = kron(r, id);
  SMatrix r23 = kron(id, r);
  SMatrix p1 = kron(permutation_matrix<Scalar>(n, parities), id);
  SMatrix r13 = p1 * r23 * p1;
  SMatrix residual = r12 * r13 * r23 - r23 * r13 * r12;

  CheckReport rep;
  rep.check = "verify-ybe";
  bool graded = false;
  for (int p : parities) graded |= p % 2 != 0;
  rep.note(graded ? "graded YBE (super-permutation in R13)" : "ungraded YBE");
  for (Eigen::Index i = 0; i < residual.rows(); ++i)
    for (Eigen::Index j = 0; j < residual.cols(); ++j)
      if (!residual(i, j).is_zero())
        rep.fail("(" + std::to_string(i) + "," + std::to_string(j) + ")",
                 residual(i, j).to_string());
  return rep;
}

std::optional<SMatrix> exact_inverse(const SMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Eigen::Index n = m.rows();
  SMatrix a = m;
  SMatrix inv = SMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < n; ++row)
      if (a(row, col).is_unit()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return std::nullopt;
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    Scalar f = a(col, col).inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) = f * a(col, j);
      inv(col, j) = f * inv(col, j);
    }
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || a(row, col).is_zero()) continue;
      Scalar g = a(row, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(row, j) -= g * a(col, j);
        inv(row, j) -= g * inv(col, j);
      }
    }
  }
  return inv;
}

SMatrix conjugate_R(const SMatrix& r, const SMatrix& d) {
  int n = tensor_base_dim(r);
  if (d.rows() != n || d.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "transform size does not match R");
  SMatrix dd = kron(d, d);
  auto inv = exact_inverse(dd);
  if (!inv) throw Error(ErrorKind::SingularTransform, "D (x) D is not invertible");
  return *inv * r * dd;
}

bool is_zero(const SMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace qsuper
