#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

#include "qsuper/report.hpp"
#include "qsuper/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<qsuper::Scalar> : GenericNumTraits<qsuper::Scalar> {
  using Real = qsuper::Scalar;
  using NonInteger = qsuper::Scalar;
  using Nested = qsuper::Scalar;
  using Literal = qsuper::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace qsuper {

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense matrix over the coefficient superring.
using SMatrix = MatrixX<Scalar>;

/// Parity vector of a graded basis; empty means all even.
using Parities = std::vector<int>;

/// Flat tensor index: pair (i, k) of an n-dimensional factor maps to i*n + k.
struct TensorIndex {
  int n;
  int flat(int i, int k) const { return i * n + k; }
  std::pair<int, int> pair(int flat) const { return {flat / n, flat % n}; }
};

/// Kronecker product a (x) b, rows ordered by TensorIndex.
template <typename DerivedA, typename DerivedB>
MatrixX<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedA::Scalar;
  MatrixX<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// (Super)permutation on C^n (x) C^n: entry at ((i,k),(k,i)) is
/// (-1)^{p_i p_k}; plain swap when `parities` is empty or all even.
template <typename S>
MatrixX<S> permutation_matrix(int n, std::span<const int> parities = {}) {
  MatrixX<S> p = MatrixX<S>::Zero(n * n, n * n);
  TensorIndex idx{n};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      bool odd = !parities.empty() && parities[i] % 2 && parities[k] % 2;
      p(idx.flat(i, k), idx.flat(k, i)) = odd ? S(-1) : S(1);
    }
  return p;
}

/// Base dimension n of an n^2 x n^2 matrix; NonSquareTensorDim otherwise.
int tensor_base_dim(const SMatrix& r);

/// R-hat = P R with the (super)permutation for `parities`.
SMatrix rhat(const SMatrix& r, std::span<const int> parities = {});

/// Checks R12 R13 R23 = R23 R13 R12 exactly, R13 = (P (x) I) R23 (P (x) I).
/// With a non-even parity vector P is the super-permutation (graded YBE).
CheckReport verify_ybe(const SMatrix& r, std::span<const int> parities = {});

/// Exact inverse via Gauss-Jordan with unit pivots; nullopt if no unit pivot.
std::optional<SMatrix> exact_inverse(const SMatrix& m);

/// (d (x) d)^-1 r (d (x) d).
SMatrix conjugate_R(const SMatrix& r, const SMatrix& d);

bool is_zero(const SMatrix& m);

}  // namespace qsuper
