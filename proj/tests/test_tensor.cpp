#include <doctest.h>

#include "oracles.hpp"
#include "qsuper/errors.hpp"

using namespace qsuper;

namespace {

const char* kRIds[] = {"R.glq2", "R.glq2_exotic", "R.glq11", "R.glq11_exotic", "R.glq12"};

}  // namespace

TEST_CASE("kronecker product indices") {
  SMatrix a(2, 2), b(2, 2);
  a << Scalar(1), Scalar(2), Scalar(3), Scalar(4);
  b << Scalar(0), Scalar(5), Scalar(6), Scalar(7);
  SMatrix k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(k(i * 2 + x, j * 2 + y) == a(i, j) * b(x, y));
}

TEST_CASE("super permutation squares to one") {
  std::vector<int> par{0, 1, 1};
  SMatrix p = permutation_matrix<Scalar>(3, par);
  CHECK(is_zero(SMatrix(p * p - SMatrix::Identity(9, 9))));
  CHECK(p(1 * 3 + 2, 2 * 3 + 1) == Scalar(-1));
  CHECK(p(0 * 3 + 1, 1 * 3 + 0) == Scalar(1));
}

TEST_CASE("catalog R-matrices satisfy YBE, matching the index-sum oracle") {
  for (const char* id : kRIds) {
    auto d = *catalog_get(id).rmatrix;
    INFO(id);
    CHECK(verify_ybe(d.r, d.parities).passed());
    CHECK(oracle::ybe_by_index_sums(d.r, d.parities));
  }
}

TEST_CASE("single-entry mutations break YBE") {
  for (const char* id : kRIds) {
    auto d = *catalog_get(id).rmatrix;
    for (Eigen::Index i = 0; i < d.r.rows(); ++i)
      for (Eigen::Index j = 0; j < d.r.cols(); ++j) {
        if (d.r(i, j).is_zero()) continue;
        SMatrix m = d.r;
        m(i, j) += Scalar(1);
        auto rep = verify_ybe(m, d.parities);
        INFO(id << " entry " << i << "," << j);
        CHECK(rep.result == Verdict::Fail);
        CHECK(!rep.residuals.empty());
        CHECK(!oracle::ybe_by_index_sums(m, d.parities));
      }
  }
}

TEST_CASE("exact inverse and conjugation") {
  SMatrix d = cartesian_d();
  auto inv = exact_inverse(d);
  REQUIRE(inv);
  CHECK(is_zero(SMatrix(d * *inv - SMatrix::Identity(2, 2))));
  SMatrix sing(2, 2);
  sing << Scalar(1), Scalar(2), Scalar(2), Scalar(4);
  CHECK(!exact_inverse(sing));

  auto r = catalog_get("R.glq2").rmatrix->r;
  SMatrix c = conjugate_R(r, d);
  SMatrix dd = kron(d, d);
  CHECK(is_zero(SMatrix(dd * c - r * dd)));
  CHECK(verify_ybe(c).passed());
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(tensor_base_dim(SMatrix(3, 3)), Error);
  CHECK_THROWS_AS(tensor_base_dim(SMatrix(2, 4)), Error);
  CHECK(tensor_base_dim(SMatrix(9, 9)) == 3);
}
