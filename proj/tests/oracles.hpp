#pragma once

// Independent reference computations used by the tests.

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qsuper/catalog.hpp"

namespace oracle {

using qsuper::GaussRational;
using qsuper::Scalar;
using qsuper::SMatrix;

inline GaussRational random_rational(std::mt19937& rng, int range = 7) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return GaussRational(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

inline qsuper::Poly random_poly(std::mt19937& rng, const std::vector<qsuper::Var>& vars, int terms,
                                int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  qsuper::Poly p;
  for (int t = 0; t < terms; ++t) {
    qsuper::Monomial m;
    for (auto v : vars)
      if (int k = e(rng)) m = m * qsuper::Monomial::of(v, k);
    p += qsuper::Poly::term(m, random_rational(rng, 3));
  }
  return p;
}

/// (R12 R13 R23 - R23 R13 R12) by explicit index sums; R13 picks up the
/// Koszul sign of moving the middle factor past the third.
inline bool ybe_by_index_sums(const SMatrix& r, const std::vector<int>& par) {
  int n = 0;
  while (n * n < r.rows()) ++n;
  auto p = [&](int a) { return par.empty() ? 0 : par[a]; };
  auto R = [&](int a, int b, int c, int d) { return r(a * n + b, c * n + d); };
  auto r12 = [&](int a, int b, int c, int d, int e, int f) {
    return c == f ? R(a, b, d, e) : Scalar(0);
  };
  auto r23 = [&](int a, int b, int c, int d, int e, int f) {
    return a == d ? R(b, c, e, f) : Scalar(0);
  };
  auto r13 = [&](int a, int b, int c, int d, int e, int f) {
    if (b != e) return Scalar(0);
    int s = (p(b) * p(c) + p(e) * p(f)) % 2;
    Scalar v = R(a, c, d, f);
    return s ? -v : v;
  };
  using F = std::function<Scalar(int, int, int, int, int, int)>;
  auto triple = [&](const F& x, const F& y, const F& z, int a, int b, int c, int d, int e, int f) {
    Scalar sum;
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) {
          Scalar xv = x(a, b, c, g, h, k);
          if (xv.is_zero()) continue;
          for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m)
              for (int o = 0; o < n; ++o) {
                Scalar yv = y(g, h, k, l, m, o);
                if (yv.is_zero()) continue;
                sum += xv * yv * z(l, m, o, d, e, f);
              }
        }
    return sum;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (!(triple(r12, r13, r23, a, b, c, d, e, f) - triple(r23, r13, r12, a, b, c, d, e, f))
                       .is_zero())
                return false;
  return true;
}

/// Number of (super)commutative monomials of each degree: free exponents are
/// unbounded, square-zero exponents are 0 or 1, and a Laurent pair
/// contributes k^n for any integer n with degree |n|.
inline std::vector<long> commutative_dims(const qsuper::ClassicalModel& m, int d_max) {
  std::vector<int> caps;
  for (std::size_t i = 0; i < m.free.size(); ++i) caps.push_back(-1);
  for (std::size_t i = 0; i < m.square_zero.size(); ++i) caps.push_back(1);
  for (std::size_t i = 0; i < m.laurent.size(); ++i) caps.push_back(-2);
  std::vector<long> dims(static_cast<std::size_t>(d_max) + 1, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int deg) {
    if (deg > d_max) return;
    if (i == caps.size()) {
      ++dims[static_cast<std::size_t>(deg)];
      return;
    }
    if (caps[i] == 1) {
      rec(i + 1, deg);
      rec(i + 1, deg + 1);
    } else if (caps[i] == -1) {
      for (int e = 0; deg + e <= d_max; ++e) rec(i + 1, deg + e);
    } else {
      rec(i + 1, deg);
      for (int e = 1; deg + e <= d_max; ++e) {
        rec(i + 1, deg + e);  // k^e
        rec(i + 1, deg + e);  // k^-e
      }
    }
  };
  rec(0, 0);
  return dims;
}

}  // namespace oracle
