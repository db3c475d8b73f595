#pragma once

#include <map>
#include <string>

#include "qsuper/polynomial.hpp"

namespace qsuper {

/// Element of Frac(Q(i)[even free parameters]) in canonical form: coprime
/// numerator/denominator, denominator with name-graded leading coefficient 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const GaussRational& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_ == Poly(1) && num_ == Poly(1); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }
  /// v-adic valuation; requires a nonzero value.
  int valuation(Var v) const;
  /// Value at v = 0; requires valuation(v) >= 0.
  RatFunc at_zero(Var v) const;
  GaussRational evaluate(const std::map<Var, GaussRational>& point) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace qsuper
