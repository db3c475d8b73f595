#include "qsuper/ratfunc.hpp"

#include "qsuper/errors.hpp"

namespace qsuper {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  GaussRational lc = den_.name_leading_coefficient();
  if (!lc.is_one()) {
    GaussRational inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "division by zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly a = *divide_exact(o.den_, g);
  Poly b = *divide_exact(den_, g);
  num_ = num_ * a + o.num_ * b;
  den_ = den_ * a;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = *divide_exact(num_, g1) * *divide_exact(o.num_, g2);
  Poly d = *divide_exact(den_, g2) * *divide_exact(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  GaussRational lc = den_.name_leading_coefficient();
  if (!lc.is_one()) {
    GaussRational inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

int RatFunc::valuation(Var v) const {
  if (num_.is_zero())
    throw Error(ErrorKind::IndeterminateValuation, "valuation of zero");
  return num_.min_degree_in(v) - den_.min_degree_in(v);
}

RatFunc RatFunc::at_zero(Var v) const {
  if (num_.is_zero()) return {};
  int vn = num_.min_degree_in(v), vd = den_.min_degree_in(v);
  if (vn < vd)
    throw Error(ErrorKind::NegativeValuation, "limit " + v.name() + "->0 diverges");
  if (vn > vd) return {};
  return RatFunc(num_.shift_down(v, vn).at_zero(v), den_.shift_down(v, vd).at_zero(v));
}

GaussRational RatFunc::evaluate(const std::map<Var, GaussRational>& point) const {
  GaussRational d = den_.evaluate(point);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "denominator vanishes at point");
  return num_.evaluate(point) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (!num_.is_monomial()) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (!den_.is_monomial() || !den_.leading().second.is_one()) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qsuper
