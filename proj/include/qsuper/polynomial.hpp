#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsuper/gauss_rational.hpp"
#include "qsuper/symbols.hpp"

namespace qsuper {

/// Power product of even free parameters, sorted by Var.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, int exp = 1);

  const std::vector<std::pair<Var, int>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int degree() const;
  int exponent(Var v) const;

  Monomial operator*(const Monomial& o) const;
  /// Quotient if `d` divides this monomial.
  std::optional<Monomial> divide(const Monomial& d) const;
  Monomial without(Var v) const;

  /// Lex order with smaller Var ids dominating; a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

 private:
  std::vector<std::pair<Var, int>> f_;
};

/// Graded order by parameter names, used for canonical normalization.
bool name_graded_less(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over Q(i).
class Poly {
 public:
  using Terms = std::map<Monomial, GaussRational>;

  Poly() = default;
  Poly(const GaussRational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(Var v);
  static Poly term(const Monomial& m, const GaussRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  GaussRational constant_term() const;
  /// Leading term under the internal lex order.
  const std::pair<const Monomial, GaussRational>& leading() const { return *terms_.rbegin(); }
  /// Leading coefficient under `name_graded_less`.
  const GaussRational& name_leading_coefficient() const;

  std::vector<Var> vars() const;
  bool contains(Var v) const;
  int degree_in(Var v) const;
  int min_degree_in(Var v) const;
  int total_degree() const;
  /// View as a univariate polynomial in v: exponent -> coefficient.
  std::map<int, Poly> coefficients_in(Var v) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Poly& o) const;
  Poly operator*(const GaussRational& c) const;
  Poly operator*(const Monomial& m) const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  Poly pow(int e) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Set v to zero.
  Poly at_zero(Var v) const;
  /// Divide out v^k (requires every term to carry v^k).
  Poly shift_down(Var v, int k) const;
  GaussRational evaluate(const std::map<Var, GaussRational>& point) const;

  /// Grammar form with name-ordered terms, e.g. "q^2-2*q*v+1".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const GaussRational& c);
  Terms terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized to be monic under the internal order
/// (and exactly 1 for coprime inputs).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qsuper
