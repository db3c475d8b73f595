#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsuper/ratfunc.hpp"

namespace qsuper {

/// Names and classes of the parameters in one coefficient superring.
class ParameterSet {
 public:
  ParameterSet() = default;
  ParameterSet& even(std::string_view name);
  ParameterSet& nilpotent(std::string_view name, int order = 2);
  ParameterSet& odd(std::string_view name);

  std::optional<Var> find(std::string_view name) const;
  const std::vector<Var>& vars() const { return vars_; }
  /// Union; names must not clash with a different class.
  ParameterSet merged(const ParameterSet& o) const;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  void add(Var v);
  std::vector<Var> vars_;
};

/// Grading key of one Scalar term: a product of distinct odd parameters (in
/// canonical name order) times a nilpotent power product.
struct ScalarKey {
  std::vector<Var> odd;
  std::vector<std::pair<Var, int>> nil;

  bool is_body() const { return odd.empty() && nil.empty(); }
  int parity() const { return static_cast<int>(odd.size() % 2); }
  friend auto operator<=>(const ScalarKey&, const ScalarKey&) = default;
};

/// Element of the coefficient superring K = Frac(Q(i)[even free]) (x) truncated
/// nilpotents (x) Grassmann(odd). Immutable-by-value, canonical after every
/// operation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : Scalar(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int c) : Scalar(RatFunc(static_cast<long>(c))) {}  // NOLINT(google-explicit-constructor)
  Scalar(const GaussRational& c) : Scalar(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const RatFunc& r);  // NOLINT(google-explicit-constructor)
  static Scalar param(Var v);
  static Scalar imaginary_unit() { return Scalar(GaussRational::i()); }

  const std::map<ScalarKey, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Part with no odd and no nilpotent factor.
  RatFunc body() const;
  bool is_unit() const { return !body().is_zero(); }
  /// 0 or 1 for homogeneous scalars, nullopt for mixed parity (zero is even).
  std::optional<int> parity() const;
  bool is_even() const { return parity() == 0; }
  /// Grade involution: odd part negated.
  Scalar twisted() const;
  Scalar even_part() const;
  Scalar odd_part() const;

  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this * o.inverse(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const;
  Scalar pow(int e) const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// All parameters occurring in this scalar.
  std::vector<Var> vars() const;
  bool contains(Var v) const;

  /// Simultaneous parameter substitution. Even names need even images, odd
  /// names odd images; denominators must stay units.
  Scalar substitute(const std::map<Var, Scalar>& images) const;
  /// Minimal p-adic valuation over terms (p even free); nullopt for zero.
  std::optional<int> valuation(Var p) const;
  /// p set to 0; NegativeValuation if it diverges.
  Scalar limit_at_zero(Var p) const;
  /// Minimal total nilpotent degree in `iota` over terms; nullopt for zero.
  std::optional<int> nil_valuation(Var iota) const;
  /// Coefficient of iota^k.
  Scalar nil_coefficient(Var iota, int k) const;
  /// Numerical value of a nilpotent-free, odd-free scalar.
  GaussRational evaluate(const std::map<Var, GaussRational>& point) const;

  /// Grammar form, e.g. "h/v", "i*(q-1)/(q+1)".
  std::string to_string() const;
  /// True if to_string() must be parenthesized as a product factor.
  bool needs_parens() const;

 private:
  void add_term(const ScalarKey& k, const RatFunc& c);
  std::map<ScalarKey, RatFunc> terms_;
};

Scalar arith(const Scalar& a, const Scalar& b, char op);

/// Frequently used scalar shorthands.
inline Scalar param(std::string_view name) { return Scalar::param(Var::free(name)); }

}  // namespace qsuper
