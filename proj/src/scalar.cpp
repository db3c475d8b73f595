#include "qsuper/scalar.hpp"

#include <algorithm>
#include <set>

#include "qsuper/errors.hpp"

namespace qsuper {

// ---- ParameterSet ----------------------------------------------------------

void ParameterSet::add(Var v) {
  for (Var w : vars_) {
    if (w == v) return;
    if (w.name() == v.name())
      throw Error(ErrorKind::InvalidArgument, "parameter '" + v.name() + "' declared twice");
  }
  if (v.name() == "i")
    throw Error(ErrorKind::InvalidArgument, "'i' is reserved for the imaginary unit");
  vars_.push_back(v);
}

ParameterSet& ParameterSet::even(std::string_view name) {
  add(Var::intern(name, ParamKind::EvenFree));
  return *this;
}

ParameterSet& ParameterSet::nilpotent(std::string_view name, int order) {
  add(Var::intern(name, ParamKind::EvenNilpotent, order));
  return *this;
}

ParameterSet& ParameterSet::odd(std::string_view name) {
  add(Var::intern(name, ParamKind::Odd));
  return *this;
}

std::optional<Var> ParameterSet::find(std::string_view name) const {
  for (Var v : vars_)
    if (v.name() == name) return v;
  return std::nullopt;
}

ParameterSet ParameterSet::merged(const ParameterSet& o) const {
  ParameterSet r = *this;
  for (Var v : o.vars_) r.add(v);
  return r;
}

// ---- Scalar ----------------------------------------------------------------

namespace {

bool odd_less(Var a, Var b) { return name_less(a, b); }

/// Product of two keys; returns sign (0 when the product vanishes).
int multiply_keys(const ScalarKey& a, const ScalarKey& b, ScalarKey& out) {
  out.odd.clear();
  out.nil.clear();
  int swaps = 0;
  std::size_t i = 0, j = 0;
  while (i < a.odd.size() || j < b.odd.size()) {
    if (j == b.odd.size() || (i < a.odd.size() && odd_less(a.odd[i], b.odd[j]))) {
      out.odd.push_back(a.odd[i++]);
    } else if (i == a.odd.size() || odd_less(b.odd[j], a.odd[i])) {
      // b.odd[j] moves past the remaining odd factors of a.
      swaps += static_cast<int>(a.odd.size() - i);
      out.odd.push_back(b.odd[j++]);
    } else {
      return 0;
    }
  }
  i = j = 0;
  while (i < a.nil.size() || j < b.nil.size()) {
    if (j == b.nil.size() || (i < a.nil.size() && a.nil[i].first < b.nil[j].first)) {
      out.nil.push_back(a.nil[i++]);
    } else if (i == a.nil.size() || b.nil[j].first < a.nil[i].first) {
      out.nil.push_back(b.nil[j++]);
    } else {
      int e = a.nil[i].second + b.nil[j].second;
      if (e >= a.nil[i].first.order()) return 0;
      out.nil.emplace_back(a.nil[i].first, e);
      ++i;
      ++j;
    }
  }
  return swaps % 2 ? -1 : 1;
}

}  // namespace

Scalar::Scalar(const RatFunc& r) {
  if (!r.is_zero()) terms_.emplace(ScalarKey{}, r);
}

Scalar Scalar::param(Var v) {
  Scalar s;
  switch (v.kind()) {
    case ParamKind::EvenFree:
      return Scalar(RatFunc(Poly::var(v)));
    case ParamKind::EvenNilpotent:
      s.terms_.emplace(ScalarKey{{}, {{v, 1}}}, RatFunc(1));
      return s;
    case ParamKind::Odd:
      s.terms_.emplace(ScalarKey{{v}, {}}, RatFunc(1));
      return s;
  }
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_body() && terms_.begin()->second.is_one();
}

RatFunc Scalar::body() const {
  auto it = terms_.find(ScalarKey{});
  return it == terms_.end() ? RatFunc() : it->second;
}

std::optional<int> Scalar::parity() const {
  std::optional<int> p;
  for (const auto& [k, c] : terms_) {
    if (!p) p = k.parity();
    else if (*p != k.parity()) return std::nullopt;
  }
  return p.value_or(0);
}

Scalar Scalar::twisted() const {
  Scalar r = *this;
  for (auto& [k, c] : r.terms_)
    if (k.parity()) c = -c;
  return r;
}

Scalar Scalar::even_part() const {
  Scalar r;
  for (const auto& [k, c] : terms_)
    if (!k.parity()) r.terms_.emplace(k, c);
  return r;
}

Scalar Scalar::odd_part() const {
  Scalar r;
  for (const auto& [k, c] : terms_)
    if (k.parity()) r.terms_.emplace(k, c);
  return r;
}

void Scalar::add_term(const ScalarKey& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_.begin()->first.is_body() &&
      b.terms_.begin()->first.is_body()) {
    RatFunc c = a.terms_.begin()->second * b.terms_.begin()->second;
    return Scalar(c);
  }
  ScalarKey k;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int sign = multiply_keys(ka, kb, k);
      if (sign == 0) continue;
      RatFunc c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(k, c);
    }
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Scalar Scalar::inverse() const {
  RatFunc b = body();
  if (b.is_zero())
    throw Error(ErrorKind::DivisionByNonUnit, "divisor has zero body: " + to_string());
  Scalar binv(b.inverse());
  if (terms_.size() == 1) return binv;
  Scalar nil = *this - Scalar(b);
  Scalar t = -(nil * binv);
  Scalar sum(1), power(1);
  for (int k = 0; k < 256; ++k) {
    power = power * t;
    if (power.is_zero()) return binv * sum;
    sum += power;
  }
  throw Error(ErrorKind::DivisionByNonUnit, "nilpotent part did not vanish");
}

std::vector<Var> Scalar::vars() const {
  std::set<Var> s;
  for (const auto& [k, c] : terms_) {
    for (Var v : k.odd) s.insert(v);
    for (const auto& [v, e] : k.nil) s.insert(v);
    for (Var v : c.num().vars()) s.insert(v);
    for (Var v : c.den().vars()) s.insert(v);
  }
  return {s.begin(), s.end()};
}

bool Scalar::contains(Var v) const {
  auto vs = vars();
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

namespace {

void check_image_parity(Var v, const Scalar& image) {
  auto p = image.parity();
  int want = v.kind() == ParamKind::Odd ? 1 : 0;
  if (!p || *p != want)
    throw Error(ErrorKind::ParityViolation,
                "image of " + v.name() + " has wrong parity: " + image.to_string());
}

Scalar image_of(Var v, const std::map<Var, Scalar>& images) {
  auto it = images.find(v);
  return it == images.end() ? Scalar::param(v) : it->second;
}

Scalar eval_poly(const Poly& p, const std::map<Var, Scalar>& images) {
  Scalar total;
  std::map<std::pair<Var, int>, Scalar> powers;
  for (const auto& [m, c] : p.terms()) {
    Scalar t(c);
    for (const auto& [v, e] : m.factors()) {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, image_of(v, images).pow(e)).first;
      t = t * it->second;
    }
    total += t;
  }
  return total;
}

}  // namespace

Scalar Scalar::substitute(const std::map<Var, Scalar>& images) const {
  if (images.empty()) return *this;
  for (const auto& [v, img] : images) check_image_parity(v, img);
  Scalar r;
  for (const auto& [k, c] : terms_) {
    bool touches = false;
    for (Var v : k.odd) touches |= images.count(v) > 0;
    for (const auto& [v, e] : k.nil) touches |= images.count(v) > 0;
    for (const auto& [v, img] : images) touches |= c.contains(v);
    if (!touches) {
      r.add_term(k, c);
      continue;
    }
    Scalar value;
    bool rf_touched = false;
    for (const auto& [v, img] : images) rf_touched |= c.contains(v);
    if (rf_touched) {
      Scalar den = eval_poly(c.den(), images);
      if (!den.is_unit())
        throw Error(ErrorKind::DivisionByNonUnit,
                    "denominator " + c.den().to_string() + " is not a unit after substitution");
      value = eval_poly(c.num(), images) * den.inverse();
    } else {
      value = Scalar(c);
    }
    for (Var v : k.odd) value = value * image_of(v, images);
    for (const auto& [v, e] : k.nil) value = value * image_of(v, images).pow(e);
    r += value;
  }
  return r;
}

std::optional<int> Scalar::valuation(Var p) const {
  if (p.kind() != ParamKind::EvenFree)
    throw Error(ErrorKind::IndeterminateValuation, p.name() + " is not an even free parameter");
  std::optional<int> v;
  for (const auto& [k, c] : terms_) {
    int x = c.valuation(p);
    v = v ? std::min(*v, x) : x;
  }
  return v;
}

Scalar Scalar::limit_at_zero(Var p) const {
  auto v = valuation(p);
  if (v && *v < 0)
    throw Error(ErrorKind::NegativeValuation, "limit " + p.name() + "->0 of " + to_string());
  Scalar r;
  for (const auto& [k, c] : terms_) r.add_term(k, c.at_zero(p));
  return r;
}

std::optional<int> Scalar::nil_valuation(Var iota) const {
  std::optional<int> v;
  for (const auto& [k, c] : terms_) {
    int e = 0;
    for (const auto& [w, x] : k.nil)
      if (w == iota) e = x;
    v = v ? std::min(*v, e) : e;
  }
  return v;
}

Scalar Scalar::nil_coefficient(Var iota, int k) const {
  Scalar r;
  for (const auto& [key, c] : terms_) {
    int e = 0;
    ScalarKey rest{key.odd, {}};
    for (const auto& [w, x] : key.nil) {
      if (w == iota) e = x;
      else rest.nil.emplace_back(w, x);
    }
    if (e == k) r.add_term(rest, c);
  }
  return r;
}

GaussRational Scalar::evaluate(const std::map<Var, GaussRational>& point) const {
  GaussRational total;
  for (const auto& [k, c] : terms_) {
    if (!k.is_body())
      throw Error(ErrorKind::InvalidArgument, "cannot evaluate graded/nilpotent scalar");
    total += c.evaluate(point);
  }
  return total;
}

namespace {

std::string term_string(const ScalarKey& k, const RatFunc& c) {
  std::vector<Var> odd = k.odd;  // already name-ordered
  auto nil = k.nil;
  std::sort(nil.begin(), nil.end(), [](auto& a, auto& b) { return name_less(a.first, b.first); });
  std::string factors;
  for (Var v : odd) factors += (factors.empty() ? "" : "*") + v.name();
  for (const auto& [v, e] : nil) {
    factors += (factors.empty() ? "" : "*") + v.name();
    if (e > 1) factors += "^" + std::to_string(e);
  }
  std::string rf = c.to_string();
  if (factors.empty()) return rf;
  if (c.is_one()) return factors;
  if (c == RatFunc(-1)) return "-" + factors;
  if (c.num().is_monomial()) return rf + "*" + factors;
  return "(" + rf + ")*" + factors;
}

}  // namespace

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  // Print order depends on names only, never on interning order.
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [k, c] : terms_) {
    std::string key;
    for (Var v : k.odd) key += v.name() + ",";
    key += "|";
    auto nil = k.nil;
    std::sort(nil.begin(), nil.end(),
              [](auto& a, auto& b) { return name_less(a.first, b.first); });
    for (const auto& [v, e] : nil) key += v.name() + "^" + std::to_string(e) + ",";
    parts.emplace_back(std::to_string(k.odd.size() + nil.size()) + key, term_string(k, c));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [key, t] : parts) {
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out;
}

bool Scalar::needs_parens() const {
  if (terms_.size() > 1) return true;
  if (terms_.empty()) return false;
  const auto& [k, c] = *terms_.begin();
  if (c.num().is_monomial()) {
    // A lone compound Gaussian coefficient prints as "(a+b*i)"; already grouped.
    return false;
  }
  return k.is_body() && c.is_polynomial();
}

Scalar arith(const Scalar& a, const Scalar& b, char op) {
  switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, std::string("unknown operator ") + op);
}

}  // namespace qsuper
