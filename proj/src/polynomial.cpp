#include "qsuper/polynomial.hpp"

#include <algorithm>
#include <set>

#include "qsuper/errors.hpp"

namespace qsuper {

Monomial Monomial::of(Var v, int exp) {
  Monomial m;
  if (exp > 0) m.f_.emplace_back(v, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

int Monomial::exponent(Var v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
      r.f_.push_back(f_[i++]);
    } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
      r.f_.push_back(o.f_[j++]);
    } else {
      r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& d) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : d.f_) {
    while (i < f_.size() && f_[i].first < v) r.f_.push_back(f_[i++]);
    if (i == f_.size() || f_[i].first != v || f_[i].second < e) return std::nullopt;
    if (f_[i].second > e) r.f_.emplace_back(v, f_[i].second - e);
    ++i;
  }
  while (i < f_.size()) r.f_.push_back(f_[i++]);
  return r;
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& f : f_)
    if (f.first != v) r.f_.push_back(f);
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first == b.f_[j].first) {
      if (a.f_[i].second != b.f_[j].second) return a.f_[i].second < b.f_[j].second;
      ++i;
      ++j;
    } else if (a.f_[i].first < b.f_[j].first) {
      return false;
    } else {
      return true;
    }
  }
  return i == a.f_.size() && j < b.f_.size();
}

bool name_graded_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto sorted = [](const Monomial& m) {
    auto f = m.factors();
    std::sort(f.begin(), f.end(), [](auto& x, auto& y) { return name_less(x.first, y.first); });
    return f;
  };
  auto fa = sorted(a), fb = sorted(b);
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
      ++i;
      ++j;
    } else if (name_less(fa[i].first, fb[j].first)) {
      return false;
    } else {
      return true;
    }
  }
  return i == fa.size() && j < fb.size();
}

Poly::Poly(const GaussRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly Poly::var(Var v) { return term(Monomial::of(v), 1); }

Poly Poly::term(const Monomial& m, const GaussRational& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussRational Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? GaussRational() : it->second;
}

const GaussRational& Poly::name_leading_coefficient() const {
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (name_graded_less(best->first, it->first)) best = it;
  return best->second;
}

std::vector<Var> Poly::vars() const {
  std::set<Var> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) s.insert(v);
  return {s.begin(), s.end()};
}

bool Poly::contains(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) > 0) return true;
  return false;
}

int Poly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int Poly::min_degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    d = d < 0 ? e : std::min(d, e);
  }
  return std::max(d, 0);
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::map<int, Poly> Poly::coefficients_in(Var v) const {
  std::map<int, Poly> out;
  for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.without(v), c);
  return out;
}

void Poly::add_term(const Monomial& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::operator*(const GaussRational& c) const {
  if (c.is_zero()) return {};
  Poly r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

Poly Poly::operator*(const Monomial& mono) const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::at_zero(Var v) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == 0) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::shift_down(Var v, int k) const {
  if (k == 0) return *this;
  Poly r;
  auto d = Monomial::of(v, k);
  for (const auto& [m, c] : terms_) {
    auto q = m.divide(d);
    if (!q) throw Error(ErrorKind::InvalidArgument, "shift_down: term lacks factor");
    r.terms_.emplace(*q, c);
  }
  return r;
}

GaussRational Poly::evaluate(const std::map<Var, GaussRational>& point) const {
  GaussRational total;
  for (const auto& [m, c] : terms_) {
    GaussRational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end())
        throw Error(ErrorKind::UnknownSymbol, "no value for parameter " + v.name());
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    total += t;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, GaussRational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return name_graded_less(b->first, a->first); });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    GaussRational c = t->second;
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    if (negative) c = -c;
    if (!first || negative) out += negative ? "-" : "+";
    first = false;
    auto factors = m.factors();
    std::sort(factors.begin(), factors.end(),
              [](auto& x, auto& y) { return name_less(x.first, y.first); });
    std::string mono;
    for (const auto& [v, e] : factors) {
      if (!mono.empty()) mono += "*";
      mono += v.name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

// Dense univariate helpers; index = exponent.
using Dense = std::vector<GaussRational>;

std::optional<Var> sole_var(const Poly& p) {
  auto vs = p.vars();
  if (vs.size() != 1) return std::nullopt;
  return vs.front();
}

Dense to_dense(const Poly& p, Var x) {
  Dense d(static_cast<std::size_t>(p.degree_in(x)) + 1);
  for (const auto& [m, c] : p.terms()) d[static_cast<std::size_t>(m.exponent(x))] = c;
  return d;
}

Poly from_dense(const Dense& d, Var x) {
  Poly p;
  for (std::size_t e = 0; e < d.size(); ++e)
    if (!d[e].is_zero()) p += Poly::term(e ? Monomial::of(x, static_cast<int>(e)) : Monomial(), d[e]);
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

// a = q*b + r in place: a becomes r, returns q.
Dense dense_divmod(Dense& a, const Dense& b) {
  trim(a);
  const std::size_t m = b.size() - 1;
  Dense q(a.size() > m ? a.size() - m : 0);
  GaussRational inv = b.back().inverse();
  while (a.size() > m) {
    std::size_t k = a.size() - 1 - m;
    GaussRational c = a.back() * inv;
    for (std::size_t j = 0; j <= m; ++j) a[k + j] -= c * b[j];
    a.pop_back();
    q[k] = std::move(c);
    trim(a);
  }
  return q;
}

Poly dense_gcd(const Poly& pa, const Poly& pb, Var x) {
  Dense a = to_dense(pa, x), b = to_dense(pb, x);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    trim(b);
    if (b.empty()) break;
    dense_divmod(a, b);
    std::swap(a, b);
  }
  GaussRational inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return from_dense(a, x);
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "polynomial division by zero");
  if (b.is_constant()) return a * b.leading().second.inverse();
  if (a.is_zero()) return Poly();
  if (auto x = sole_var(b); x && sole_var(a) == x) {
    Dense r = to_dense(a, *x);
    Dense q = dense_divmod(r, to_dense(b, *x));
    if (!r.empty()) return std::nullopt;
    return from_dense(q, *x);
  }
  Poly q;
  Poly r = a;
  const auto& [lm, lc] = b.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    auto qm = rm.divide(lm);
    if (!qm) return std::nullopt;
    GaussRational qc = rc / lc;
    Poly t = Poly::term(*qm, qc);
    q += t;
    r -= b * t;
  }
  return q;
}

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().second.inverse();
}

Poly content_in(const Poly& p, Var x);

Poly primitive_in(const Poly& p, Var x) {
  Poly c = content_in(p, x);
  auto q = divide_exact(p, c);
  return monic(*q);
}

Poly pseudo_remainder(const Poly& a, const Poly& b, Var x) {
  int m = b.degree_in(x);
  auto bc = b.coefficients_in(x);
  Poly lc = bc.at(m);
  Poly r = a;
  while (!r.is_zero() && r.contains(x) && r.degree_in(x) >= m) {
    int d = r.degree_in(x);
    Poly lr = r.coefficients_in(x).at(d);
    r = r * lc - lr * b * Monomial::of(x, d - m);
  }
  return r;
}

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, Var x) {
  Poly g;
  for (const auto& [e, c] : p.coefficients_in(x)) {
    g = gcd_impl(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly(1);
  }
  return g;
}

Poly monomial_gcd(const Poly& mono, const Poly& other) {
  // gcd of a single term with an arbitrary polynomial: the common power product.
  Monomial m = mono.leading().first;
  Poly r(1);
  for (const auto& [v, e] : m.factors()) {
    int k = std::min(e, other.min_degree_in(v));
    if (k > 0) r = r * Monomial::of(v, k);
  }
  return r;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return monic(a);
  if (auto x = sole_var(a); x && sole_var(b) == x) return dense_gcd(a, b, *x);

  auto va = a.vars(), vb = b.vars();
  Var x = std::min(va.front(), vb.front());
  bool in_a = a.contains(x), in_b = b.contains(x);
  if (!in_a) return gcd_impl(a, content_in(b, x));
  if (!in_b) return gcd_impl(content_in(a, x), b);

  Poly ca = content_in(a, x), cb = content_in(b, x);
  Poly g = gcd_impl(ca, cb);
  Poly A = monic(*divide_exact(a, ca));
  Poly B = monic(*divide_exact(b, cb));
  if (A.degree_in(x) < B.degree_in(x)) std::swap(A, B);
  while (true) {
    Poly r = pseudo_remainder(A, B, x);
    if (r.is_zero()) break;
    if (!r.contains(x)) {
      B = Poly(1);
      break;
    }
    A = std::move(B);
    B = primitive_in(r, x);
  }
  return monic(g * B);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b); }

}  // namespace qsuper
