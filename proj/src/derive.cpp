#include "qsuper/derive.hpp"

#include "qsuper/errors.hpp"

namespace qsuper {

const char* to_string(SignConvention c) {
  switch (c) {
    case SignConvention::Ungraded: return "ungraded";
    case SignConvention::Graded: return "graded";
    case SignConvention::GradedT1: return "graded-t1";
    case SignConvention::GradedBoth: return "graded-both";
  }
  return "?";
}

SignConvention parse_convention(const std::string& s) {
  for (auto c : all_conventions())
    if (s == to_string(c)) return c;
  throw Error(ErrorKind::InvalidArgument, "unknown sign convention '" + s + "'");
}

const std::vector<SignConvention>& all_conventions() {
  static const std::vector<SignConvention> v{SignConvention::Ungraded, SignConvention::Graded,
                                             SignConvention::GradedT1,
                                             SignConvention::GradedBoth};
  return v;
}

int GeneratorMatrix::parity(int i, int j) const {
  if (row_parities.empty()) return 0;
  return (row_parities[i] + row_parities[j]) % 2;
}

AlphabetPtr GeneratorMatrix::alphabet() const {
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gens.push_back({name(i, j), parity(i, j)});
  return make_alphabet(gens);
}

GeneratorMatrix make_generator_matrix(std::vector<std::string> names, Parities row_parities) {
  GeneratorMatrix t;
  int n = 0;
  while (static_cast<std::size_t>(n * n) < names.size()) ++n;
  if (static_cast<std::size_t>(n * n) != names.size() || n == 0)
    throw Error(ErrorKind::DimensionMismatch, "generator matrix needs n^2 names");
  if (!row_parities.empty() && static_cast<int>(row_parities.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "parity vector length differs from n");
  t.n = n;
  t.names = std::move(names);
  t.row_parities = std::move(row_parities);
  return t;
}

namespace {

Parities checked_parities(const Parities& p, int n) {
  if (p.empty()) return Parities(n, 0);
  if (static_cast<int>(p.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "parity vector length " + std::to_string(p.size()) +
                                                  " for dimension " + std::to_string(n));
  return p;
}

}  // namespace

Presentation space_relations(const SMatrix& r, const Parities& parities, const Scalar& q,
                             SignConvention conv, const std::vector<std::string>& names,
                             const ParameterSet& params, std::vector<std::string> precedence,
                             std::string name) {
  int n = tensor_base_dim(r);
  Parities par = checked_parities(parities, n);
  if (static_cast<int>(names.size()) != n)
    throw Error(ErrorKind::DimensionMismatch, "need one coordinate name per dimension");
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i) gens.push_back({names[i], par[i]});
  auto alpha = make_alphabet(gens);

  Parities used = conv == SignConvention::Ungraded ? Parities{} : par;
  SMatrix m = rhat(r, used) - q * SMatrix::Identity(n * n, n * n);
  TensorIndex idx{n};
  std::vector<Element> rels;
  for (int row = 0; row < n * n; ++row) {
    Element e(alpha);
    for (int col = 0; col < n * n; ++col) {
      if (m(row, col).is_zero()) continue;
      auto [i, k] = idx.pair(col);
      e.add_term(Word{static_cast<Letter>(i), static_cast<Letter>(k)}, m(row, col));
    }
    if (!e.is_zero()) rels.push_back(e);
  }
  auto p = make_presentation(std::move(name), params, alpha, std::move(precedence), rels);
  return interreduced(p);
}

Presentation group_relations(const SMatrix& r, const GeneratorMatrix& t, SignConvention conv,
                             const ParameterSet& params, std::vector<std::string> precedence,
                             std::string name) {
  int n = tensor_base_dim(r);
  if (n != t.n) throw Error(ErrorKind::DimensionMismatch, "R-matrix and generator matrix sizes differ");
  Parities par = checked_parities(t.row_parities, n);
  auto alpha = t.alphabet();
  bool s1 = conv == SignConvention::GradedT1 || conv == SignConvention::GradedBoth;
  bool s2 = conv == SignConvention::Graded || conv == SignConvention::GradedBoth;

  const int N = n * n;
  TensorIndex idx{n};
  auto gen = [&](int i, int j) { return Element::generator(alpha, static_cast<std::size_t>(i * n + j)); };
  // T1[(i,k),(j,l)] = delta_kl t_ij, T2[(i,k),(j,l)] = delta_ij t_kl, with signs.
  auto t1 = [&](int I, int J) -> std::optional<Element> {
    auto [i, k] = idx.pair(I);
    auto [j, l] = idx.pair(J);
    if (k != l) return std::nullopt;
    bool neg = s1 && (par[k] * (par[i] + par[j])) % 2;
    return neg ? -gen(i, j) : gen(i, j);
  };
  auto t2 = [&](int I, int J) -> std::optional<Element> {
    auto [i, k] = idx.pair(I);
    auto [j, l] = idx.pair(J);
    if (i != j) return std::nullopt;
    bool neg = s2 && (par[i] * (par[k] + par[l])) % 2;
    return neg ? -gen(k, l) : gen(k, l);
  };
  auto product = [&](auto&& a, auto&& b) {
    std::vector<Element> out(N * N, Element(alpha));
    for (int I = 0; I < N; ++I)
      for (int J = 0; J < N; ++J)
        for (int K = 0; K < N; ++K) {
          auto x = a(I, K);
          if (!x) continue;
          auto y = b(K, J);
          if (!y) continue;
          out[I * N + J] += *x * *y;
        }
    return out;
  };
  auto t12 = product(t1, t2);
  auto t21 = product(t2, t1);
  std::vector<Element> rels;
  for (int I = 0; I < N; ++I)
    for (int J = 0; J < N; ++J) {
      Element e(alpha);
      for (int K = 0; K < N; ++K) {
        if (!r(I, K).is_zero()) e += r(I, K) * t12[K * N + J];
        if (!r(K, J).is_zero()) e -= r(K, J) * t21[I * N + K];
      }
      if (!e.is_zero()) rels.push_back(e);
    }
  auto p = make_presentation(std::move(name), params, alpha, std::move(precedence), rels);
  return interreduced(p);
}

CheckReport convention_scan(const SMatrix& r, const GeneratorMatrix& t, const Presentation& target) {
  CheckReport rep;
  rep.check = "convention-scan";
  rep.objects = {target.name};
  std::vector<CheckReport::Residual> misses;
  bool any = false;
  for (auto conv : all_conventions()) {
    auto g = group_relations(r, t, conv, target.params, target.precedence,
                             std::string("rtt-") + to_string(conv));
    CheckReport c;
    try {
      c = ideals_equal_upto_degree(target, g, 2);
    } catch (const Error& e) {
      c.fail("comparison", e.what());
    }
    if (c.passed()) {
      any = true;
      rep.note(std::string(to_string(conv)) + ": match");
    } else {
      rep.note(std::string(to_string(conv)) + ": mismatch (" + std::to_string(c.residuals.size()) +
               " residuals)");
      for (auto& res : c.residuals)
        misses.push_back({std::string(to_string(conv)) + ": " + res.location, res.value});
    }
  }
  if (!any) {
    rep.result = Verdict::Fail;
    rep.residuals = std::move(misses);
  }
  return rep;
}

}  // namespace qsuper
