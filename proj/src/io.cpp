#include "qsuper/io.hpp"

#include <cctype>
#include <fstream>
#include <set>

#include "qsuper/errors.hpp"
#include "qsuper/parser.hpp"

namespace qsuper {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, path + ": " + e.what());
  }
}

json to_json(const ParameterSet& p) {
  json even = json::array(), nil = json::array(), odd = json::array();
  for (const auto& v : p.vars()) {
    switch (v.kind()) {
      case ParamKind::EvenFree: even.push_back(v.name()); break;
      case ParamKind::EvenNilpotent: nil.push_back({{"name", v.name()}, {"order", v.order()}}); break;
      case ParamKind::Odd: odd.push_back(v.name()); break;
    }
  }
  return {{"even_free", even}, {"even_nilpotent", nil}, {"odd", odd}};
}

ParameterSet params_from_json(const json& j) {
  ParameterSet p;
  if (j.is_null()) return p;
  for (const auto& n : j.value("even_free", json::array())) p.even(n.get<std::string>());
  for (const auto& n : j.value("even_nilpotent", json::array())) {
    if (n.is_array()) p.nilpotent(n.at(0).get<std::string>(), n.at(1).get<int>());
    else p.nilpotent(n.at("name").get<std::string>(), n.value("order", 2));
  }
  for (const auto& n : j.value("odd", json::array())) p.odd(n.get<std::string>());
  return p;
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.alphabet->generators())
    gens.push_back({{"name", g.name}, {"parity", g.parity ? "odd" : "even"}});
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(r.to_string());
  return {{"name", p.name},
          {"parameters", to_json(p.params)},
          {"generators", gens},
          {"precedence", p.precedence},
          {"relations", rels}};
}

namespace {

int parity_of(const json& j) {
  if (j.is_number_integer()) return parse_parity(std::to_string(j.get<int>()));
  return parse_parity(j.get<std::string>());
}

AlphabetPtr alphabet_from_json(const json& j) {
  std::vector<Generator> gens;
  for (const auto& g : j) gens.push_back({g.at("name").get<std::string>(), parity_of(g.at("parity"))});
  return make_alphabet(gens);
}

// Declares identifiers that are neither known parameters nor generators as
// even free parameters.
// Member object or an empty object; safe to iterate with items().
const json& object_field(const json& j, const char* key) {
  static const json empty = json::object();
  auto it = j.find(key);
  return it == j.end() ? empty : *it;
}

ParameterSet with_implicit_params(ParameterSet p, const AlphabetPtr& alpha, const std::string& src) {
  for (std::size_t i = 0; i < src.size();) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t s = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      std::string name = src.substr(s, i - s);
      if (name != "i" && !p.find(name) && !(alpha && alpha->find(name))) p.even(name);
    } else {
      ++i;
    }
  }
  return p;
}

}  // namespace

Presentation presentation_from_json(const json& j) {
  try {
    auto params = params_from_json(j.value("parameters", json()));
    auto alpha = alphabet_from_json(j.at("generators"));
    ParseContext ctx{params, alpha};
    std::vector<Element> rels;
    for (const auto& r : j.value("relations", json::array()))
      rels.push_back(parse_expression(r.get<std::string>(), ctx));
    return make_presentation(j.value("name", std::string("presentation")), params, alpha,
                             j.value("precedence", std::vector<std::string>{}), rels);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("presentation JSON: ") + e.what());
  }
}

json to_json(const CheckReport& r) {
  json res = json::array();
  for (const auto& x : r.residuals) res.push_back({{"location", x.location}, {"value", x.value}});
  return {{"check", r.check},
          {"objects", r.objects},
          {"result", to_string(r.result)},
          {"residuals", res},
          {"notes", r.notes}};
}

json to_json(const DimTable& d) { return {{"dims", d.dims}, {"upper_bound", d.upper_bound}}; }

RMatrixFile rmatrix_from_json(const json& j) {
  try {
    RMatrixFile f;
    f.params = j.contains("parameters") ? params_from_json(j.at("parameters")) : ParameterSet().even("q");
    int dim = j.at("dim").get<int>();
    const auto& rows = j.at("entries");
    int N = dim * dim;
    if (static_cast<int>(rows.size()) != N)
      throw Error(ErrorKind::NonSquareTensorDim, "entries must have dim^2 rows");
    f.r = SMatrix(N, N);
    for (int i = 0; i < N; ++i) {
      if (static_cast<int>(rows[i].size()) != N)
        throw Error(ErrorKind::NonSquareTensorDim, "entries must have dim^2 columns");
      for (int k = 0; k < N; ++k) {
        const auto& e = rows[i][k];
        f.r(i, k) = e.is_number_integer() ? Scalar(e.get<long>())
                                          : parse_scalar(e.get<std::string>(), f.params);
      }
    }
    for (const auto& p : j.value("parities", json::array())) f.parities.push_back(parity_of(p));
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("R-matrix JSON: ") + e.what());
  }
}

json rmatrix_to_json(const SMatrix& r, const ParameterSet& params, const Parities& parities) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < r.cols(); ++k) row.push_back(r(i, k).to_string());
    rows.push_back(row);
  }
  json par = json::array();
  for (int p : parities) par.push_back(p ? "odd" : "even");
  return {{"dim", tensor_base_dim(r)}, {"entries", rows}, {"parameters", to_json(params)},
          {"parities", par}};
}

BasisMap basismap_from_json(const json& j, const Presentation& source) {
  try {
    BasisMap m;
    m.target = j.contains("generators") ? alphabet_from_json(j.at("generators")) : source.alphabet;
    m.target_precedence = j.value("precedence", std::vector<std::string>{});
    ParameterSet params =
        j.contains("parameters") ? params_from_json(j.at("parameters")) : source.params;
    std::string all;
    for (const auto& [g, e] : object_field(j, "images").items()) all += " " + e.get<std::string>();
    for (const auto& [p, e] : object_field(j, "parameter_subst").items())
      all += " " + e.get<std::string>();
    ParameterSet ctx_params = with_implicit_params(params, m.target, all);
    ParseContext ctx{ctx_params, m.target};
    for (const auto& [g, e] : object_field(j, "images").items())
      m.images.emplace(g, parse_expression(e.get<std::string>(), ctx));
    std::set<std::string> substituted;
    for (const auto& [p, e] : object_field(j, "parameter_subst").items()) {
      auto v = source.params.find(p);
      if (!v) throw Error(ErrorKind::UnknownSymbol, "unknown parameter '" + p + "' in parameter_subst");
      m.param_subst[*v] = parse_scalar(e.get<std::string>(), ctx_params);
      substituted.insert(p);
    }
    if (!j.contains("parameters")) {
      ParameterSet out;
      for (const auto& v : ctx_params.vars()) {
        if (substituted.count(v.name())) continue;
        out = out.merged(v.kind() == ParamKind::Odd ? ParameterSet().odd(v.name())
                         : v.kind() == ParamKind::EvenNilpotent
                             ? ParameterSet().nilpotent(v.name(), v.order())
                             : ParameterSet().even(v.name()));
      }
      m.target_params = out;
    } else {
      m.target_params = ctx_params;
    }
    m.projection = j.value("projection", false);
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("basis map JSON: ") + e.what());
  }
}

CoactionSpec coaction_from_json(const json& j) {
  try {
    CoactionSpec s;
    s.group = catalog_presentation(j.at("group").get<std::string>());
    s.space = catalog_presentation(j.at("space").get<std::string>());
    std::string all;
    for (const auto& row : j.at("matrix"))
      for (const auto& e : row) all += " " + e.get<std::string>();
    ParseContext ctx{with_implicit_params(s.group.params, s.group.alphabet, all), s.group.alphabet};
    for (const auto& row : j.at("matrix")) {
      s.matrix.emplace_back();
      for (const auto& e : row) s.matrix.back().push_back(parse_expression(e.get<std::string>(), ctx));
    }
    std::string cross = j.value("cross_sign", std::string("koszul"));
    if (cross == "koszul") s.cross = CrossSign::Koszul;
    else if (cross == "plain") s.cross = CrossSign::Plain;
    else throw Error(ErrorKind::InvalidArgument, "cross_sign must be koszul or plain");
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("coaction JSON: ") + e.what());
  }
}

ContractionScheme scheme_from_json(const json& j, const Presentation& source) {
  try {
    ContractionScheme s;
    s.eps = j.value("eps", std::string("eps"));
    for (const auto& [g, w] : object_field(j, "weights").items()) {
      if (!source.alphabet->find(g)) throw Error(ErrorKind::UnknownSymbol, "unknown generator '" + g + "'");
      s.weights[g] = w.get<int>();
    }
    std::string all;
    for (const auto& [p, e] : object_field(j, "param_subst").items()) all += " " + e.get<std::string>();
    ParameterSet base;
    base.even(s.eps);
    for (const auto& v : source.params.vars())
      if (v.name() != s.eps) base = base.merged(ParameterSet().even(v.name()));
    ParameterSet ctx = with_implicit_params(base, nullptr, all);
    for (const auto& [p, e] : object_field(j, "param_subst").items()) {
      auto v = source.params.find(p);
      if (!v) throw Error(ErrorKind::UnknownSymbol, "unknown parameter '" + p + "' in param_subst");
      s.param_subst[*v] = parse_scalar(e.get<std::string>(), ctx);
    }
    std::string mode = j.value("mode", std::string("leading_order"));
    if (mode == "leading_order") s.mode = ContractionMode::LeadingOrder;
    else if (mode == "nilpotent") s.mode = ContractionMode::Nilpotent;
    else throw Error(ErrorKind::InvalidArgument, "mode must be leading_order or nilpotent");
    s.nil_order = j.value("nil_order", s.nil_order);
    s.saturate = j.value("saturate", true);
    for (const auto& [a, b] : object_field(j, "rename").items()) s.rename[a] = b.get<std::string>();
    s.precedence = j.value("precedence", std::vector<std::string>{});
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("scheme JSON: ") + e.what());
  }
}

}  // namespace qsuper
