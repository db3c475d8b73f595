#include "qsuper/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "qsuper/errors.hpp"
#include "qsuper/parser.hpp"

namespace qsuper {

const char* to_string(EntryKind k) {
  switch (k) {
    case EntryKind::RMatrix: return "rmatrix";
    case EntryKind::Presentation: return "presentation";
    case EntryKind::BasisMap: return "basismap";
    case EntryKind::Coaction: return "coaction";
    case EntryKind::Contraction: return "contraction";
    case EntryKind::Pipeline: return "pipeline";
  }
  return "?";
}

DimTable classical_dims(const ClassicalModel& m, int d_max) {
  std::vector<long> f(static_cast<std::size_t>(d_max) + 1, 0);
  f[0] = 1;
  auto times_free = [&] {  // 1/(1-t): prefix sums
    for (int d = 1; d <= d_max; ++d) f[d] += f[d - 1];
  };
  auto times_one_plus_t = [&] {
    for (int d = d_max; d >= 1; --d) f[d] += f[d - 1];
  };
  for (std::size_t i = 0; i < m.free.size(); ++i) times_free();
  for (std::size_t i = 0; i < m.square_zero.size(); ++i) times_one_plus_t();
  for (std::size_t i = 0; i < m.laurent.size(); ++i) {
    times_free();
    times_one_plus_t();
  }
  return DimTable{f, false};
}

SMatrix cartesian_d() {
  SMatrix d(2, 2);
  Scalar i = Scalar::imaginary_unit();
  d << Scalar(1), -i, Scalar(1), i;
  return d;
}

namespace {

ParameterSet params_q() { return ParameterSet().even("q"); }
ParameterSet params_v() { return ParameterSet().even("v"); }
ParameterSet params_vh() { return ParameterSet().even("v").odd("h"); }
ParameterSet params_h() { return ParameterSet().odd("h"); }

Presentation pres(const std::string& name, const ParameterSet& params,
                  const std::vector<Generator>& gens, std::vector<std::string> precedence,
                  const std::vector<std::string>& rels) {
  auto alpha = make_alphabet(gens);
  ParseContext ctx{params, alpha};
  std::vector<Element> es;
  for (const auto& r : rels) es.push_back(parse_expression(r, ctx));
  return make_presentation(name, params, alpha, std::move(precedence), es);
}

SMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const ParameterSet& params) {
  SMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_scalar(rows[i][j], params);
  return m;
}

SMatrix eq5(const std::string& zeta) {
  return parse_matrix({{"q", "0", "0", "0"},
                       {"0", "1", "0", "0"},
                       {"0", "q-1/q", "1", "0"},
                       {"0", "0", "0", zeta}},
                      params_q());
}

SMatrix eq20() {
  const std::string L = "q-1/q", mL = "-(q-1/q)";
  return parse_matrix({{"q", "0", "0", "0", "0", "0", "0", "0", "0"},
                       {"0", "1", "0", "0", "0", "0", "0", "0", "0"},
                       {"0", "0", "1", "0", "0", "0", "0", "0", "0"},
                       {"0", L, "0", "1", "0", "0", "0", "0", "0"},
                       {"0", "0", "0", "0", "1/q", "0", "0", "0", "0"},
                       {"0", "0", "0", "0", "0", "1", "0", "0", "0"},
                       {"0", "0", L, "0", "0", "0", "1", "0", "0"},
                       {"0", "0", "0", "0", "0", mL, "0", "1", "0"},
                       {"0", "0", "0", "0", "0", "0", "0", "0", "1/q"}},
                      params_q());
}

constexpr int E = 0, O = 1;

class Builder {
 public:
  std::map<std::string, CatalogEntry> entries;

  CatalogEntry& add(const std::string& id, EntryKind kind, const std::string& anchor,
                    const std::string& description) {
    auto& e = entries[id];
    e.id = id;
    e.kind = kind;
    e.anchor = anchor;
    e.description = description;
    return e;
  }

  void add_pres(const std::string& id, const std::string& anchor, const std::string& desc,
                Presentation p, ClassicalModel m, std::vector<std::string> notes = {}) {
    auto& e = add(id, EntryKind::Presentation, anchor, desc);
    e.presentation = std::move(p);
    e.classical = std::move(m);
    e.notes = std::move(notes);
  }

  const Presentation& get(const std::string& id) const { return *entries.at(id).presentation; }

  std::vector<std::vector<Element>> matrix(const Presentation& group, const ParameterSet& extra,
                                           const std::vector<std::vector<std::string>>& rows) const {
    ParseContext ctx{group.params.merged(extra), group.alphabet};
    std::vector<std::vector<Element>> out;
    for (const auto& r : rows) {
      out.emplace_back();
      for (const auto& s : r) out.back().push_back(parse_expression(s, ctx));
    }
    return out;
  }
};

void add_rmatrices(Builder& b) {
  auto rm = [&](const std::string& id, const std::string& anchor, const std::string& desc,
                SMatrix r, Parities par, std::vector<std::string> coords,
                std::vector<std::string> gnames, std::vector<std::string> sprec,
                std::vector<std::string> gprec, SignConvention sconv, SignConvention gconv,
                std::string starget, std::string gtarget) {
    auto& e = b.add(id, EntryKind::RMatrix, anchor, desc);
    RMatrixData d;
    d.r = std::move(r);
    d.parities = std::move(par);
    d.params = params_q();
    d.q = param("q");
    d.coordinates = std::move(coords);
    d.group_names = std::move(gnames);
    d.space_precedence = std::move(sprec);
    d.group_precedence = std::move(gprec);
    d.space_convention = sconv;
    d.group_convention = gconv;
    d.space_target = std::move(starget);
    d.group_target = std::move(gtarget);
    e.rmatrix = std::move(d);
  };
  using SC = SignConvention;
  rm("R.glq2", "Eq. 5, zeta=q", "standard solution for GL_q(2)", eq5("q"), {E, E}, {"x", "y"},
     {"a", "b", "c", "d"}, {"y", "x"}, {"d", "c", "b", "a"}, SC::Ungraded, SC::Ungraded,
     "pres.cq2", "pres.eq6");
  rm("R.glq2_exotic", "Eq. 5, zeta=-1/q", "exotic solution for the dual-plane group",
     eq5("-1/q"), {E, E}, {"x", "y"}, {"a", "b", "c", "d"}, {"y", "x"}, {"d", "c", "b", "a"},
     SC::Ungraded, SC::Ungraded, "pres.eq11", "pres.eq12");
  rm("R.glq11", "Eq. 5, zeta=1/q", "standard graded solution for GL_q(1|1)", eq5("1/q"), {E, O},
     {"x", "theta"}, {"a", "alpha", "beta", "b"}, {"theta", "x"}, {"b", "beta", "alpha", "a"},
     SC::Ungraded, SC::Graded, "pres.cq11", "pres.eq13");
  rm("R.glq11_exotic", "Eq. 5, zeta=-q", "exotic graded solution", eq5("-q"), {E, O},
     {"z", "mu"}, {"c", "gamma", "delta", "d"}, {"mu", "z"}, {"d", "delta", "gamma", "c"},
     SC::Graded, SC::Graded, "pres.cq11_exotic", "pres.eq18");
  rm("R.glq12", "Eq. 20", "standard N=3 graded solution for GL_q(1|2)", eq20(), {E, O, O},
     {"x", "theta1", "theta2"}, {}, {"theta2", "theta1", "x"}, {}, SC::Graded, SC::Graded,
     "pres.eq21", "");
}

void add_presentations(Builder& b) {
  const std::string L = "(q-1/q)";
  b.add_pres("pres.cq2", "Sec. 3, xy=qyx", "quantum plane C_q(2)",
             pres("C_q(2)", params_q(), {{"x", E}, {"y", E}}, {"y", "x"}, {"x*y - q*y*x"}),
             {{"x", "y"}, {}, {}});
  b.add_pres("pres.eq6", "Eq. 6", "quantum group GL_q(2)",
             pres("GL_q(2)", params_q(), {{"a", E}, {"b", E}, {"c", E}, {"d", E}},
                  {"d", "c", "b", "a"},
                  {"a*b - q*b*a", "a*c - q*c*a", "b*d - q*d*b", "c*d - q*d*c", "b*c - c*b",
                   "a*d - d*a - " + L + "*b*c"}),
             {{"a", "b", "c", "d"}, {}, {}});
  b.add_pres("pres.eq8", "Eq. 8", "C_q(2) in the Cartesian basis",
             pres("C_q(2) Cartesian", params_q(), {{"p", E}, {"r", E}}, {"r", "p"},
                  {"r*p - p*r - i*(q-1)/(q+1)*(r^2 + p^2)"}),
             {{"p", "r"}, {}, {}});
  b.add_pres("pres.ch2", "Sec. 3, [rhat,p]=hp^2", "h-plane C_h(2), h = i*v/2",
             pres("C_h(2)", params_v(), {{"p", E}, {"rhat", E}}, {"rhat", "p"},
                  {"rhat*p - p*rhat - i*v/2*p^2"}),
             {{"p", "rhat"}, {}, {}});
  b.add_pres("pres.eq9", "Eq. 9", "GL_h(2) in Cartesian generators, h = i*v/2",
             pres("GL_h(2)", params_v(), {{"s", E}, {"t", E}, {"u", E}, {"w", E}},
                  {"u", "t", "w", "s"},
                  {"s*w - w*s", "u*t - t*u - i*v/2*(s + w)*(t + u)",
                   "s*t - t*s - i*v/2*s*(s - w)", "u*s - s*u - i*v/2*s*(s - w)",
                   "t*w - w*t - i*v/2*w*(s - w)", "w*u - u*w - i*v/2*w*(s - w)"}),
             {{"s", "t", "u", "w"}, {}, {}});
  b.add_pres("pres.eq11", "Eq. 11", "quantum dual plane D_q(2)",
             pres("D_q(2)", params_q(), {{"x", E}, {"y", E}}, {"y", "x"}, {"x*y - q*y*x", "y^2"}),
             {{"x"}, {"y"}, {}});
  b.add_pres("pres.eq12", "Eq. 12", "exotic group for D_q(2)",
             pres("GL~_q(2)", params_q(), {{"a", E}, {"b", E}, {"c", E}, {"d", E}},
                  {"d", "c", "b", "a"},
                  {"b^2", "c^2", "b*c - c*b", "a*c - q*c*a", "d*b + q*b*d", "d*c + q*c*d",
                   "a*d - d*a - " + L + "*b*c", "a*b - q*b*a"}),
             {{"a", "d"}, {"b", "c"}, {}},
             {"ab = q ba is not printed but follows from the RTT relations"});
  b.add_pres("pres.eq13", "Eq. 13", "quantum supergroup GL_q(1|1)",
             pres("GL_q(1|1)", params_q(), {{"a", E}, {"alpha", O}, {"beta", O}, {"b", E}},
                  {"b", "beta", "alpha", "a"},
                  {"alpha^2", "beta^2", "alpha*beta + beta*alpha", "a*alpha - q*alpha*a",
                   "a*beta - q*beta*a", "b*alpha - q*alpha*b", "b*beta - q*beta*b",
                   "a*b - b*a - " + L + "*beta*alpha"}),
             {{"a", "b"}, {"alpha", "beta"}, {}});
  b.add_pres("pres.cq11", "Sec. 4, x theta = q theta x", "quantum superplane C_q(1|1)",
             pres("C_q(1|1)", params_q(), {{"x", E}, {"theta", O}}, {"theta", "x"},
                  {"x*theta - q*theta*x", "theta^2"}),
             {{"x"}, {"theta"}, {}});
  b.add_pres("pres.eq15", "Eq. 15", "C_q(1|1) in the basis y, xi (q = 1+v)",
             pres("C_q(1|1) superlinear", params_vh(), {{"y", E}, {"xi", O}}, {"xi", "y"},
                  {"y*xi - xi*y - h*y^2 - v*xi*y", "xi^2 + h*xi*y"}),
             {{"y"}, {"xi"}, {}});
  b.add_pres("pres.eq16", "Eq. 16", "h-superplane C_h(1|1)",
             pres("C_h(1|1)", params_h(), {{"y", E}, {"xi", O}}, {"xi", "y"},
                  {"y*xi - xi*y - h*y^2", "xi^2 + h*xi*y"}),
             {{"y"}, {"xi"}, {}});
  b.add_pres("pres.eq17", "Eq. 17", "quantum supergroup GL_h(1|1)",
             pres("GL_h(1|1)", params_h(), {{"m", E}, {"psi", O}, {"phi", O}, {"n", E}},
                  {"phi", "n", "m", "psi"},
                  {"psi^2", "phi^2 - h*phi*(n - m)", "psi*phi + phi*psi - h*psi*(n - m)",
                   "m*phi - phi*m - h*(phi*psi - m*(n - m))",
                   "n*phi - phi*n - h*(phi*psi - n*(n - m))", "m*psi - psi*m", "n*psi - psi*n",
                   "n*m - m*n - h*psi*(n - m)"}),
             {{"m", "n"}, {"psi", "phi"}, {}});
  b.add_pres("pres.eq18", "Eq. 18", "exotic quantum graded group",
             pres("GL~_q(1|1)", params_q(), {{"c", E}, {"gamma", O}, {"delta", O}, {"d", E}},
                  {"d", "delta", "gamma", "c"},
                  {"delta*gamma + gamma*delta", "c*gamma - q*gamma*c", "c*delta - q*delta*c",
                   "gamma*d + q*d*gamma", "delta*d + q*d*delta",
                   "c*d - d*c - " + L + "*delta*gamma"}),
             {{"c", "gamma", "delta", "d"}, {}, {}},
             {"no relations gamma^2 = delta^2 = 0"});
  b.add_pres("pres.cq11_exotic", "Sec. 4, z mu = q mu z", "exotic graded plane",
             pres("C~_q(1|1)", params_q(), {{"z", E}, {"mu", O}}, {"mu", "z"}, {"z*mu - q*mu*z"}),
             {{"z", "mu"}, {}, {}}, {"no relation mu^2 = 0"});
  b.add_pres("pres.eq19_transformed", "Sec. 4, after Eq. 19", "exotic plane in the basis t, nu",
             pres("C~_q(1|1) superlinear", params_vh(), {{"t", E}, {"nu", O}}, {"nu", "t"},
                  {"t*nu - nu*t - h*t^2 - v*nu*t", "nu^2"}),
             {{"t"}, {"nu"}, {}});
  b.add_pres("pres.ch11_exotic", "Sec. 4, exotic h-superplane", "exotic h-superplane",
             pres("C~_h(1|1)", params_h(), {{"t", E}, {"nu", O}}, {"nu", "t"},
                  {"t*nu - nu*t - h*t^2", "nu^2"}),
             {{"t"}, {"nu"}, {}});
  b.add_pres("pres.eq21", "Eq. 21", "quantum superspace C_q(1|2)",
             pres("C_q(1|2)", params_q(), {{"x", E}, {"theta1", O}, {"theta2", O}},
                  {"theta2", "theta1", "x"},
                  {"x*theta1 - q*theta1*x", "x*theta2 - q*theta2*x",
                   "theta1*theta2 + q*theta2*theta1", "theta1^2", "theta2^2"}),
             {{"x"}, {"theta1", "theta2"}, {}});
  b.add_pres("pres.eq23", "Eq. 23", "C_q(1|2) in the Cartesian basis",
             pres("C_q(1|2) Cartesian", params_q(), {{"x", E}, {"xi1", O}, {"xi2", O}},
                  {"xi2", "xi1", "x"},
                  {"x*xi1 - q*xi1*x", "x*xi2 - q*xi2*x", "xi1*xi2 + xi2*xi1",
                   "xi1^2 - i*(q-1)/(q+1)*xi1*xi2", "xi2^2 - i*(q-1)/(q+1)*xi1*xi2"}),
             {{"x"}, {"xi1", "xi2"}, {}},
             {"printed x xi_k = q xi_k read as x xi_k = q xi_k x"});
  b.add_pres("pres.eq24", "Eq. 24", "quantum flag superspace C_h(1|2;iota), h = i*v/2",
             pres("C_h(1|2)", params_v(), {{"x", E}, {"xi1", O}, {"xi2", O}},
                  {"xi2", "xi1", "x"},
                  {"x*xi1 - xi1*x", "x*xi2 - xi2*x", "xi1*xi2 + xi2*xi1", "xi1^2",
                   "xi2^2 - i*v/2*xi1*xi2"}),
             {{"x"}, {"xi1", "xi2"}, {}});
  b.add_pres("pres.eq25", "Eq. 25", "flag superplane with odd generators, h = i*v/2",
             pres("C^_h(2)", params_v(), {{"xi1", O}, {"xi2", O}}, {"xi2", "xi1"},
                  {"xi1*xi2 + xi2*xi1", "xi1^2", "xi2^2 - i*v/2*xi1*xi2"}),
             {{}, {"xi1", "xi2"}, {}});
  b.add_pres("pres.eq27", "Eq. 27", "SL_h(1|2;iota) with k kinv = kinv k = 1, h = i*v/2",
             pres("SL_h(1|2)", params_v(), {{"k", E}, {"kinv", E}, {"r", E}, {"m", E}},
                  {"r", "m", "kinv", "k"},
                  {"r*k - k*r - i*v/2*(k^2 - 1)", "k*m - m*k - i*v/2*(k^2 - 1)",
                   "kinv*r - r*kinv - i*v/2*(1 - kinv^2)", "m*kinv - kinv*m - i*v/2*(1 - kinv^2)",
                   "r*m - m*r - i*v/2*(k + kinv)*(r + m)", "k*kinv - 1", "kinv*k - 1"}),
             {{"r", "m"}, {}, {{"k", "kinv"}}},
             {"k kinv = kinv k = 1 adjoined; not printed"});

  // Cartesian GL_q(2): T = D U D^-1 on the generators of Eq. 6.
  auto t = make_generator_matrix({"a", "b", "c", "d"}, {});
  auto u = make_generator_matrix({"s", "t", "u", "w"}, {});
  auto cart = induced_group_transform(b.get("pres.eq6"), t, cartesian_d(), u,
                                      {"u", "t", "w", "s"}, "GL_q(2) Cartesian");
  b.add_pres("pres.glq2_cartesian", "Sec. 3, U = D^-1 T D", "GL_q(2) in Cartesian generators",
             cart, {{"s", "t", "u", "w"}, {}, {}});
}

BasisMap basis_map(const Presentation& target, const ParameterSet& ctx_params,
                   const std::map<std::string, std::string>& images,
                   const std::map<std::string, std::string>& subst, const ParameterSet& subst_params) {
  BasisMap m;
  m.target = target.alphabet;
  m.target_precedence = target.precedence;
  m.target_params = target.params;
  ParseContext ctx{ctx_params, target.alphabet};
  for (const auto& [g, e] : images) m.images.emplace(g, parse_expression(e, ctx));
  for (const auto& [p, e] : subst) {
    auto v = subst_params.find(p);
    if (!v) throw Error(ErrorKind::UnknownSymbol, "unknown parameter " + p);
    m.param_subst[*v] = parse_scalar(e, ctx_params);
  }
  return m;
}

void add_maps(Builder& b) {
  {
    auto& e = b.add("map.eq7", EntryKind::BasisMap, "Eq. 7", "Cartesian basis of C_q(2): X = D Y");
    BasisMapData d{"pres.cq2",
                   basis_map(b.get("pres.eq8"), params_q(), {{"x", "p - i*r"}, {"y", "p + i*r"}}, {},
                             params_q()),
                   {}, "pres.eq8"};
    e.basis_map = std::move(d);
    e.notes = {"the 1/sqrt(2) normalization is dropped"};
  }
  {
    auto& e = b.add("map.eq14", EntryKind::BasisMap, "Eq. 14", "superlinear change x, theta -> y, xi");
    BasisMapData d{"pres.cq11",
                   basis_map(b.get("pres.eq15"), params_vh(),
                             {{"x", "y + h/v*xi"}, {"theta", "xi + h/v*y"}}, {{"q", "1 + v"}},
                             params_q()),
                   {}, "pres.eq15"};
    e.basis_map = std::move(d);
  }
  {
    auto& e = b.add("map.eq19", EntryKind::BasisMap, "Eq. 19", "superlinear change z, mu -> t, nu");
    const auto& tgt = b.get("pres.eq19_transformed");
    BasisMapData d{"pres.cq11_exotic",
                   basis_map(tgt, params_vh(), {{"z", "t + h/v*nu"}, {"mu", "nu + h/v*t"}},
                             {{"q", "1 + v"}}, params_q()),
                   {parse_expression("nu^2", ParseContext{params_vh(), tgt.alphabet})},
                   "pres.eq19_transformed"};
    e.basis_map = std::move(d);
    e.notes = {"nu^2 = 0 is adjoined by hand"};
  }
  {
    auto& e = b.add("map.eq22", EntryKind::BasisMap, "Eq. 22", "Cartesian basis of the odd coordinates");
    BasisMapData d{"pres.eq21",
                   basis_map(b.get("pres.eq23"), params_q(),
                             {{"x", "x"}, {"theta1", "xi1 - i*xi2"}, {"theta2", "xi1 + i*xi2"}}, {},
                             params_q()),
                   {}, "pres.eq23"};
    e.basis_map = std::move(d);
    e.notes = {"the 1/sqrt(2) normalization is dropped"};
  }
}

void add_coactions(Builder& b) {
  auto co = [&](const std::string& id, const std::string& anchor, const std::string& desc,
                const std::string& group, const std::string& space, const ParameterSet& extra,
                const std::vector<std::vector<std::string>>& m, std::vector<std::string> notes) {
    auto& e = b.add(id, EntryKind::Coaction, anchor, desc);
    CoactionData d{group, space, {}};
    d.spec.group = b.get(group);
    if (!extra.vars().empty()) d.spec.group.params = d.spec.group.params.merged(extra);
    d.spec.space = b.get(space);
    d.spec.matrix = b.matrix(d.spec.group, extra, m);
    d.spec.notes = notes;
    e.notes = std::move(notes);
    e.coaction = std::move(d);
  };
  co("coact.eq4", "Eq. 4", "GL_q(2) on C_q(2), delta(X) = T X", "pres.eq6", "pres.cq2", {},
     {{"a", "b"}, {"c", "d"}}, {});
  co("coact.eq10", "Eq. 10", "GL_h(2) on C_h(2), effective map on (p, rhat)", "pres.eq9", "pres.ch2",
     {}, {{"s", "0"}, {"u", "w"}},
     {"iota t (x) iota rhat carries iota^2 and drops; t is not constrained by this check"});
  co("coact.eq10_nilpotent", "Eq. 10", "GL_h(2) on C_h(2) with the iota^2 entry kept symbolically",
     "pres.eq9", "pres.ch2", ParameterSet().nilpotent("iota", 2), {{"s", "iota^2*t"}, {"u", "w"}},
     {"entry iota^2*t vanishes in the truncated ring (iota^2 = 0)"});
  co("coact.eq13", "Eq. 13", "GL_q(1|1) on C_q(1|1)", "pres.eq13", "pres.cq11", {},
     {{"a", "alpha"}, {"beta", "b"}}, {});
  co("coact.eq17", "Eq. 17", "GL_h(1|1) on C_h(1|1)", "pres.eq17", "pres.eq16", {},
     {{"m", "psi"}, {"phi", "n"}}, {"odd h anticommutes with odd generators (Koszul rule)"});
  co("coact.eq26", "Eq. 26", "SL_h(1|2;iota) on C_h(1|2;iota), effective map", "pres.eq27",
     "pres.eq24", {}, {{"1", "0", "0"}, {"0", "k", "0"}, {"0", "m", "kinv"}},
     {"iota r (x) iota xi2 carries iota^2 and drops; r is not constrained by this check"});
}

void add_contractions(Builder& b) {
  auto ct = [&](const std::string& id, const std::string& anchor, const std::string& desc,
                const std::string& source, std::map<std::string, int> weights,
                std::map<std::string, std::string> rename, const std::string& target) {
    auto& e = b.add(id, EntryKind::Contraction, anchor, desc);
    ContractionData d;
    d.source = source;
    d.scheme.eps = "eps";
    d.scheme.weights = std::move(weights);
    auto ps = ParameterSet().even("eps").even("v");
    d.scheme.param_subst[Var::free("q")] = parse_scalar("1 + eps*v", ps);
    d.scheme.rename = std::move(rename);
    d.scheme.precedence = b.get(target).precedence;
    d.target = target;
    e.contraction = std::move(d);
  };
  ct("contract.eq8", "Sec. 3, r -> iota rhat", "Cartesian C_q(2) to the h-plane", "pres.eq8",
     {{"r", 1}}, {{"r", "rhat"}}, "pres.ch2");
  ct("contract.eq9", "Eq. 9", "Cartesian GL_q(2) to GL_h(2)", "pres.glq2_cartesian",
     {{"t", 1}, {"u", 1}}, {}, "pres.eq9");
  ct("contract.eq24", "Eq. 24", "Cartesian C_q(1|2) to the flag superspace", "pres.eq23",
     {{"xi2", 1}}, {}, "pres.eq24");
}

void add_pipelines(Builder& b);

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> entries = [] {
    Builder b;
    add_rmatrices(b);
    add_presentations(b);
    add_maps(b);
    add_coactions(b);
    add_contractions(b);
    add_pipelines(b);
    return std::move(b.entries);
  }();
  return entries;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

CatalogEntry catalog_get(const std::string& id) {
  const auto& c = catalog();
  auto it = c.find(id);
  if (it != c.end()) return it->second;
  std::string best;
  std::size_t dist = std::string::npos;
  for (const auto& [k, v] : c) {
    std::size_t d = edit_distance(id, k);
    if (d < dist) {
      dist = d;
      best = k;
    }
  }
  throw Error(ErrorKind::UnknownId, "unknown catalog id '" + id + "' (did you mean '" + best + "'?)");
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& [k, v] : catalog()) ids.push_back(k);
  return ids;
}

Presentation catalog_presentation(const std::string& id) {
  auto e = catalog_get(id);
  if (!e.presentation) throw Error(ErrorKind::InvalidArgument, id + " is not a presentation");
  return *e.presentation;
}

namespace {

void add_pipelines(Builder& b) {
  const std::vector<std::pair<std::string, std::string>> pipes{
      {"eq6", "derive GL_q(2) from R.glq2 and compare with Eq. 6"},
      {"eq8", "Eq. 7 transform of C_q(2), compared with Eq. 8 and the conjugated-R route"},
      {"eq9", "GL_q(2) -> Cartesian -> contraction, compared with Eq. 9"},
      {"eq11", "derive D_q(2) from R.glq2_exotic"},
      {"eq12", "derive the exotic group from R.glq2_exotic"},
      {"eq13", "convention scan of R.glq11 against Eq. 13"},
      {"eq15", "Eq. 14 transform of C_q(1|1)"},
      {"eq16", "v -> 0 limit of Eq. 15"},
      {"eq17-coact", "GL_h(1|1) coaction on C_h(1|1)"},
      {"eq18", "convention scan of R.glq11_exotic against Eq. 18, and the exotic plane"},
      {"eq21", "derive C_q(1|2) from Eq. 20"},
      {"eq23", "Eq. 22 transform of C_q(1|2)"},
      {"eq24", "contraction of Eq. 23"},
      {"eq25", "quotient x = 1 of Eq. 24"},
      {"eq26-coact", "SL_h(1|2;iota) coaction on C_h(1|2;iota)"},
      {"ybe-all", "Yang-Baxter check of every catalog R-matrix"},
      {"all", "every pipeline above"}};
  for (const auto& [name, desc] : pipes) b.add("pipeline." + name, EntryKind::Pipeline, "", desc);
}

}  // namespace

}  // namespace qsuper
