#include "qsuper/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qsuper/errors.hpp"
#include "qsuper/io.hpp"
#include "qsuper/parser.hpp"
#include "qsuper/pipelines.hpp"

namespace qsuper {

namespace {

struct Options {
  std::string catalog, file, json_path, convention, source, compare, mode, param, generator,
      value = "1", kind = "both", with, with_file;
  int degree = -1;
  bool quiet = false;
};

struct Session {
  std::ostream& out;
  const Options& opt;
  json payload = json::object();
  std::vector<CheckReport> reports;

  void show(const Presentation& p, const std::string& key) {
    payload[key] = to_json(p);
    if (opt.quiet) return;
    out << p.name << " <";
    for (std::size_t i = 0; i < p.alphabet->size(); ++i) {
      const auto& g = (*p.alphabet)[i];
      out << (i ? ", " : "") << g.name << (g.parity ? " (odd)" : "");
    }
    out << ">\n";
    for (const auto& r : p.relations) out << "  " << r.to_string() << " = 0\n";
  }

  void add(CheckReport r) {
    if (!opt.quiet || !r.passed()) {
      std::string tag = r.result == Verdict::Pass ? "PASS" : r.result == Verdict::Fail ? "FAIL" : "ANOMALY";
      out << "[" << tag << "] " << r.check;
      for (const auto& o : r.objects) out << " " << o;
      out << "\n";
      for (const auto& x : r.residuals) out << "    residual " << x.location << ": " << x.value << "\n";
      if (!opt.quiet)
        for (const auto& n : r.notes) out << "    note: " << n << "\n";
    }
    reports.push_back(std::move(r));
  }

  int finish(const std::string& command) {
    Verdict v = Verdict::Pass;
    for (const auto& r : reports) v = combine(v, r.result);
    if (!opt.json_path.empty()) {
      json j;
      j["command"] = command;
      j["result"] = to_string(v);
      j["reports"] = json::array();
      for (const auto& r : reports) j["reports"].push_back(to_json(r));
      if (!payload.empty()) j["data"] = payload;
      if (opt.json_path == "-") {
        out << j.dump(2) << "\n";
      } else {
        std::ofstream f(opt.json_path);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + opt.json_path);
        f << j.dump(2) << "\n";
      }
    }
    return v == Verdict::Pass ? 0 : v == Verdict::Fail ? 1 : 3;
  }
};

void need_one_input(const Options& o) {
  if (o.catalog.empty() == o.file.empty())
    throw Error(ErrorKind::InvalidArgument, "exactly one of --catalog or --file is required");
}

int degree_or(const Options& o, int d) { return o.degree >= 0 ? o.degree : d; }

Presentation load_presentation(const std::string& id, const std::string& path) {
  if (!path.empty()) return presentation_from_json(load_json_file(path));
  return catalog_presentation(id);
}

Presentation input_presentation(const Options& o) {
  need_one_input(o);
  return load_presentation(o.catalog, o.file);
}

void maybe_compare(Session& s, const Presentation& p, const std::string& label, const std::string& target,
                   int d) {
  if (target.empty()) return;
  s.add(compare_with(p, label, target, d));
}

int cmd_verify_ybe(Session& s, const Options& o) {
  need_one_input(o);
  SMatrix r;
  Parities par;
  std::string label = o.catalog;
  if (!o.file.empty()) {
    auto f = rmatrix_from_json(load_json_file(o.file));
    r = f.r;
    par = f.parities;
    label = o.file;
  } else {
    auto e = catalog_get(o.catalog);
    if (!e.rmatrix) throw Error(ErrorKind::InvalidArgument, o.catalog + " is not an R-matrix");
    r = e.rmatrix->r;
    par = e.rmatrix->parities;
  }
  if (o.convention == "ungraded") par.clear();
  auto rep = verify_ybe(r, par);
  rep.objects = {label};
  s.add(rep);
  return s.finish("verify-ybe");
}

RMatrixData rmatrix_input(const Options& o) {
  need_one_input(o);
  if (!o.catalog.empty()) {
    auto e = catalog_get(o.catalog);
    if (!e.rmatrix) throw Error(ErrorKind::InvalidArgument, o.catalog + " is not an R-matrix");
    return *e.rmatrix;
  }
  auto j = load_json_file(o.file);
  auto f = rmatrix_from_json(j);
  RMatrixData d;
  d.r = f.r;
  d.params = f.params;
  int n = tensor_base_dim(f.r);
  d.parities = f.parities.empty() ? Parities(n, 0) : f.parities;
  auto qv = d.params.find(j.value("q", std::string("q")));
  if (!qv) throw Error(ErrorKind::UnknownSymbol, "R-matrix file declares no parameter q");
  d.q = Scalar::param(*qv);
  for (int i = 0; i < n; ++i) d.coordinates.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) d.group_names.push_back("t" + std::to_string(i + 1) + std::to_string(k + 1));
  d.coordinates = j.value("coordinates", d.coordinates);
  d.group_names = j.value("group_names", d.group_names);
  bool graded = false;
  for (int p : d.parities) graded = graded || p;
  d.space_convention = d.group_convention = graded ? SignConvention::Graded : SignConvention::Ungraded;
  return d;
}

int cmd_derive(Session& s, const Options& o) {
  auto d = rmatrix_input(o);
  bool explicit_conv = !o.convention.empty();
  if (o.kind != "space" && o.kind != "group" && o.kind != "both")
    throw Error(ErrorKind::InvalidArgument, "--kind must be space, group or both");
  std::string label = o.catalog.empty() ? o.file : o.catalog;
  if (o.kind != "group") {
    auto conv = explicit_conv ? parse_convention(o.convention) : d.space_convention;
    auto p = derive_space(d, conv, label + " space");
    s.show(p, "space");
    maybe_compare(s, p, p.name, o.compare.empty() ? d.space_target : o.compare, degree_or(o, 3));
  }
  if (o.kind != "space" && !d.group_names.empty()) {
    auto conv = explicit_conv ? parse_convention(o.convention) : d.group_convention;
    auto p = derive_group(d, conv, label + " group");
    s.show(p, "group");
    std::string target = o.kind == "group" && !o.compare.empty() ? o.compare : d.group_target;
    maybe_compare(s, p, p.name, target, degree_or(o, 2));
  }
  return s.finish("derive");
}

int cmd_transform(Session& s, const Options& o) {
  need_one_input(o);
  Presentation p;
  std::string target = o.compare;
  if (!o.catalog.empty()) {
    auto e = catalog_get(o.catalog);
    if (!e.basis_map) throw Error(ErrorKind::InvalidArgument, o.catalog + " is not a basis map");
    p = apply_basis_map(*e.basis_map, o.catalog + "(" + e.basis_map->source + ")");
    if (target.empty()) target = e.basis_map->target;
  } else {
    if (o.source.empty()) throw Error(ErrorKind::InvalidArgument, "--source is required with --file");
    auto src = catalog_presentation(o.source);
    auto j = load_json_file(o.file);
    p = transform_presentation(src, basismap_from_json(j, src), o.file + "(" + o.source + ")");
    for (const auto& r : j.value("extra_relations", json::array()))
      p = add_relation(p, parse_expression(r.get<std::string>(), ParseContext{p.params, p.alphabet}));
  }
  s.show(p, "presentation");
  maybe_compare(s, p, p.name, target, degree_or(o, 2));
  return s.finish("transform");
}

void show_contraction_report(Session& s, const ContractionReport& rep) {
  json rels = json::array();
  for (const auto& e : rep.relations)
    rels.push_back({{"relation", e.relation},
                    {"valuation", e.valuation ? json(*e.valuation) : json()},
                    {"leading", e.leading}});
  s.payload["contraction_report"] = {{"relations", rels},
                                     {"saturation_steps", rep.saturation_steps},
                                     {"notes", rep.notes}};
  if (s.opt.quiet) return;
  for (const auto& e : rep.relations)
    s.out << "  eps-order " << (e.valuation ? std::to_string(*e.valuation) : "-") << ": "
          << e.leading << "\n";
}

int cmd_contract(Session& s, const Options& o) {
  need_one_input(o);
  Presentation src;
  ContractionScheme scheme;
  std::string target = o.compare, label;
  if (!o.catalog.empty()) {
    auto e = catalog_get(o.catalog);
    if (!e.contraction) throw Error(ErrorKind::InvalidArgument, o.catalog + " is not a contraction");
    src = catalog_presentation(e.contraction->source);
    scheme = e.contraction->scheme;
    if (target.empty()) target = e.contraction->target;
    label = o.catalog;
  } else {
    if (o.source.empty()) throw Error(ErrorKind::InvalidArgument, "--source is required with --file");
    src = catalog_presentation(o.source);
    scheme = scheme_from_json(load_json_file(o.file), src);
    label = o.file + "(" + o.source + ")";
  }
  if (o.mode == "nilpotent") scheme.mode = ContractionMode::Nilpotent;
  else if (o.mode == "leading_order") scheme.mode = ContractionMode::LeadingOrder;
  else if (!o.mode.empty()) throw Error(ErrorKind::InvalidArgument, "--mode must be leading_order or nilpotent");
  auto res = contract(src, scheme, label);
  show_contraction_report(s, res.report);
  s.show(res.presentation, "presentation");
  maybe_compare(s, res.presentation, label, target, degree_or(o, 3));
  return s.finish("contract");
}

int cmd_limit(Session& s, const Options& o) {
  auto p = input_presentation(o);
  if (o.param.empty()) throw Error(ErrorKind::InvalidArgument, "--param is required");
  auto l = parameter_limit(p, o.param, p.name + "|" + o.param + "=0");
  s.show(l, "presentation");
  maybe_compare(s, l, l.name, o.compare, degree_or(o, 3));
  return s.finish("limit");
}

int cmd_coact(Session& s, const Options& o) {
  need_one_input(o);
  CoactionSpec spec;
  std::string label = o.catalog;
  if (!o.catalog.empty()) {
    auto e = catalog_get(o.catalog);
    if (!e.coaction) throw Error(ErrorKind::InvalidArgument, o.catalog + " is not a coaction");
    spec = e.coaction->spec;
  } else {
    spec = coaction_from_json(load_json_file(o.file));
    label = o.file;
  }
  std::vector<int> used;
  auto rep = coaction_check(spec, &used);
  rep.objects.push_back(label);
  json u = json::array();
  for (int i : used) u.push_back(spec.group.relations.size() > static_cast<std::size_t>(i)
                                     ? spec.group.relations[i].to_string()
                                     : std::to_string(i));
  s.payload["used_group_relations"] = u;
  s.add(rep);
  return s.finish("coact");
}

int cmd_pbw(Session& s, const Options& o) {
  auto p = input_presentation(o);
  int d = degree_or(o, 4);
  auto rs = orient_relations(interreduced(p));
  auto conf = confluence_check(rs, std::max(2, std::min(d, 3)));
  conf.objects = {p.name};
  s.add(conf);
  auto dims = hilbert_dims(rs, d);
  auto exact = exact_hilbert_dims(p, d);
  s.payload["dims"] = to_json(dims);
  s.payload["exact_dims"] = to_json(exact);
  if (!o.quiet) {
    s.out << "  dims";
    for (long x : dims.dims) s.out << " " << x;
    s.out << (dims.upper_bound ? " (upper bound)" : "") << "\n  exact dims";
    for (long x : exact.dims) s.out << " " << x;
    s.out << "\n";
  }
  std::optional<ClassicalModel> model;
  if (!o.catalog.empty()) {
    model = catalog_get(o.catalog).classical;
  } else {
    auto j = load_json_file(o.file);
    if (j.contains("classical")) {
      const auto& c = j.at("classical");
      ClassicalModel m;
      m.free = c.value("free", m.free);
      m.square_zero = c.value("square_zero", m.square_zero);
      for (const auto& pr : c.value("laurent", json::array()))
        m.laurent.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
      model = m;
    }
  }
  if (model) {
    auto classical = classical_dims(*model, d);
    CheckReport rep;
    rep.check = "pbw";
    rep.objects = {p.name};
    for (int k = 0; k <= d; ++k)
      if (exact.dims[k] != classical.dims[k] || dims.dims[k] != classical.dims[k])
        rep.fail("degree " + std::to_string(k),
                 "normal words " + std::to_string(dims.dims[k]) + ", exact " +
                     std::to_string(exact.dims[k]) + ", classical " + std::to_string(classical.dims[k]));
    s.add(rep);
  }
  return s.finish("pbw");
}

int cmd_confluence(Session& s, const Options& o) {
  auto p = input_presentation(o);
  auto rep = confluence_check(orient_relations(interreduced(p)), degree_or(o, 3));
  rep.objects = {p.name};
  s.add(rep);
  return s.finish("confluence");
}

int cmd_compare(Session& s, const Options& o) {
  auto a = input_presentation(o);
  if (o.with.empty() == o.with_file.empty())
    throw Error(ErrorKind::InvalidArgument, "exactly one of --with or --with-file is required");
  auto b = load_presentation(o.with, o.with_file);
  auto rep = ideals_equal_upto_degree(a, b, degree_or(o, 2));
  s.add(rep);
  return s.finish("compare");
}

int cmd_quotient(Session& s, const Options& o) {
  auto p = input_presentation(o);
  if (o.generator.empty()) throw Error(ErrorKind::InvalidArgument, "--generator is required");
  auto q = quotient_set_generator(p, o.generator, parse_scalar(o.value, p.params));
  s.show(q.presentation, "presentation");
  if (!o.quiet)
    for (const auto& n : q.notes) s.out << "  note: " << n << "\n";
  s.payload["collapsing"] = q.collapsing;
  maybe_compare(s, q.presentation, q.presentation.name, o.compare, degree_or(o, 3));
  return s.finish("quotient");
}

int cmd_catalog(Session& s, const Options& o, const std::string& id) {
  if (id.empty()) {
    json list = json::array();
    for (const auto& k : catalog_ids()) {
      auto e = catalog_get(k);
      list.push_back({{"id", k}, {"kind", to_string(e.kind)}, {"anchor", e.anchor}});
      s.out << k << "  [" << to_string(e.kind) << "]  " << e.description << "\n";
    }
    s.payload["entries"] = list;
    return s.finish("catalog");
  }
  auto e = catalog_get(id);
  s.out << e.id << "  [" << to_string(e.kind) << "]  " << e.anchor << "\n  " << e.description << "\n";
  for (const auto& n : e.notes) s.out << "  note: " << n << "\n";
  s.payload["entry"] = {{"id", e.id}, {"kind", to_string(e.kind)}, {"anchor", e.anchor},
                        {"description", e.description}, {"notes", e.notes}};
  if (e.presentation) s.show(*e.presentation, "presentation");
  if (e.rmatrix) s.payload["rmatrix"] = rmatrix_to_json(e.rmatrix->r, e.rmatrix->params, e.rmatrix->parities);
  if (e.rmatrix && !o.quiet) {
    const auto& r = e.rmatrix->r;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      s.out << " ";
      for (Eigen::Index k = 0; k < r.cols(); ++k) s.out << " " << r(i, k).to_string();
      s.out << "\n";
    }
  }
  return s.finish("catalog");
}

int cmd_pipeline(Session& s, const std::string& name) {
  auto res = run_pipeline(name);
  for (auto& r : res.reports) s.add(std::move(r));
  s.payload["pipeline"] = name;
  return s.finish("pipeline");
}

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::DivisionByGeneratorExpression:
    case ErrorKind::UnknownId:
    case ErrorKind::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for quantum (super)groups and quantum (super)spaces", "qsuper"};
  app.require_subcommand(1);
  Options o;
  std::string positional;

  auto common = [&](CLI::App* c) {
    c->add_option("--catalog", o.catalog, "catalog id");
    c->add_option("--file", o.file, "JSON input file");
    c->add_option("--degree", o.degree, "degree bound")->check(CLI::NonNegativeNumber);
    c->add_option("--convention", o.convention, "sign convention")
        ->check(CLI::IsMember({"ungraded", "graded", "graded-t1", "graded-both"}));
    c->add_option("--json", o.json_path, "write a JSON report (- for stdout)");
    c->add_flag("--quiet", o.quiet, "only print failures");
    c->add_option("--compare", o.compare, "catalog presentation to compare with");
    return c;
  };
  auto* ybe = common(app.add_subcommand("verify-ybe", "check the (graded) Yang-Baxter equation"));
  auto* derive = common(app.add_subcommand("derive", "space and group relations of an R-matrix"));
  derive->add_option("--kind", o.kind, "space, group or both");
  auto* transform = common(app.add_subcommand("transform", "apply a change of generators"));
  transform->add_option("--source", o.source, "catalog presentation (with --file)");
  auto* contr = common(app.add_subcommand("contract", "contraction limit"));
  contr->add_option("--source", o.source, "catalog presentation (with --file)");
  contr->add_option("--mode", o.mode, "leading_order or nilpotent");
  auto* limit = common(app.add_subcommand("limit", "set a parameter to zero"));
  limit->add_option("--param", o.param, "parameter");
  auto* coact = common(app.add_subcommand("coact", "check a coaction"));
  auto* pbw = common(app.add_subcommand("pbw", "normal words and Hilbert dimensions"));
  auto* conf = common(app.add_subcommand("confluence", "check ambiguities up to a degree"));
  auto* cmp = common(app.add_subcommand("compare", "ideal equality up to a degree"));
  cmp->add_option("--with", o.with, "catalog presentation");
  cmp->add_option("--with-file", o.with_file, "presentation file");
  auto* quot = common(app.add_subcommand("quotient", "set an even generator to a scalar"));
  quot->add_option("--generator", o.generator, "generator");
  quot->add_option("--value", o.value, "scalar value");
  auto* cat = app.add_subcommand("catalog", "list entries or show one");
  cat->add_option("id", positional, "entry id");
  cat->add_option("--json", o.json_path, "write a JSON report (- for stdout)");
  cat->add_flag("--quiet", o.quiet, "less output");
  auto* pipe = app.add_subcommand("pipeline", "run a shipped pipeline");
  pipe->add_option("name", positional, "pipeline name")->required();
  pipe->add_option("--json", o.json_path, "write a JSON report (- for stdout)");
  pipe->add_flag("--quiet", o.quiet, "only print failures");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Session s{out, o, json::object(), {}};
  try {
    if (*ybe) return cmd_verify_ybe(s, o);
    if (*derive) return cmd_derive(s, o);
    if (*transform) return cmd_transform(s, o);
    if (*contr) return cmd_contract(s, o);
    if (*limit) return cmd_limit(s, o);
    if (*coact) return cmd_coact(s, o);
    if (*pbw) return cmd_pbw(s, o);
    if (*conf) return cmd_confluence(s, o);
    if (*cmp) return cmd_compare(s, o);
    if (*quot) return cmd_quotient(s, o);
    if (*cat) return cmd_catalog(s, o, positional);
    if (*pipe) return cmd_pipeline(s, positional);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (is_input_error(e.kind())) return 2;
    CheckReport rep;
    rep.check = "error";
    rep.fail("exception", e.what());
    s.add(rep);
    try {
      return s.finish("error");
    } catch (const Error&) {
      return 1;
    }
  }
  return 2;
}

}  // namespace qsuper
