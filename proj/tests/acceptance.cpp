// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Run with --update-goldens to rewrite the golden files.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "qsuper/cli.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/io.hpp"
#include "qsuper/parser.hpp"
#include "qsuper/pipelines.hpp"

using namespace qsuper;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = QSUPER_GOLDEN_DIR;
bool g_update = false;

struct Outcome {
  bool ok = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details.push_back(what);
    }
  }
  void info(const std::string& what) { details.push_back("info: " + what); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Compares `j` with a golden file, or writes it in update mode.
bool golden(const std::string& rel, const json& j, Outcome& o) {
  fs::path p = kGolden / rel;
  std::string text = j.dump(2) + "\n";
  if (g_update) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
    return true;
  }
  if (!fs::exists(p)) {
    o.require(false, "missing golden " + rel);
    return false;
  }
  bool same = slurp(p) == text;
  o.require(same, "golden mismatch " + rel);
  return same;
}

RMatrixData R(const std::string& id) { return *catalog_get(id).rmatrix; }

bool equal_ideals(const std::string& target, const Presentation& p, int d, Outcome& o,
                  const std::string& what) {
  auto rep = ideals_equal_upto_degree(catalog_presentation(target), p, d);
  o.require(rep.passed(), what + " differs from " + target);
  for (const auto& r : rep.residuals) o.details.push_back("  " + r.location + ": " + r.value);
  return rep.passed();
}

const std::vector<std::string> kRIds{"R.glq2", "R.glq2_exotic", "R.glq11", "R.glq11_exotic", "R.glq12"};

Outcome c1() {
  Outcome o;
  for (const auto& id : kRIds) {
    auto d = R(id);
    o.require(verify_ybe(d.r, d.parities).passed(), id + " fails YBE");
    o.require(oracle::ybe_by_index_sums(d.r, d.parities), id + " fails the index-sum oracle");
    int mutations = 0, caught = 0;
    for (Eigen::Index i = 0; i < d.r.rows(); ++i)
      for (Eigen::Index j = 0; j < d.r.cols(); ++j) {
        if (d.r(i, j).is_zero()) continue;
        SMatrix m = d.r;
        m(i, j) += Scalar(1);
        ++mutations;
        if (verify_ybe(m, d.parities).result == Verdict::Fail) ++caught;
      }
    o.require(mutations == caught, id + ": " + std::to_string(mutations - caught) + " mutations undetected");
    o.info(id + ": " + std::to_string(caught) + "/" + std::to_string(mutations) + " mutations detected");
  }
  return o;
}

Outcome c2() {
  Outcome o;
  equal_ideals("pres.eq6", derive_group(R("R.glq2"), SignConvention::Ungraded), 2, o, "RTT of R.glq2");
  equal_ideals("pres.eq12", derive_group(R("R.glq2_exotic"), SignConvention::Ungraded), 2, o,
               "RTT of R.glq2_exotic");
  json scans = json::object();
  for (const auto& id : {"R.glq11", "R.glq11_exotic"}) {
    auto d = R(id);
    auto rep = convention_scan(d.r, group_matrix(d), catalog_presentation(d.group_target));
    o.require(rep.passed(), std::string(id) + ": no convention matches " + d.group_target);
    for (const auto& n : rep.notes) o.info(std::string(id) + " " + n);
    scans[id] = to_json(rep);
  }
  golden("convention_scan.json", scans, o);
  return o;
}

Outcome c3() {
  Outcome o;
  equal_ideals("pres.cq2", derive_space(R("R.glq2"), SignConvention::Ungraded), 3, o, "plane of R.glq2");
  equal_ideals("pres.eq11", derive_space(R("R.glq2_exotic"), SignConvention::Ungraded), 3, o,
               "plane of R.glq2_exotic");
  equal_ideals("pres.cq11", derive_space(R("R.glq11"), SignConvention::Ungraded), 3, o,
               "plane of R.glq11");
  equal_ideals("pres.eq21", derive_space(R("R.glq12"), SignConvention::Graded), 3, o, "space of R.glq12");
  auto eq18 = run_pipeline("eq18");
  bool anomaly = false;
  for (const auto& r : eq18.reports) {
    if (r.check != "space-derivation") continue;
    bool mu2 = false;
    for (const auto& x : r.residuals) mu2 = mu2 || x.value == "mu*mu";
    anomaly = r.result == Verdict::Anomaly && mu2;
  }
  o.require(anomaly, "exotic plane of R.glq11_exotic is not reported as the mu^2 anomaly");
  if (anomaly) o.info("R.glq11_exotic: ungraded plane has mu^2 = 0, printed plane has none (anomaly)");
  return o;
}

Outcome c4() {
  Outcome o;
  auto p8 = apply_basis_map(*catalog_get("map.eq7").basis_map);
  equal_ideals("pres.eq8", p8, 3, o, "map.eq7(pres.cq2)");
  auto p23 = apply_basis_map(*catalog_get("map.eq22").basis_map);
  equal_ideals("pres.eq23", p23, 3, o, "map.eq22(pres.eq21)");

  auto d = R("R.glq2");
  d.r = conjugate_R(d.r, cartesian_d());
  d.coordinates = {"p", "r"};
  d.space_precedence = p8.precedence;
  auto rep = ideals_equal_upto_degree(p8, derive_space(d, SignConvention::Ungraded), 2);
  o.require(rep.passed(), "conjugated R.glq2 disagrees with map.eq7");

  auto d3m = SMatrix(3, 3);
  Scalar i = Scalar::imaginary_unit();
  d3m << Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(1), -i, Scalar(0), Scalar(1), i;
  auto e = R("R.glq12");
  e.r = conjugate_R(e.r, d3m);
  e.coordinates = {"x", "xi1", "xi2"};
  e.space_precedence = p23.precedence;
  auto rep2 = ideals_equal_upto_degree(p23, derive_space(e, SignConvention::Graded), 2);
  o.require(rep2.passed(), "conjugated R.glq12 disagrees with map.eq22");
  return o;
}

Outcome c5() {
  Outcome o;
  auto p15 = apply_basis_map(*catalog_get("map.eq14").basis_map);
  equal_ideals("pres.eq15", p15, 3, o, "map.eq14(pres.cq11)");
  equal_ideals("pres.eq16", parameter_limit(p15, "v"), 3, o, "v->0 of map.eq14(pres.cq11)");
  auto p19 = apply_basis_map(*catalog_get("map.eq19").basis_map);
  equal_ideals("pres.eq19_transformed", p19, 2, o, "map.eq19(pres.cq11_exotic) + nu^2");
  equal_ideals("pres.ch11_exotic", parameter_limit(p19, "v"), 3, o, "v->0 of map.eq19");
  return o;
}

Outcome c6() {
  Outcome o;
  for (const auto& id : {"contract.eq8", "contract.eq9", "contract.eq24"}) {
    auto d = *catalog_get(id).contraction;
    auto res = contract(catalog_presentation(d.source), d.scheme, id);
    equal_ideals(d.target, res.presentation, 4, o, id);
  }
  auto q = quotient_set_generator(catalog_presentation("pres.eq24"), "x", Scalar(1));
  equal_ideals("pres.eq25", q.presentation, 4, o, "pres.eq24/{x=1}");
  return o;
}

Presentation mutate(const Presentation& g, std::size_t i) {
  Presentation m = g;
  const auto& r = g.relations[i];
  if (r.terms().size() < 2) {
    m.relations.erase(m.relations.begin() + static_cast<long>(i));
    return m;
  }
  m.relations[i] = r + Element::word(r.alphabet(), r.terms().begin()->first);
  return m;
}

Verdict coaction_verdict(const CoactionSpec& spec) {
  try {
    return coaction_check(spec).result;
  } catch (const Error&) {
    return Verdict::Fail;
  }
}

// A group relation is needed by a coaction when deleting it breaks the check;
// mutations of needed relations must be detected. Mutations of the other
// relations are counted and reported.
Outcome c7() {
  Outcome o;
  for (std::string id : {"coact.eq4", "coact.eq10", "coact.eq13", "coact.eq17", "coact.eq26"}) {
    auto spec = catalog_get(id).coaction->spec;
    o.require(coaction_check(spec).passed(), id + " fails");
    std::size_t n = spec.group.relations.size();
    int needed = 0, caught_needed = 0, caught_other = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CoactionSpec dropped = spec;
      dropped.group.relations.erase(dropped.group.relations.begin() + static_cast<long>(i));
      bool need = coaction_verdict(dropped) == Verdict::Fail;
      CoactionSpec m = spec;
      m.group = mutate(spec.group, i);
      bool caught = coaction_verdict(m) == Verdict::Fail;
      if (need) {
        ++needed;
        caught_needed += caught;
        if (!caught) o.require(false, id + ": mutation of needed group relation " + std::to_string(i) + " undetected");
      } else {
        caught_other += caught;
      }
    }
    o.require(needed > 0, id + ": no group relation is needed");
    o.info(id + ": " + std::to_string(caught_needed) + "/" + std::to_string(needed) +
           " mutations of needed relations detected; " + std::to_string(caught_other) + "/" +
           std::to_string(n - static_cast<std::size_t>(needed)) + " of the remaining relations");
  }
  return o;
}

std::string dims_string(const std::vector<long>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

Outcome c8() {
  Outcome o;
  for (const auto& id : catalog_ids()) {
    auto e = catalog_get(id);
    if (!e.presentation || !e.classical) continue;
    auto expect = oracle::commutative_dims(*e.classical, 4);
    if (classical_dims(*e.classical, 4).dims != expect) o.require(false, id + ": classical model disagrees");
    try {
      auto rs = orient_relations(interreduced(*e.presentation));
      auto conf = confluence_check(rs, 3);
      auto dims = hilbert_dims(rs, 4);
      o.require(conf.passed(), id + ": not confluent at degree 3 (" + std::to_string(conf.residuals.size()) +
                                   " unresolved ambiguities)");
      o.require(dims.dims == expect && !dims.upper_bound,
                id + ": normal words " + dims_string(dims.dims) + (dims.upper_bound ? " (upper bound)" : "") +
                    " vs classical " + dims_string(expect));
      if (!conf.passed()) {
        try {
          auto exact = exact_hilbert_dims(*e.presentation, 4);
          o.info(id + ": dimensions after completion " + dims_string(exact.dims));
        } catch (const Error& err) {
          o.info(id + ": completion failed: " + err.what());
        }
      }
    } catch (const Error& err) {
      o.require(false, id + ": " + err.what());
    }
  }
  return o;
}

Outcome c9() {
  Outcome o;
  auto ps = ParameterSet().even("eps").even("v");
  for (const auto& id : {"contract.eq8", "contract.eq9", "contract.eq24"}) {
    auto d = *catalog_get(id).contraction;
    auto src = catalog_presentation(d.source);
    auto lead = contract(src, d.scheme, id).presentation;
    auto nil_scheme = d.scheme;
    nil_scheme.mode = ContractionMode::Nilpotent;
    auto nil = contract(src, nil_scheme, std::string(id) + " nilpotent").presentation;
    o.require(ideals_equal_upto_degree(lead, nil, 4).passed(), std::string(id) + ": nilpotent mode differs");
    auto re = d.scheme;
    re.param_subst[Var::free("q")] = parse_scalar("1 + eps*v + eps^2*v^2/2", ps);
    auto second = contract(src, re, std::string(id) + " reparametrized").presentation;
    o.require(ideals_equal_upto_degree(lead, second, 4).passed(),
              std::string(id) + ": second-order reparametrization changes the result");
  }
  return o;
}

Outcome c10() {
  Outcome o;
  fs::path a = fs::temp_directory_path() / "qsuper_acceptance_a.json";
  fs::path b = fs::temp_directory_path() / "qsuper_acceptance_b.json";
  std::ostringstream sink;
  int ca = run_command({"pipeline", "all", "--quiet", "--json", a.string()}, sink, sink);
  int cb = run_command({"pipeline", "all", "--quiet", "--json", b.string()}, sink, sink);
  o.require(ca == 0 || ca == 3, "pipeline all exit code " + std::to_string(ca));
  o.require(ca == cb, "exit codes differ between runs");
  std::string ja = slurp(a), jb = slurp(b);
  o.require(!ja.empty() && ja == jb, "JSON output differs between runs");
  if (ca == 3) {
    auto j = json::parse(ja);
    for (const auto& r : j.at("reports")) {
      if (r.at("result") != "anomaly") continue;
      bool documented = r.at("check") == "space-derivation" && r.at("objects").size() == 2 &&
                        r.at("objects")[1] == "R.glq11_exotic";
      o.require(documented, "undocumented anomaly in " + r.at("check").get<std::string>());
    }
  }
  golden("pipeline_all.json", json::parse(ja.empty() ? "{}" : ja), o);
  o.info("exit code " + std::to_string(ca));
  fs::remove(a);
  fs::remove(b);
  return o;
}

void write_presentation_goldens() {
  Outcome o;
  for (const auto& id : catalog_ids()) {
    auto e = catalog_get(id);
    if (!e.presentation) continue;
    json j = to_json(*e.presentation);
    j["anchor"] = e.anchor;
    golden("presentations/" + id + ".json", j, o);
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--update-goldens") g_update = true;
    if (a == "--verbose" || a == "-v") verbose = true;
  }
  if (g_update) write_presentation_goldens();

  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"yang-baxter equation and single-entry mutations", c1},
      {"group derivation and convention scan", c2},
      {"space derivation, exotic plane anomaly", c3},
      {"cartesian transforms and conjugated-R routes", c4},
      {"superlinear transforms and limits", c5},
      {"contractions and quotient", c6},
      {"coactions and group mutations", c7},
      {"confluence at degree 3 and classical dimensions", c8},
      {"nilpotent and leading-order contraction agree", c9},
      {"pipeline all: exit code and byte-identical JSON", c10}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[k].first
              << "\n";
    for (const auto& d : o.details)
      if (verbose || !o.ok || d.rfind("info: ", 0) != 0) std::cout << "    " << d << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
