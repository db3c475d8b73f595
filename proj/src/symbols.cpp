#include "qsuper/symbols.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "qsuper/errors.hpp"

namespace qsuper {

namespace {

struct Info {
  std::string name;
  ParamKind kind;
  int order;
};

struct Table {
  std::mutex mu;
  std::deque<Info> infos;  // stable addresses
  std::map<std::tuple<std::string, ParamKind, int>, std::uint32_t> index;
};

Table& table() {
  static Table t;
  return t;
}

const Info& info(std::uint32_t id) {
  Table& t = table();
  std::lock_guard lock(t.mu);
  return t.infos.at(id);
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::IndeterminateValuation: return "IndeterminateValuation";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::NonSquareTensorDim: return "NonSquareTensorDim";
    case ErrorKind::SingularTransform: return "SingularTransform";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorKind::GeneratorMismatch: return "GeneratorMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::DivisionByGeneratorExpression: return "DivisionByGeneratorExpression";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TruncationTooLow: return "TruncationTooLow";
  }
  return "Error";
}

Var Var::intern(std::string_view name, ParamKind kind, int order) {
  if (kind == ParamKind::EvenNilpotent && order < 2)
    throw Error(ErrorKind::InvalidArgument,
                "nilpotent truncation order must be >= 2 for " + std::string(name));
  if (kind != ParamKind::EvenNilpotent) order = 0;
  Table& t = table();
  std::lock_guard lock(t.mu);
  auto key = std::make_tuple(std::string(name), kind, order);
  if (auto it = t.index.find(key); it != t.index.end()) return Var(it->second);
  auto id = static_cast<std::uint32_t>(t.infos.size());
  t.infos.push_back({std::string(name), kind, order});
  t.index.emplace(std::move(key), id);
  return Var(id);
}

const std::string& Var::name() const { return info(id_).name; }
ParamKind Var::kind() const { return info(id_).kind; }
int Var::order() const { return info(id_).order; }

bool name_less(Var a, Var b) {
  if (a == b) return false;
  const Info& ia = info(a.id());
  const Info& ib = info(b.id());
  return std::tie(ia.name, ia.kind, ia.order) < std::tie(ib.name, ib.kind, ib.order);
}

}  // namespace qsuper
