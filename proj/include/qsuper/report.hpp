#pragma once

#include <string>
#include <vector>

namespace qsuper {

enum class Verdict { Pass, Fail, Anomaly };

const char* to_string(Verdict v);

/// Machine-readable outcome of one check. `Pass` implies no residuals;
/// `Anomaly` is reserved for documented discrepancies with the printed source.
struct CheckReport {
  struct Residual {
    std::string location;
    std::string value;
  };

  std::string check;
  std::vector<std::string> objects;
  Verdict result = Verdict::Pass;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;

  bool passed() const { return result == Verdict::Pass; }
  void fail(std::string location, std::string value) {
    result = Verdict::Fail;
    residuals.push_back({std::move(location), std::move(value)});
  }
  void note(std::string n) { notes.push_back(std::move(n)); }
};

/// Combine verdicts: any Fail wins, then Anomaly, else Pass.
Verdict combine(Verdict a, Verdict b);

}  // namespace qsuper
