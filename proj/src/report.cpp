#include "qsuper/report.hpp"

namespace qsuper {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Anomaly: return "anomaly";
  }
  return "fail";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Anomaly || b == Verdict::Anomaly) return Verdict::Anomaly;
  return Verdict::Pass;
}

}  // namespace qsuper
