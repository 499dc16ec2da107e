#include "scrolls/report.hpp"

namespace scrolls {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Budget: return "budget";
  }
  return "?";
}

std::string Witness::describe() const {
  std::string s;
  if (point) {
    s += "point (";
    for (std::size_t i = 0; i < point->coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(point->coords[i]);
    }
    s += ") with " + point->nonvanishing + " != 0";
  }
  if (poly) {
    if (!s.empty()) s += "; ";
    s += "polynomial " + *poly;
  }
  return s;
}

Verdict Report::overall() const {
  Verdict v = Verdict::Pass;
  for (const auto& r : records) {
    if (r.verdict == Verdict::Fail) return Verdict::Fail;
    if (r.verdict == Verdict::Budget) v = Verdict::Budget;
  }
  return v;
}

std::size_t Report::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& r : records)
    if (r.verdict == v) ++n;
  return n;
}

void Report::append(Report other) {
  for (auto& r : other.records) records.push_back(std::move(r));
}

}  // namespace scrolls
