#pragma once

#include <optional>
#include <string>
#include <vector>

namespace scrolls {

enum class Verdict { Pass, Fail, Budget };

std::string verdict_str(Verdict v);

/// A point with small integer coordinates, read in the ambient field
/// (-1 means p-1 over F_p), together with the polynomial that fails to
/// vanish there. Re-checkable by pure evaluation.
struct PointWitness {
  std::vector<long long> coords;
  std::string nonvanishing;
};

struct Witness {
  std::optional<PointWitness> point;
  std::optional<std::string> poly;
  std::string describe() const;
};

struct CheckRecord {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::Pass;
  /// identity | membership | rabinowitsch | points | count | dimension
  std::string method;
  std::optional<Witness> witness;
  double millis = 0.0;
};

struct Report {
  std::vector<CheckRecord> records;

  Verdict overall() const;
  std::size_t count(Verdict v) const;
  void append(Report other);
  void add(CheckRecord rec) { records.push_back(std::move(rec)); }
};

}  // namespace scrolls
