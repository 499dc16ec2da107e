#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scrolls/errors.hpp"

namespace scrolls {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  static Monomial of(std::vector<std::int32_t> exps);

  std::size_t nvars() const { return e_.size(); }
  std::int32_t exp(std::size_t i) const { return e_[i]; }
  const std::vector<std::int32_t>& exps() const { return e_; }
  std::int64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& m) const;
  bool divides(const Monomial& m) const;
  /// this / m; requires m.divides(*this).
  Monomial quotient_by(const Monomial& m) const;

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return !(*this == m); }

  /// Bitmask of variables with positive exponent (nvars <= 31).
  std::uint32_t support_mask() const;

 private:
  std::vector<std::int32_t> e_;
  std::int64_t deg_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { DegRevLex, Lex };

/// Total, multiplicative monomial order with 1 minimal. An optional
/// variable permutation is applied before comparison: position k reads
/// exponent perm[k], so perm lists variables from most to least significant.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  std::vector<int> perm;  // empty = identity

  /// +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;
  std::string str() const;
  static MonomialOrder parse(std::string_view text);  // "degrevlex" | "lex"
};

}  // namespace scrolls
