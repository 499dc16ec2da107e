#pragma once

#include <span>
#include <string>
#include <vector>

#include "scrolls/ring.hpp"

namespace scrolls {

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Sparse distributed polynomial. Invariants: no zero coefficients,
/// pairwise distinct monomials, terms strictly descending in the ring's
/// ambient order; the zero polynomial has no terms.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, long value);
  static Poly constant(RingPtr ring, Coeff value);
  static Poly variable(RingPtr ring, std::size_t index, std::int32_t exp = 1);
  static Poly term(RingPtr ring, Coeff coeff, Monomial mono);
  /// Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
  bool is_one() const;
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return terms_.empty() ? -1 : max_degree_(); }

  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_mono() const { return terms_.front().mono; }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }
  /// Everything but the leading term.
  Poly tail() const;

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator-() const;
  Poly operator*(const Poly& g) const;
  Poly scaled(const Coeff& c) const;
  /// this * (c * m), a single-term multiplier.
  Poly times_term(const Coeff& c, const Monomial& m) const;
  Poly pow(unsigned e) const;

  Coeff eval(std::span<const Coeff> point) const;

  /// Re-runs canonicalization (identity on well-formed values).
  Poly normalized() const { return from_terms(ring_, terms_); }
  /// Same terms in a ring that extends this one by trailing variables.
  Poly lift_to(const RingPtr& bigger) const;

  bool operator==(const Poly& g) const;
  bool operator!=(const Poly& g) const { return !(*this == g); }

  std::string str() const;

 private:
  std::int64_t max_degree_() const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Leading coefficient scaled to 1.
Poly make_monic(const Poly& f);
/// Over Q: integer coefficients, content 1, positive leading coefficient.
/// Over F_p: monic. Zero stays zero.
Poly normalize_for_basis(const Poly& f);

void require_same_ring(const Poly& f, const Poly& g);

}  // namespace scrolls
