#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "scrolls/errors.hpp"

namespace scrolls {

enum class FieldKind { Rationals, PrimeField };

/// Deterministic primality test for 32-bit inputs (Miller-Rabin with a
/// base set proven exact below 3'215'031'751).
bool is_prime_u32(std::uint32_t n);

class Coeff;

/// Coefficient field: exact rationals or a prime field F_p with p < 2^31,
/// so that residue products fit in 64-bit intermediates.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q" or "Fp:<prime>".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
  std::uint32_t modulus() const { return p_; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const {
    return kind_ == FieldKind::PrimeField ? p_ : 0;
  }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;

  Coeff zero() const;
  Coeff one() const;
  Coeff from_long(long v) const;
  /// num/den mapped into the field; den must be invertible.
  Coeff from_ratio(const mpz_class& num, const mpz_class& den) const;
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff pow(const Coeff& a, unsigned long e) const;
  std::string str(const Coeff& a) const;

 private:
  FieldSpec(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

/// A single field element. Which alternative is active is fixed by the
/// ring a value belongs to; all arithmetic goes through FieldSpec.
class Coeff {
 public:
  Coeff() : v_(std::uint64_t{0}) {}

  bool is_zero() const;
  bool operator==(const Coeff& other) const;
  bool operator!=(const Coeff& other) const { return !(*this == other); }

  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }

 private:
  friend class FieldSpec;
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}
  explicit Coeff(std::uint64_t r) : v_(r) {}
  std::variant<mpq_class, std::uint64_t> v_;
};

inline Coeff FieldSpec::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

}  // namespace scrolls
