#include "scrolls/field.hpp"

#include <charconv>

namespace scrolls {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a * b % m;  // operands < 2^31, product < 2^62
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Modular inverse via the extended Euclidean algorithm.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw DivisionByZero("residue has no inverse mod " + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mpz_mod_u32(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Miller-Rabin, bases {2,3,5,7}: deterministic for n < 3'215'031'751.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw InvalidSpec("modulus " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint32_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) return prime(p);
  }
  throw InvalidSpec("field must be 'Q' or 'Fp:<prime>', got '" + std::string(text) + "'");
}

std::string FieldSpec::str() const {
  return kind_ == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Coeff FieldSpec::zero() const {
  return kind_ == FieldKind::Rationals ? Coeff(mpq_class(0)) : Coeff(std::uint64_t{0});
}

Coeff FieldSpec::one() const {
  return kind_ == FieldKind::Rationals ? Coeff(mpq_class(1)) : Coeff(std::uint64_t{1 % p_});
}

Coeff FieldSpec::from_long(long v) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(v));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Coeff(static_cast<std::uint64_t>(r));
}

Coeff FieldSpec::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (kind_ == FieldKind::Rationals) {
    mpq_class q(num, den);
    q.canonicalize();
    return Coeff(std::move(q));
  }
  std::uint64_t n = mpz_mod_u32(num, p_);
  std::uint64_t d = mpz_mod_u32(den, p_);
  if (d == 0) throw DivisionByZero("denominator vanishes mod " + std::to_string(p_));
  return Coeff(mulmod(n, invmod(d, p_), p_));
}

Coeff FieldSpec::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(a.rat() + b.rat()));
  std::uint64_t s = a.residue() + b.residue();
  if (s >= p_) s -= p_;
  return Coeff(s);
}

Coeff FieldSpec::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(a.rat() - b.rat()));
  std::uint64_t s = a.residue() + p_ - b.residue();
  if (s >= p_) s -= p_;
  return Coeff(s);
}

Coeff FieldSpec::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(a.rat() * b.rat()));
  return Coeff(mulmod(a.residue(), b.residue(), p_));
}

Coeff FieldSpec::neg(const Coeff& a) const {
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(-a.rat()));
  return Coeff(a.residue() == 0 ? 0 : p_ - a.residue());
}

Coeff FieldSpec::inv(const Coeff& a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  if (kind_ == FieldKind::Rationals) return Coeff(mpq_class(1 / a.rat()));
  return Coeff(invmod(a.residue(), p_));
}

Coeff FieldSpec::pow(const Coeff& a, unsigned long e) const {
  Coeff acc = one();
  Coeff base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string FieldSpec::str(const Coeff& a) const {
  if (kind_ == FieldKind::Rationals) return a.rat().get_str();
  return std::to_string(a.residue());
}

bool Coeff::is_zero() const {
  if (std::holds_alternative<std::uint64_t>(v_)) return std::get<std::uint64_t>(v_) == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Coeff::operator==(const Coeff& other) const {
  if (is_zero() && other.is_zero()) return true;
  if (v_.index() != other.v_.index()) return false;
  if (std::holds_alternative<std::uint64_t>(v_))
    return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(other.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(other.v_);
}

}  // namespace scrolls
