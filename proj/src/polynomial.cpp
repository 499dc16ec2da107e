#include "scrolls/polynomial.hpp"

#include <algorithm>

namespace scrolls {

void require_same_ring(const Poly& f, const Poly& g) {
  if (f.ring() == g.ring()) return;
  if (!f.ring()->same_structure(*g.ring()))
    throw RingMismatch("operands live in different rings");
}

Poly Poly::constant(RingPtr ring, long value) {
  Coeff c = ring->field().from_long(value);
  return constant(std::move(ring), std::move(c));
}

Poly Poly::constant(RingPtr ring, Coeff value) {
  Poly p(ring);
  if (!value.is_zero()) p.terms_.push_back({std::move(value), Monomial(ring->nvars())});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index, std::int32_t exp) {
  if (index >= ring->nvars()) throw IndexOutOfRange("variable index out of range");
  std::vector<std::int32_t> e(ring->nvars(), 0);
  e[index] = exp;
  Poly p(ring);
  p.terms_.push_back({ring->field().one(), Monomial::of(std::move(e))});
  return p;
}

Poly Poly::term(RingPtr ring, Coeff coeff, Monomial mono) {
  Poly p(ring);
  if (!coeff.is_zero()) p.terms_.push_back({std::move(coeff), std::move(mono)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  Poly p(ring);
  const FieldSpec& field = ring->field();
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() &&
         terms_[0].coeff == ring_->field().one();
}

std::int64_t Poly::max_degree_() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Poly Poly::tail() const {
  Poly r(ring_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Poly Poly::operator+(const Poly& g) const {
  require_same_ring(*this, g);
  const MonomialOrder& ord = ring_->order();
  const FieldSpec& field = ring_->field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int cmp = ord.compare(terms_[i].mono, g.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Coeff c = field.add(terms_[i].coeff, g.terms_[j].coeff);
      if (!c.is_zero()) r.terms_.push_back({std::move(c), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  const FieldSpec& field = ring_->field();
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field.neg(t.coeff), t.mono});
  return r;
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::times_term(const Coeff& c, const Monomial& m) const {
  const FieldSpec& field = ring_->field();
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff cc = field.mul(t.coeff, c);
    if (!cc.is_zero()) r.terms_.push_back({std::move(cc), t.mono.times(m)});
  }
  return r;  // multiplying by a term preserves the ordering
}

Poly Poly::scaled(const Coeff& c) const { return times_term(c, Monomial(ring_->nvars())); }

Poly Poly::operator*(const Poly& g) const {
  require_same_ring(*this, g);
  const FieldSpec& field = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_)
      prod.push_back({field.mul(a.coeff, b.coeff), a.mono.times(b.mono)});
  return from_terms(ring_, std::move(prod));
}

Poly Poly::pow(unsigned e) const {
  Poly acc = constant(ring_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Coeff Poly::eval(std::span<const Coeff> point) const {
  const FieldSpec& field = ring_->field();
  if (point.size() != ring_->nvars()) throw RingMismatch("evaluation point has wrong arity");
  Coeff acc = field.zero();
  for (const auto& t : terms_) {
    Coeff w = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      std::int32_t e = t.mono.exp(i);
      if (e > 0) w = field.mul(w, field.pow(point[i], static_cast<unsigned long>(e)));
    }
    acc = field.add(acc, w);
  }
  return acc;
}

Poly Poly::lift_to(const RingPtr& bigger) const {
  if (bigger->nvars() < ring_->nvars() || bigger->field() != ring_->field())
    throw RingMismatch("target ring does not extend the source ring");
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    if (bigger->var_name(i) != ring_->var_name(i))
      throw RingMismatch("target ring does not extend the source ring");
  std::vector<Term> lifted;
  lifted.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::int32_t> e = t.mono.exps();
    e.resize(bigger->nvars(), 0);
    lifted.push_back({t.coeff, Monomial::of(std::move(e))});
  }
  return from_terms(bigger, std::move(lifted));
}

bool Poly::operator==(const Poly& g) const {
  if (!ring_->same_structure(*g.ring_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != g.terms_[i].mono || !(terms_[i].coeff == g.terms_[i].coeff))
      return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  const FieldSpec& field = ring_->field();
  // Canonical text always lists terms in descending lex order, whatever
  // the ambient computation order is, so "x0*x2 - x1^2" prints the same
  // under degrevlex and lex.
  std::vector<Term> display = terms_;
  const MonomialOrder lex{OrderKind::Lex, {}};
  std::sort(display.begin(), display.end(),
            [&](const Term& a, const Term& b) { return lex.greater(a.mono, b.mono); });
  std::string out;
  bool first = true;
  for (const auto& t : display) {
    std::string c = field.str(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c.erase(0, 1);
    std::string mono;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      std::int32_t e = t.mono.exp(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var_name(i);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

Poly make_monic(const Poly& f) {
  if (f.is_zero()) return f;
  const FieldSpec& field = f.ring()->field();
  if (f.leading_coeff() == field.one()) return f;
  return f.scaled(field.inv(f.leading_coeff()));
}

Poly normalize_for_basis(const Poly& f) {
  if (f.is_zero()) return f;
  const FieldSpec& field = f.ring()->field();
  if (field.is_prime_field()) return make_monic(f);
  // Clear denominators, divide out the content, force a positive lead.
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.rat().get_den().get_mpz_t());
  }
  for (const auto& t : f.terms()) {
    mpz_class n = t.coeff.rat().get_num() * (den_lcm / t.coeff.rat().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.leading_coeff().rat() < 0) scale = -scale;
  return f.scaled(field.from_ratio(scale.get_num(), scale.get_den()));
}

}  // namespace scrolls
