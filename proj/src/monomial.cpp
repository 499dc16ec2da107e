#include "scrolls/monomial.hpp"

#include <numeric>

namespace scrolls {

Monomial Monomial::of(std::vector<std::int32_t> exps) {
  Monomial m;
  m.deg_ = std::accumulate(exps.begin(), exps.end(), std::int64_t{0});
  m.e_ = std::move(exps);
  return m;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial r;
  r.e_.resize(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + m.e_[i];
  r.deg_ = deg_ + m.deg_;
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  if (deg_ > m.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& m) const {
  Monomial r;
  r.e_.resize(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - m.e_[i];
  r.deg_ = deg_ - m.deg_;
  return r;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) mask |= (1u << i);
  return mask;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::int32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
  return Monomial::of(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exp(i) > 0 && b.exp(i) > 0) return false;
  return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  auto at = [&](const Monomial& m, std::size_t k) {
    return perm.empty() ? m.exp(k) : m.exp(static_cast<std::size_t>(perm[k]));
  };
  if (kind == OrderKind::DegRevLex) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    // Equal degree: the rightmost difference decides, smaller exponent wins.
    for (std::size_t k = n; k-- > 0;) {
      std::int32_t d = at(a, k) - at(b, k);
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::int32_t d = at(a, k) - at(b, k);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::str() const {
  return kind == OrderKind::DegRevLex ? "degrevlex" : "lex";
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "degrevlex") return {OrderKind::DegRevLex, {}};
  if (text == "lex") return {OrderKind::Lex, {}};
  throw InvalidSpec("order must be 'degrevlex' or 'lex', got '" + std::string(text) + "'");
}

}  // namespace scrolls
