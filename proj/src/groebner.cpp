#include "scrolls/groebner.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scrolls {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  void check() const {
    if (at && Clock::now() > *at) throw BudgetExceeded("wall-time budget exceeded");
  }
};

// Full division: every term of the result is irreducible modulo the
// leading monomials of the divisors. get(k) may return nullptr to skip
// a slot. Quotients, when requested, are indexed like the divisors.
template <typename GetPoly>
Poly divide_full(Poly h, std::size_t ndiv, GetPoly&& get, std::vector<Poly>* quot,
                 GBStats* stats, const Budget& budget, const Deadline& deadline) {
  const RingPtr& ring = h.ring();
  const FieldSpec& field = ring->field();
  std::vector<Term> remainder;
  long steps = 0;
  while (!h.is_zero()) {
    if ((++steps & 1023) == 0) deadline.check();
    const Term lead = h.leading();
    const Poly* divisor = nullptr;
    std::size_t div_idx = 0;
    for (std::size_t k = 0; k < ndiv; ++k) {
      const Poly* g = get(k);
      if (g && !g->is_zero() && g->leading_mono().divides(lead.mono)) {
        divisor = g;
        div_idx = k;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(lead);
      h = h.tail();
      continue;
    }
    Coeff qc = field.div(lead.coeff, divisor->leading_coeff());
    Monomial qm = lead.mono.quotient_by(divisor->leading_mono());
    h = h - divisor->times_term(qc, qm);
    if (stats) {
      ++stats->reductions;
      stats->maxdeg = std::max<int>(stats->maxdeg, static_cast<int>(h.degree()));
    }
    if (h.degree() > budget.max_degree)
      throw BudgetExceeded("intermediate degree " + std::to_string(h.degree()) +
                           " exceeds cap " + std::to_string(budget.max_degree));
    if (quot) (*quot)[div_idx] = (*quot)[div_idx] + Poly::term(ring, qc, qm);
  }
  return Poly::from_terms(ring, std::move(remainder));
}

struct Elem {
  Poly p;
  std::int64_t sugar = 0;
  std::vector<Poly> rep;  // representation over source generators (tracking only)
};

struct PairKey {
  std::int64_t deg;
  std::int64_t sugar;
  int i, j;
  auto operator<=>(const PairKey&) const = default;
};

class Engine {
 public:
  Engine(RingPtr ring, const Budget& budget, bool tracking, std::size_t nsrc)
      : ring_(std::move(ring)),
        field_(ring_->field()),
        budget_(budget),
        deadline_{budget.deadline_from_now()},
        tracking_(tracking),
        nsrc_(nsrc) {}

  void run(const std::vector<Poly>& gens) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (unit_) break;
      if (gens[k].is_zero()) continue;
      std::vector<Poly> rep;
      if (tracking_) {
        rep.assign(nsrc_, Poly::zero(ring_));
        rep[k] = Poly::constant(ring_, 1);
      }
      add_element(gens[k], std::move(rep), gens[k].degree());
    }
    while (!queue_.empty() && !unit_) {
      deadline_.check();
      PairKey key = *queue_.begin();
      queue_.erase(queue_.begin());
      treated_.insert({key.i, key.j});
      if (++stats_.pairs > budget_.max_pairs)
        throw BudgetExceeded("S-pair cap " + std::to_string(budget_.max_pairs) + " exceeded");
      const Elem& fi = basis_[static_cast<std::size_t>(key.i)];
      const Elem& fj = basis_[static_cast<std::size_t>(key.j)];
      const Monomial l = lcm(fi.p.leading_mono(), fj.p.leading_mono());
      if (coprime(fi.p.leading_mono(), fj.p.leading_mono())) continue;
      if (chain_criterion(key.i, key.j, l)) continue;
      const Monomial ui = l.quotient_by(fi.p.leading_mono());
      const Monomial uj = l.quotient_by(fj.p.leading_mono());
      const Coeff inv_i = field_.inv(fi.p.leading_coeff());
      const Coeff inv_j = field_.inv(fj.p.leading_coeff());
      Poly s = fi.p.times_term(inv_i, ui) - fj.p.times_term(inv_j, uj);
      std::vector<Poly> rep;
      if (tracking_) {
        rep.reserve(nsrc_);
        for (std::size_t k = 0; k < nsrc_; ++k)
          rep.push_back(fi.rep[k].times_term(inv_i, ui) - fj.rep[k].times_term(inv_j, uj));
      }
      std::int64_t sugar = std::max(fi.sugar + ui.degree(), fj.sugar + uj.degree());
      add_element(std::move(s), std::move(rep), sugar);
    }
    interreduce();
  }

  std::vector<Poly> take_elements() {
    std::vector<Poly> out;
    out.reserve(basis_.size());
    for (auto& e : basis_) out.push_back(std::move(e.p));
    return out;
  }
  std::vector<std::vector<Poly>> take_reps() {
    std::vector<std::vector<Poly>> out;
    out.reserve(basis_.size());
    for (auto& e : basis_) out.push_back(std::move(e.rep));
    return out;
  }
  const GBStats& stats() const { return stats_; }

 private:
  void add_element(Poly h, std::vector<Poly> rep, std::int64_t sugar) {
    std::vector<Poly> quot;
    if (tracking_) quot.assign(basis_.size(), Poly::zero(ring_));
    h = divide_full(
        std::move(h), basis_.size(), [&](std::size_t k) { return &basis_[k].p; },
        tracking_ ? &quot : nullptr, &stats_, budget_, deadline_);
    if (h.is_zero()) return;
    if (tracking_) {
      for (std::size_t b = 0; b < basis_.size(); ++b)
        if (!quot[b].is_zero())
          for (std::size_t k = 0; k < nsrc_; ++k)
            rep[k] = rep[k] - quot[b] * basis_[b].rep[k];
    }
    Poly n = normalize_for_basis(h);
    if (tracking_) {
      Coeff scale = field_.div(n.leading_coeff(), h.leading_coeff());
      for (auto& r : rep) r = r.scaled(scale);
    }
    stats_.maxdeg = std::max<int>(stats_.maxdeg, static_cast<int>(n.degree()));
    if (n.is_constant()) {
      // Unit ideal: the reduced basis is {1}.
      Poly one = make_monic(n);
      if (tracking_) {
        Coeff scale = field_.inv(n.leading_coeff());
        for (auto& r : rep) r = r.scaled(scale);
      }
      basis_.clear();
      basis_.push_back({std::move(one), 0, std::move(rep)});
      queue_.clear();
      treated_.clear();
      unit_ = true;
      return;
    }
    const int t = static_cast<int>(basis_.size());
    basis_.push_back({std::move(n), sugar, std::move(rep)});
    for (int i = 0; i < t; ++i) {
      const Monomial l = lcm(basis_[static_cast<std::size_t>(i)].p.leading_mono(),
                             basis_[static_cast<std::size_t>(t)].p.leading_mono());
      std::int64_t sug =
          std::max(basis_[static_cast<std::size_t>(i)].sugar +
                       l.degree() - basis_[static_cast<std::size_t>(i)].p.leading_mono().degree(),
                   basis_[static_cast<std::size_t>(t)].sugar +
                       l.degree() - basis_[static_cast<std::size_t>(t)].p.leading_mono().degree());
      queue_.insert({l.degree(), sug, i, t});
    }
  }

  bool treated(int a, int b) const {
    return treated_.count({std::min(a, b), std::max(a, b)}) > 0;
  }

  // Classical second criterion: skip (i,j) when some k with LM_k | lcm
  // has both flanking pairs already handled.
  bool chain_criterion(int i, int j, const Monomial& l) const {
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == i || k == j) continue;
      if (!basis_[static_cast<std::size_t>(k)].p.leading_mono().divides(l)) continue;
      if (treated(i, k) && treated(j, k)) return true;
    }
    return false;
  }

  void interreduce() {
    const MonomialOrder& ord = ring_->order();
    std::sort(basis_.begin(), basis_.end(), [&](const Elem& a, const Elem& b) {
      return ord.less(a.p.leading_mono(), b.p.leading_mono());
    });
    std::vector<Elem> kept;
    for (auto& e : basis_) {
      bool redundant = false;
      for (const auto& k : kept)
        if (k.p.leading_mono().divides(e.p.leading_mono())) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(e));
    }
    basis_ = std::move(kept);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::vector<Poly> quot;
      if (tracking_) quot.assign(basis_.size(), Poly::zero(ring_));
      Poly reduced = divide_full(
          basis_[k].p, basis_.size(),
          [&](std::size_t m) { return m == k ? nullptr : &basis_[m].p; },
          tracking_ ? &quot : nullptr, &stats_, budget_, deadline_);
      if (tracking_) {
        for (std::size_t b = 0; b < basis_.size(); ++b)
          if (!quot[b].is_zero())
            for (std::size_t s = 0; s < nsrc_; ++s)
              basis_[k].rep[s] = basis_[k].rep[s] - quot[b] * basis_[b].rep[s];
      }
      basis_[k].p = std::move(reduced);
    }
    for (auto& e : basis_) {
      if (e.p.is_zero()) continue;
      Coeff inv = field_.inv(e.p.leading_coeff());
      e.p = make_monic(e.p);
      if (tracking_)
        for (auto& r : e.rep) r = r.scaled(inv);
    }
  }

  RingPtr ring_;
  const FieldSpec& field_;
  Budget budget_;
  Deadline deadline_;
  bool tracking_;
  std::size_t nsrc_;
  std::vector<Elem> basis_;
  std::set<PairKey> queue_;
  std::set<std::pair<int, int>> treated_;
  GBStats stats_;
  bool unit_ = false;
};

RingPtr common_ring(const std::vector<Poly>& gens) {
  if (gens.empty()) throw InvalidSpec("no generators given");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens) require_same_ring(gens.front(), g);
  return ring;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const Budget& budget) {
  RingPtr ring = common_ring(gens);
  Engine engine(ring, budget, /*tracking=*/false, gens.size());
  engine.run(gens);
  return GroebnerBasis(ring, engine.take_elements(), engine.stats(), gens.size());
}

GroebnerBasis buchberger(const GeneratorSet& gens, const Budget& budget) {
  if (gens.polys.empty())
    return GroebnerBasis(gens.ring, {}, GBStats{}, 0);
  return buchberger(gens.polys, budget);
}

GroebnerBasis buchberger(const GeneratorSet& gens, const MonomialOrder& order,
                         const Budget& budget) {
  if (gens.ring->order() == order) return buchberger(gens, budget);
  RingPtr reordered = with_order(gens.ring, order);
  std::vector<Poly> moved;
  moved.reserve(gens.polys.size());
  for (const auto& p : gens.polys) moved.push_back(Poly::from_terms(reordered, p.terms()));
  if (moved.empty()) return GroebnerBasis(reordered, {}, GBStats{}, 0);
  return buchberger(moved, budget);
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (!f.ring()->same_structure(*gb.ring()))
    throw RingMismatch("polynomial and basis live in different rings");
  // Division always terminates; only lex tails can raise the degree, so
  // no degree cap applies here.
  Budget budget;
  budget.max_degree = std::numeric_limits<int>::max() / 2;
  GBStats stats;
  const auto& elems = gb.elements();
  return divide_full(
      f, elems.size(), [&](std::size_t k) { return &elems[k]; }, nullptr, &stats, budget,
      Deadline{});
}

MembershipVerdict ideal_member(const Poly& f, const GeneratorSet& gens, const Budget& budget,
                               bool want_certificate) {
  if (!f.ring()->same_structure(*gens.ring))
    throw RingMismatch("polynomial and generators live in different rings");
  if (gens.polys.empty()) return {f.is_zero(), std::nullopt, "zero ideal"};
  Engine engine(gens.ring, budget, want_certificate, gens.polys.size());
  engine.run(gens.polys);
  std::vector<Poly> elems = engine.take_elements();
  GBStats stats = engine.stats();
  std::vector<Poly> quot(elems.size(), Poly::zero(gens.ring));
  Deadline deadline{budget.deadline_from_now()};
  Poly r = divide_full(
      f, elems.size(), [&](std::size_t k) { return &elems[k]; },
      want_certificate ? &quot : nullptr, &stats, budget, deadline);
  MembershipVerdict verdict;
  verdict.member = r.is_zero();
  if (verdict.member && want_certificate) {
    auto reps = engine.take_reps();
    std::vector<Poly> cof(gens.polys.size(), Poly::zero(gens.ring));
    for (std::size_t m = 0; m < elems.size(); ++m)
      if (!quot[m].is_zero())
        for (std::size_t k = 0; k < gens.polys.size(); ++k)
          cof[k] = cof[k] + quot[m] * reps[m][k];
    Poly check = Poly::zero(gens.ring);
    for (std::size_t k = 0; k < gens.polys.size(); ++k)
      check = check + cof[k] * gens.polys[k];
    if (check != f) throw Error("cofactor certificate failed to re-expand");
    verdict.cofactors = std::move(cof);
    verdict.note = "certificate re-expands to f";
  }
  return verdict;
}

MembershipVerdict radical_member(const Poly& f, const GeneratorSet& gens, const Budget& budget) {
  if (!f.ring()->same_structure(*gens.ring))
    throw RingMismatch("polynomial and generators live in different rings");
  if (f.is_zero()) return {true, std::nullopt, "zero is in every radical"};
  const RingPtr& ring = gens.ring;
  std::string fresh = "t";
  for (int suffix = 0; ring->find_var(fresh); ++suffix) fresh = "t" + std::to_string(suffix);
  std::vector<std::string> names = ring->var_names();
  names.push_back(fresh);
  RingPtr ext = make_ring(ring->field(), MonomialOrder{OrderKind::DegRevLex, {}},
                          std::move(names));
  std::vector<Poly> lifted;
  lifted.reserve(gens.polys.size() + 1);
  for (const auto& g : gens.polys) lifted.push_back(g.lift_to(ext));
  Poly t = Poly::variable(ext, ext->nvars() - 1);
  lifted.push_back(Poly::constant(ext, 1) - t * f.lift_to(ext));
  GroebnerBasis gb = buchberger(lifted, budget);
  MembershipVerdict verdict;
  verdict.member = gb.is_unit_ideal();
  verdict.note = verdict.member ? "1 in basis of gens + (1 - t*f)"
                                : "gens + (1 - t*f) is a proper ideal";
  return verdict;
}

std::optional<std::vector<long long>> find_separating_point(const std::vector<Poly>& vanish,
                                                            const Poly& nonzero) {
  const RingPtr& ring = nonzero.ring();
  const std::size_t n = ring->nvars();
  if (n > 10) return std::nullopt;
  const FieldSpec& field = ring->field();
  static constexpr long long kValues[3] = {1, -1, 0};
  std::vector<std::size_t> digit(n, 0);
  std::vector<Coeff> point(n, field.from_long(1));
  for (;;) {
    bool all_vanish = true;
    for (const auto& g : vanish)
      if (!g.eval(point).is_zero()) {
        all_vanish = false;
        break;
      }
    if (all_vanish && !nonzero.eval(point).is_zero()) {
      std::vector<long long> coords(n);
      for (std::size_t i = 0; i < n; ++i) coords[i] = kValues[digit[i]];
      return coords;
    }
    // odometer, last coordinate fastest
    std::size_t pos = n;
    while (pos-- > 0) {
      if (++digit[pos] < 3) {
        point[pos] = field.from_long(kValues[digit[pos]]);
        break;
      }
      digit[pos] = 0;
      point[pos] = field.from_long(kValues[0]);
      if (pos == 0) return std::nullopt;
    }
  }
}

Report radical_contains(const GeneratorSet& sub, const GeneratorSet& sup, const Budget& budget,
                        const std::string& check_prefix) {
  if (!sub.ring->same_structure(*sup.ring))
    throw RingMismatch("generator sets live in different rings");
  const int n = static_cast<int>(sub.polys.size());
  std::vector<Verdict> verdicts(static_cast<std::size_t>(n), Verdict::Pass);
  std::vector<double> millis(static_cast<std::size_t>(n), 0.0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    const auto t0 = Clock::now();
    try {
      auto mv = radical_member(sub.polys[static_cast<std::size_t>(k)], sup, budget);
      verdicts[static_cast<std::size_t>(k)] = mv.member ? Verdict::Pass : Verdict::Fail;
    } catch (const BudgetExceeded&) {
      verdicts[static_cast<std::size_t>(k)] = Verdict::Budget;
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
    millis[static_cast<std::size_t>(k)] =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Report report;
  for (int k = 0; k < n; ++k) {
    CheckRecord rec;
    rec.check = check_prefix + "[" + std::to_string(k) + "]";
    rec.params = {{"generator", sub.polys[static_cast<std::size_t>(k)].str()}};
    rec.verdict = verdicts[static_cast<std::size_t>(k)];
    rec.method = "rabinowitsch";
    rec.millis = millis[static_cast<std::size_t>(k)];
    if (rec.verdict == Verdict::Fail) {
      Witness w;
      w.poly = sub.polys[static_cast<std::size_t>(k)].str();
      if (auto pt = find_separating_point(sup.polys, sub.polys[static_cast<std::size_t>(k)]))
        w.point = PointWitness{*pt, sub.polys[static_cast<std::size_t>(k)].str()};
      rec.witness = std::move(w);
    }
    report.add(std::move(rec));
  }
  return report;
}

int ideal_dimension(const GeneratorSet& gens, const Budget& budget) {
  const std::size_t n = gens.ring->nvars();
  if (n > 16) throw BudgetExceeded("dimension search needs at most 16 variables");
  GroebnerBasis gb = buchberger(gens, budget);
  std::vector<std::uint32_t> masks;
  masks.reserve(gb.elements().size());
  for (const auto& g : gb.elements()) masks.push_back(g.leading_mono().support_mask());
  int best = -1;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    bool independent = true;
    for (std::uint32_t m : masks)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace scrolls
