#include <doctest.h>

#include <random>

#include "scrolls/groebner.hpp"
#include "scrolls/parse.hpp"

using namespace scrolls;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

// Test-local full division, independent of the engine internals: always
// reduces by the first listed divisor whose leading monomial divides the
// current lead.
Poly reduce_by(Poly h, const std::vector<Poly>& divisors) {
  const RingPtr& ring = h.ring();
  const FieldSpec& field = ring->field();
  Poly remainder = Poly::zero(ring);
  while (!h.is_zero()) {
    bool hit = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !g.leading_mono().divides(h.leading_mono())) continue;
      Coeff qc = field.div(h.leading_coeff(), g.leading_coeff());
      Monomial qm = h.leading_mono().quotient_by(g.leading_mono());
      h = h - g.times_term(qc, qm);
      hit = true;
      break;
    }
    if (!hit) {
      remainder = remainder + Poly::term(ring, h.leading_coeff(), h.leading_mono());
      h = h.tail();
    }
  }
  return remainder;
}

Poly spoly_of(const Poly& f, const Poly& g) {
  const FieldSpec& field = f.ring()->field();
  const Monomial l = lcm(f.leading_mono(), g.leading_mono());
  return f.times_term(field.inv(f.leading_coeff()), l.quotient_by(f.leading_mono())) -
         g.times_term(field.inv(g.leading_coeff()), l.quotient_by(g.leading_mono()));
}

GeneratorSet as_set(const RingPtr& ring, const std::vector<std::string>& texts) {
  GeneratorSet gs{SetName::FullMinors, {}, ring, {}};
  for (const auto& t : texts) gs.polys.push_back(parse_poly(t, ring));
  return gs;
}

bool same_ideal_basis(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("buchberger on principal and monomial ideals") {
  auto ring = make_scroll_ring(BlockSpec{{2}}, kQ);
  GeneratorSet principal = as_set(ring, {"x0*x2 - x1^2"});
  GroebnerBasis gb = buchberger(principal);
  REQUIRE(gb.elements().size() == 1);
  CHECK(gb.elements()[0] == make_monic(principal.polys[0]));
  CHECK(normal_form(principal.polys[0], gb).is_zero());

  auto ring1 = make_scroll_ring(BlockSpec{{1}}, kQ, {}, /*canonical_names=*/true);
  GeneratorSet monomials = as_set(ring1, {"x1_0", "x1_1"});
  GroebnerBasis gb1 = buchberger(monomials);
  CHECK(same_ideal_basis(gb1.elements(), monomials.polys));
}

TEST_CASE("the prefix-minor set S_3 is its own basis") {
  // Oracle: all three pairwise S-polynomials reduce to zero under plain
  // division by the set itself.
  GeneratorSet s3 = gens_family(FamilyKind::S, 3, 1, 3, 1, kQ);
  REQUIRE(s3.size() == 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      CHECK(reduce_by(spoly_of(s3.polys[a], s3.polys[b]), s3.polys).is_zero());
  GroebnerBasis gb = buchberger(s3);
  std::vector<Poly> monic;
  for (const auto& g : s3.polys) monic.push_back(make_monic(g));
  CHECK(same_ideal_basis(gb.elements(), monic));
}

TEST_CASE("normal forms") {
  GeneratorSet s3 = gens_family(FamilyKind::S, 3, 1, 3, 1, kQ);
  GroebnerBasis gb = buchberger(s3);
  for (const auto& g : s3.polys) CHECK(normal_form(g, gb).is_zero());
  // x0^{d-1} x_d - x_1^d lies in (S_d) for d = 3
  Poly f = parse_poly("x0^2*x3 - x1^3", s3.ring);
  CHECK(normal_form(f, gb).is_zero());
  // nothing to reduce
  Poly x0 = parse_poly("x0", s3.ring);
  GroebnerBasis gbp = buchberger(as_set(s3.ring, {"x0*x2 - x1^2"}));
  CHECK(normal_form(x0, gbp) == x0);
}

TEST_CASE("exact membership with certificates") {
  GeneratorSet j2 = gens_family(FamilyKind::Jij, 2, 2, 2, 2, kQ);
  Poly f = parse_poly("x1*(x0*y1 - x1*y0)", j2.ring);
  auto verdict = ideal_member(f, j2, {}, /*want_certificate=*/true);
  CHECK(verdict.member);
  REQUIRE(verdict.cofactors.has_value());
  Poly recombined = Poly::zero(j2.ring);
  for (std::size_t k = 0; k < j2.polys.size(); ++k)
    recombined = recombined + (*verdict.cofactors)[k] * j2.polys[k];
  CHECK(recombined == f);

  CHECK(ideal_member(Poly::zero(j2.ring), j2).member);
}

TEST_CASE("non-membership detected by an evaluation witness") {
  // (1,1,1,1,-1,1) kills x0*y1 - x1*y0 but not the J_2 generators, so the
  // minor cannot lie in the ideal (nor its radical).
  GeneratorSet j2 = gens_char_p(2, kQ);
  Poly minor = parse_poly("x0*y1 - x1*y0", j2.ring);
  std::vector<Coeff> witness;
  for (long v : {1, 1, 1, 1, -1, 1}) witness.push_back(kQ.from_long(v));
  for (const auto& g : j2.polys) CHECK(g.eval(witness).is_zero());
  CHECK(minor.eval(witness) == kQ.from_long(-2));
  CHECK_FALSE(ideal_member(minor, j2).member);
  CHECK_FALSE(radical_member(minor, j2).member);
}

TEST_CASE("radical membership via the extended ring") {
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, kQ);
  GeneratorSet reduced = minors_reduced(m);
  Poly f = parse_poly("x1*y2 - x2*y1", reduced.ring);
  CHECK(radical_member(f, reduced).member);
  CHECK_FALSE(ideal_member(f, reduced).member);  // strictly radical, not exact

  auto ring1 = make_scroll_ring(BlockSpec{{1}}, kQ);
  GeneratorSet square = as_set(ring1, {"x0^2"});
  CHECK(radical_member(parse_poly("x0", ring1), square).member);
  CHECK_FALSE(ideal_member(parse_poly("x0", ring1), square).member);
}

TEST_CASE("radical containment reports") {
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, kQ);
  GeneratorSet full = minors_full(m);
  GeneratorSet reduced = minors_reduced(m);
  Report pass = radical_contains(full, reduced);
  CHECK(pass.overall() == Verdict::Pass);
  CHECK(pass.records.size() == 6);

  Report trivial = radical_contains(reduced, reduced);
  CHECK(trivial.overall() == Verdict::Pass);

  GeneratorSet charp = gens_char_p(2, kQ);
  Report fail = radical_contains(full, charp);
  CHECK(fail.overall() == Verdict::Fail);
  bool witnessed = false;
  for (const auto& rec : fail.records)
    if (rec.verdict == Verdict::Fail && rec.witness && rec.witness->poly == "x0*y1 - x1*y0")
      witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("combinatorial dimension") {
  ScrollMatrix m22 = build_matrix(BlockSpec{{2, 2}}, kQ);
  CHECK(ideal_dimension(minors_full(m22)) == 3);  // height 3 = 6 - 3
  ScrollMatrix m32 = build_matrix(BlockSpec{{3, 2}}, kQ);
  CHECK(ideal_dimension(minors_full(m32)) == 3);  // height 4 = 7 - 3

  auto ring3 = make_scroll_ring(BlockSpec{{2}}, kQ);
  CHECK(ideal_dimension(as_set(ring3, {"x0*x2 - x1^2"})) == 2);  // hypersurface
  CHECK(ideal_dimension(as_set(ring3, {"x0", "x1", "x2"})) == 0);
  CHECK(ideal_dimension(as_set(ring3, {"1"})) == -1);
  GeneratorSet none{SetName::FullMinors, {}, ring3, {}};
  CHECK(ideal_dimension(none) == 3);  // zero ideal

  // order-independent: lex and degrevlex bases give the same dimension
  GroebnerBasis lex_gb = buchberger(minors_full(m22), MonomialOrder{OrderKind::Lex, {}});
  GeneratorSet lex_set{SetName::FullMinors, {}, lex_gb.ring(), lex_gb.elements()};
  CHECK(ideal_dimension(lex_set) == 3);
}

TEST_CASE("basis idempotence and determinism") {
  for (const BlockSpec& spec : {BlockSpec{{2, 2}}, BlockSpec{{3, 2}}, BlockSpec{{2, 1, 2}}}) {
    ScrollMatrix m = build_matrix(spec, kQ);
    GeneratorSet full = minors_full(m);
    GroebnerBasis gb = buchberger(full);
    GeneratorSet again{SetName::FullMinors, {}, full.ring, gb.elements()};
    GroebnerBasis gb2 = buchberger(again);
    CHECK(gb2.elements() == gb.elements());
    // identical inputs give identical bases and statistics
    GroebnerBasis gb3 = buchberger(full);
    CHECK(gb3.elements() == gb.elements());
    CHECK(gb3.stats().pairs == gb.stats().pairs);
    CHECK(gb3.stats().reductions == gb.stats().reductions);
  }
}

TEST_CASE("normal-form difference lies in the ideal") {
  std::mt19937 rng(5);
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, kQ);
  GeneratorSet full = minors_full(m);
  GroebnerBasis gb = buchberger(full);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(full.size()) - 1);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int round = 0; round < 10; ++round) {
    Poly f = Poly::constant(full.ring, coef(rng));
    for (int k = 0; k < 3; ++k) {
      Poly multiplier = Poly::variable(full.ring, static_cast<std::size_t>(pick(rng))) +
                        Poly::constant(full.ring, coef(rng));
      f = f + multiplier * full.polys[static_cast<std::size_t>(pick(rng))];
    }
    Poly nf = normal_form(f, gb);
    CHECK(ideal_member(f - nf, full).member);
  }
}

TEST_CASE("exact membership implies radical membership") {
  GeneratorSet j2 = gens_family(FamilyKind::Jcd, 2, 2, 2, 2, kQ);
  for (const auto& g : j2.polys) {
    CHECK(ideal_member(g, j2).member);
    CHECK(radical_member(g, j2).member);
  }
  Poly combo = j2.polys[0] * j2.polys[1] + j2.polys[2];
  CHECK(ideal_member(combo, j2).member);
  CHECK(radical_member(combo, j2).member);
}

TEST_CASE("budgets abort instead of lying") {
  ScrollMatrix m = build_matrix(BlockSpec{{3, 3}}, kQ);
  GeneratorSet full = minors_full(m);
  Budget tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(full, tiny), BudgetExceeded);
  Budget flat;
  flat.max_degree = 1;
  CHECK_THROWS_AS(buchberger(full, flat), BudgetExceeded);
  Budget expired;
  expired.wall = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(buchberger(full, expired), BudgetExceeded);
}

TEST_CASE("unit ideal collapses to {1}") {
  auto ring = make_scroll_ring(BlockSpec{{2}}, kQ);
  GeneratorSet gs = as_set(ring, {"x0*x2 - x1^2", "5"});
  GroebnerBasis gb = buchberger(gs);
  CHECK(gb.is_unit_ideal());
  CHECK(gb.elements().size() == 1);
  CHECK(gb.elements()[0].is_one());
}
