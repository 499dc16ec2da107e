#include <doctest.h>

#include "scrolls/parse.hpp"
#include "scrolls/points.hpp"

using namespace scrolls;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

GeneratorSet single(const RingPtr& ring, const std::string& text) {
  GeneratorSet gs{SetName::FullMinors, {}, ring, {}};
  gs.polys.push_back(parse_poly(text, ring));
  return gs;
}

}  // namespace

TEST_CASE("one variable, one generator") {
  auto ring = make_ring(kQ, {}, {"x0"});
  PointSet ps = points_vanishing(single(ring, "x0"), 2);
  REQUIRE(ps.points.size() == 1);
  CHECK(ps.points[0] == std::vector<std::uint32_t>{0});
}

TEST_CASE("parallel kernel matches the serial reference") {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (const BlockSpec& spec : {BlockSpec{{2, 2}}, BlockSpec{{1, 3}}, BlockSpec{{2, 1, 1}}}) {
      const FieldSpec fq = FieldSpec::prime(q);
      ScrollMatrix m = build_matrix(spec, fq);
      GeneratorSet full = minors_full(m);
      PointSet par = points_vanishing(full, q);
      PointSet ser = points_vanishing_serial(full, q);
      CHECK(par == ser);
      // lexicographic, deduplicated
      for (std::size_t k = 0; k + 1 < ser.points.size(); ++k)
        CHECK(ser.points[k] < ser.points[k + 1]);
      // every reported point is a common zero
      for (std::size_t k = 0; k < ser.points.size(); k += 7)
        for (const auto& g : full.polys) CHECK(eval_mod_q(g, ser.points[k], q) == 0);
    }
  }
}

TEST_CASE("vanishing sets over F_2 agree for the square charp pair") {
  const FieldSpec f2 = FieldSpec::prime(2);
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, f2);
  PointSet full = points_vanishing(minors_full(m), 2);
  PointSet charp = points_vanishing(gens_char_p(2, f2), 2);
  CHECK(full == charp);
  CHECK_FALSE(first_difference(full, charp).has_value());
}

TEST_CASE("over F_3 the charp variety is strictly larger") {
  const FieldSpec f3 = FieldSpec::prime(3);
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, f3);
  PointSet full = points_vanishing(minors_full(m), 3);
  PointSet charp = points_vanishing(gens_char_p(2, f3), 3);
  CHECK(full != charp);
  const std::vector<std::uint32_t> witness = {1, 1, 1, 1, 2, 1};
  CHECK(charp.contains(witness));
  CHECK_FALSE(full.contains(witness));
  // every zero of the full minors is a zero of the subset
  CHECK_FALSE(first_difference(full, charp).has_value());
}

TEST_CASE("rational generators reduce mod q") {
  auto ring = make_ring(kQ, {}, {"x0", "x1"});
  GeneratorSet gs = single(ring, "1/3*x0 - x1");
  PointSet ps = points_vanishing(gs, 5);  // x0 = 3 x1 mod 5
  CHECK(ps.points.size() == 5);
  for (const auto& p : ps.points) CHECK(p[0] == 3 * p[1] % 5);
  CHECK_THROWS_AS(points_vanishing(gs, 3), DivisionByZero);
}

TEST_CASE("budget and field preconditions") {
  const FieldSpec f5 = FieldSpec::prime(5);
  ScrollMatrix m = build_matrix(BlockSpec{{3, 3}}, f5);
  GeneratorSet full = minors_full(m);
  Budget tiny;
  tiny.max_points = 1000;  // 5^8 = 390625
  CHECK_THROWS_AS(points_vanishing(full, 5, tiny), BudgetExceeded);
  CHECK_THROWS_AS(points_vanishing(full, 4), InvalidSpec);   // q not prime
  CHECK_THROWS_AS(points_vanishing(full, 3), InvalidSpec);   // wrong characteristic
}

TEST_CASE("radical members vanish on every enumerated zero") {
  // One-sided agreement between the symbolic and the enumeration oracle.
  const FieldSpec f3 = FieldSpec::prime(3);
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, f3);
  GeneratorSet reduced = minors_reduced(m);
  PointSet zeros = points_vanishing(reduced, 3);
  for (const auto& f : minors_full(m).polys) {
    if (!radical_member(f, reduced).member) continue;
    for (const auto& pt : zeros.points) CHECK(eval_mod_q(f, pt, 3) == 0);
  }
}
