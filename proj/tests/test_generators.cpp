#include <doctest.h>

#include <algorithm>

#include "scrolls/generators.hpp"
#include "scrolls/parse.hpp"

using namespace scrolls;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::vector<std::string> rendered(const GeneratorSet& gs) { return gs.rendered(); }

// All compositions of n into parts >= 1.
void compositions(int n, std::vector<int>& acc, std::vector<BlockSpec>& out) {
  if (n == 0) {
    if (!acc.empty()) out.push_back(BlockSpec{acc});
    return;
  }
  for (int first = 1; first <= n; ++first) {
    acc.push_back(first);
    compositions(n - first, acc, out);
    acc.pop_back();
  }
}

std::vector<BlockSpec> all_block_specs_up_to(int max_total) {
  std::vector<BlockSpec> out;
  for (int n = 1; n <= max_total; ++n) {
    std::vector<int> acc;
    compositions(n, acc, out);
  }
  return out;
}

}  // namespace

TEST_CASE("block spec validation and parsing") {
  CHECK(BlockSpec::parse("2,2").cols == std::vector<int>{2, 2});
  CHECK(BlockSpec::parse("4,3").nvars() == 9);
  CHECK_THROWS_AS(BlockSpec::parse("2,0"), InvalidSpec);
  CHECK_THROWS_AS(BlockSpec::parse("x"), InvalidSpec);
  CHECK_THROWS_AS(BlockSpec{{}}.validate(), InvalidSpec);
}

TEST_CASE("catalecticant matrix layout") {
  SUBCASE("two blocks (2,2)") {
    ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, kQ);
    REQUIRE(m.ncols() == 4);
    // columns (x0,x1),(x1,x2),(y0,y1),(y1,y2)
    CHECK(m.ring->var_name(m.top[0]) == "x0");
    CHECK(m.ring->var_name(m.bot[0]) == "x1");
    CHECK(m.ring->var_name(m.top[1]) == "x1");
    CHECK(m.ring->var_name(m.bot[1]) == "x2");
    CHECK(m.ring->var_name(m.top[2]) == "y0");
    CHECK(m.ring->var_name(m.bot[3]) == "y2");
  }
  SUBCASE("single one-column block") {
    ScrollMatrix m = build_matrix(BlockSpec{{1}}, kQ);
    REQUIRE(m.ncols() == 1);
    CHECK(m.ring->var_name(m.top[0]) == "x0");
    CHECK(m.ring->var_name(m.bot[0]) == "x1");
  }
  SUBCASE("(4,3) shape") {
    ScrollMatrix m = build_matrix(BlockSpec{{4, 3}}, kQ);
    REQUIRE(m.ncols() == 7);
    CHECK(m.ring->nvars() == 9);
    CHECK(m.ring->var_name(m.top[4]) == "y0");
    CHECK(m.ring->var_name(m.bot[6]) == "y3");
  }
  SUBCASE("every variable appears at most twice, block ends once") {
    for (const auto& spec : {BlockSpec{{3, 2}}, BlockSpec{{1, 4}}, BlockSpec{{2, 1, 2}}}) {
      ScrollMatrix m = build_matrix(spec, kQ);
      std::vector<int> uses(m.ring->nvars(), 0);
      for (int c = 0; c < m.ncols(); ++c) {
        ++uses[static_cast<std::size_t>(m.top[c])];
        ++uses[static_cast<std::size_t>(m.bot[c])];
      }
      for (int b = 0; b < spec.r(); ++b) {
        CHECK(uses[static_cast<std::size_t>(m.var_index(b, 0))] == 1);
        CHECK(uses[static_cast<std::size_t>(m.var_index(b, spec.cols[b]))] == 1);
      }
      for (int u : uses) CHECK(u <= 2);
    }
  }
}

TEST_CASE("full minors, hand-expanded") {
  // Oracle: expand all C(4,2) column-pair determinants of
  // (x0 x1 | y0 y1 ; x1 x2 | y1 y2) by hand.
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, kQ);
  CHECK(rendered(minors_full(m)) ==
        std::vector<std::string>{"x0*x2 - x1^2", "x0*y1 - x1*y0", "x0*y2 - x1*y1",
                                 "x1*y1 - x2*y0", "x1*y2 - x2*y1", "y0*y2 - y1^2"});
  CHECK(rendered(minors_full(build_matrix(BlockSpec{{1, 1}}, kQ))) ==
        std::vector<std::string>{"x0*y1 - x1*y0"});
  CHECK(rendered(minors_full(build_matrix(BlockSpec{{2}}, kQ))) ==
        std::vector<std::string>{"x0*x2 - x1^2"});
}

TEST_CASE("reduced generating set") {
  CHECK(rendered(minors_reduced(build_matrix(BlockSpec{{2, 2}}, kQ))) ==
        std::vector<std::string>{"x0*x2 - x1^2", "y0*y2 - y1^2", "x0*y2 - x1*y1",
                                 "x1*y1 - x2*y0"});
  // one-column blocks: the two corner minors coincide
  CHECK(rendered(minors_reduced(build_matrix(BlockSpec{{1, 1}}, kQ))) ==
        std::vector<std::string>{"x0*y1 - x1*y0"});
  // (2,2,2): 3 within-block + 2*C(3,2) corner minors
  GeneratorSet r222 = minors_reduced(build_matrix(BlockSpec{{2, 2, 2}}, kQ));
  CHECK(r222.size() == 9);
}

TEST_CASE("reduced is a literal subset of full, all compositions with <= 8 columns") {
  for (const auto& spec : all_block_specs_up_to(8)) {
    ScrollMatrix m = build_matrix(spec, kQ);
    GeneratorSet full = minors_full(m);
    GeneratorSet reduced = minors_reduced(m);
    const long long n = spec.total_cols();
    CHECK(static_cast<long long>(full.size()) == n * (n - 1) / 2);
    for (const auto& g : reduced.polys) {
      CHECK(std::find(full.polys.begin(), full.polys.end(), g) != full.polys.end());
    }
    // distinctness inside the full set
    for (std::size_t a = 0; a < full.polys.size(); ++a)
      for (std::size_t b = a + 1; b < full.polys.size(); ++b)
        CHECK(full.polys[a] != full.polys[b]);
    // Proper subset exactly when some block pair spans more than two
    // cross minors, i.e. c_i * c_j >= 3. Two blocks with >= 2 columns
    // are sufficient (that is the classical remark) but not necessary:
    // (3,1) already drops the middle cross minor.
    bool proper_expected = false;
    for (std::size_t a = 0; a < spec.cols.size(); ++a)
      for (std::size_t b = a + 1; b < spec.cols.size(); ++b)
        if (spec.cols[a] * spec.cols[b] >= 3) proper_expected = true;
    CHECK((reduced.size() < full.size()) == proper_expected);
    const int wide = static_cast<int>(std::count_if(spec.cols.begin(), spec.cols.end(),
                                                    [](int c) { return c >= 2; }));
    if (wide >= 2) CHECK(reduced.size() < full.size());
  }
}

TEST_CASE("prefix families") {
  CHECK(gens_family(FamilyKind::S, 3, 2, 1, 1, kQ).size() == 0);  // S_1 is empty
  CHECK(rendered(gens_family(FamilyKind::T, 2, 3, 1, 3, kQ)) ==
        std::vector<std::string>{"y0*y2 - y1^2", "y0*y3 - y1*y2", "y1*y3 - y2^2"});
  // J_{2,2} at (c,d)=(2,2) coincides with the reduced set
  GeneratorSet j22 = gens_family(FamilyKind::Jcd, 2, 2, 2, 2, kQ);
  CHECK(rendered(j22) == rendered(minors_reduced(build_matrix(BlockSpec{{2, 2}}, kQ))));
  // J_{1,1}: both cross binomials coincide
  CHECK(gens_family(FamilyKind::Jij, 1, 1, 1, 1, kQ).size() == 1);
  CHECK_THROWS_AS(gens_family(FamilyKind::S, 2, 2, 3, 1, kQ), IndexOutOfRange);
  CHECK_THROWS_AS(gens_family(FamilyKind::Jij, 2, 2, 1, 0, kQ), IndexOutOfRange);
}

TEST_CASE("characteristic-p set") {
  CHECK(rendered(gens_char_p(2, kQ)) ==
        std::vector<std::string>{"x0*x2 - x1^2", "y0*y2 - y1^2", "x0*y2 - x2*y0"});
  CHECK(rendered(gens_char_p(1, kQ)) == std::vector<std::string>{"x0*y1 - x1*y0"});
  CHECK(gens_char_p(4, kQ).size() == 13);  // 4*3 + 1
}

TEST_CASE("complete-intersection lists") {
  SUBCASE("(4,3) matches the seven displayed polynomials") {
    CHECK(rendered(gens_stci(4, 3, kQ)) ==
          std::vector<std::string>{
              "x0*x2 - x1^2",
              "x0*x3^2 - 2*x1*x2*x3 + x2^3",
              "x0*x4^3 - 3*x1*x3*x4^2 + 3*x2*x3^2*x4 - x3^4",
              "x0*y1^4 - 4*x1*y0*y1^3 + 6*x2*y0^2*y1^2 - 4*x3*y0^3*y1 + x4*y0^4",
              "y0*y2 - y1^2",
              "y0*y3^2 - 2*y1*y2*y3 + y2^3",
              "x0*y3 - x1*y2",
          });
  }
  SUBCASE("(2,2), expanded by hand from the summation formulas") {
    CHECK(rendered(gens_stci(2, 2, kQ)) ==
          std::vector<std::string>{"x0*x2 - x1^2", "x0*y1^2 - 2*x1*y0*y1 + x2*y0^2",
                                   "y0*y2 - y1^2", "x0*y2 - x1*y1"});
  }
  SUBCASE("F_1 is the first minor for any c >= 2") {
    for (int c = 2; c <= 6; ++c) {
      GeneratorSet stci = gens_stci(c, 2, kQ);
      CHECK(stci.polys[0].str() == "x0*x2 - x1^2");
    }
  }
  SUBCASE("d = 1 gives the c-element list without the cross binomial") {
    GeneratorSet p5 = gens_stci(3, 1, kQ);
    CHECK(p5.size() == 3);
    CHECK(p5.polys[2].str() == "x0*y1^3 - 3*x1*y0*y1^2 + 3*x2*y0^2*y1 - x3*y0^3");
  }
  CHECK_THROWS_AS(gens_stci(1, 2, kQ), InvalidSpec);
}

TEST_CASE("count formulas") {
  for (int c = 1; c <= 4; ++c) {
    for (int d = 1; d <= 4; ++d) {
      ScrollMatrix m = build_matrix(BlockSpec{{c, d}}, kQ);
      const long long n = c + d;
      CHECK(static_cast<long long>(minors_full(m).size()) == n * (n - 1) / 2);
      if (c == d)
        CHECK(static_cast<long long>(gens_char_p(d, kQ).size()) ==
              static_cast<long long>(d) * (d - 1) + 1);
      if (c >= 2 && d >= 2)
        CHECK(static_cast<int>(gens_stci(c, d, kQ).size()) == c + d);
      if (c >= 2 && d == 1) CHECK(static_cast<int>(gens_stci(c, d, kQ).size()) == c);
    }
  }
}

TEST_CASE("F_i vanishes along the moment curve x_k = t^k") {
  auto ring = make_scroll_ring(BlockSpec{{7}}, kQ);
  for (int i = 1; i <= 6; ++i) {
    Poly fi = stci_fi(ring, 0, i);
    for (long t = -3; t <= 3; ++t) {
      std::vector<Coeff> point;
      for (int k = 0; k <= 7; ++k) {
        long v = 1;
        for (int e = 0; e < k; ++e) v *= t;
        point.push_back(kQ.from_long(v));
      }
      CHECK(fi.eval(point).is_zero());
    }
  }
}

TEST_CASE("frobenius power of the short cross binomial over F_p") {
  for (std::uint32_t p : {2u, 3u}) {
    for (int h = 1; p == 2 ? h <= 2 : h <= 1; ++h) {
      int d = 1;
      for (int k = 0; k < h; ++k) d *= static_cast<int>(p);
      const FieldSpec fp = FieldSpec::prime(p);
      TwoBlockRing tb = make_two_block_ring(d, d, fp);
      Poly cross = tb.x(0) * tb.y(d) - tb.x(1) * tb.y(d - 1);
      Poly lhs = cross.pow(static_cast<unsigned>(d));
      Poly rhs = tb.x(0).pow(static_cast<unsigned>(d)) * tb.y(d).pow(static_cast<unsigned>(d)) -
                 tb.x(1).pow(static_cast<unsigned>(d)) *
                     tb.y(d - 1).pow(static_cast<unsigned>(d));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("three-block rings use indexed names") {
  auto ring = make_scroll_ring(BlockSpec{{2, 1, 2}}, kQ);
  CHECK(ring->var_name(0) == "x1_0");
  CHECK(ring->var_name(3) == "x2_0");
  CHECK(ring->nvars() == 8);
  CHECK(ring->find_var("x3_2").has_value());
  CHECK_FALSE(ring->find_var("y0").has_value());
}
