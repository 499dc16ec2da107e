#pragma once

#include "scrolls/generators.hpp"
#include "scrolls/groebner.hpp"
#include "scrolls/points.hpp"
#include "scrolls/report.hpp"

namespace scrolls {

/// The auxiliary product identities behind the radical-containment
/// arguments, each expanded exactly to the zero polynomial: the degree-2
/// base identity, eq1 (3 <= i <= c), eq3 (2 <= j <= d), eq4 (3 <= j <= d),
/// eqa, eq7 (2 <= i <= c-1) and eq8 (1 <= i <= c-1, d >= 2), over the
/// given field.
Report check_identity_suite(int c, int d, const FieldSpec& field);

/// x_1^{i-1} (x_0 y_1 - x_1 y_0)^{i-1} lies in J_{i,d}, exactly, for
/// every i in 2..c.
Report check_lemma1(int c, int d, const FieldSpec& field, const Budget& budget = {});

/// J_{c,j-1} is contained in Rad(J_{c,j}) for every j in 2..d, plus the
/// single cross binomial x_0 y_{j-1} - x_1 y_{j-2} as its own record.
Report check_lemma2(int c, int d, const FieldSpec& field, const Budget& budget = {});

/// The congruences modulo (S_d), (T_d) and J_d: the stepping stones
/// x_0^{d-1} x_d = x_1^k x_{d-k} x_0^{d-k-1} for k < d, their endpoints,
/// and x_0^d y_d^d = x_1^d y_{d-1}^d with its mirror image.
Report check_lemma3(int d, const FieldSpec& field, const Budget& budget = {});

/// Every 2-minor of the block matrix is a radical member of the reduced
/// generating set (within-block minors plus corner minors). The reverse
/// inclusion is syntactic and is only reported if it fails.
Report verify_theorem_main(const BlockSpec& spec, const FieldSpec& field,
                           const Budget& budget = {});

/// With d = p^h: every 2-minor of the (d,d) matrix is a radical member
/// of S_d + T_d + (x0 yd - xd y0). Run over a field of characteristic
/// different from p this fails with an evaluation witness. Also checks
/// the telescoping identity putting the long cross binomial in the minor
/// ideal and the characteristic-p power congruences.
Report verify_corollary4(std::uint32_t p, int h, const FieldSpec& field,
                         const Budget& budget = {});

/// (S_c) = Rad(F_1, ..., F_{c-1}), both directions: each F_i is an exact
/// member of (S_c) and each minor of S_c is a radical member of the F's.
Report verify_prop5a(int c, const FieldSpec& field, const Budget& budget = {});

/// The minor ideal of the (c,d) matrix equals, up to radical, the ideal
/// of the F/G/H list; generator count c+d for c,d >= 2 (height + 1) and
/// c for d = 1 (height). Over F_p with c = d = p^h the shorter list
/// F_1..F_{c-1}, G_1..G_{d-1}, x0 yd - xd y0 of height-many elements is
/// checked as well.
Report verify_corollary6(int c, int d, const FieldSpec& field, const Budget& budget = {});

/// Cardinality formulas for every named set plus the height c+d-1 of the
/// two-block minor ideal, computed as nvars minus the combinatorial
/// dimension.
Report check_counts_and_height(const BlockSpec& spec, const FieldSpec& field,
                               const Budget& budget = {});

/// Exhaustive vanishing sets of two generator lists over F_q compared
/// for equality (or verified different when expect_equal is false).
Report check_points_agreement(const GeneratorSet& a, const GeneratorSet& b, std::uint32_t q,
                              bool expect_equal, const Budget& budget = {});

}  // namespace scrolls
