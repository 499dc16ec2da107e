#include "scrolls/verify.hpp"

#include <algorithm>

namespace scrolls {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
};

std::vector<std::pair<std::string, std::string>> base_params(
    std::initializer_list<std::pair<std::string, std::string>> kv) {
  return {kv.begin(), kv.end()};
}

CheckRecord identity_record(const std::string& id, const Poly& difference,
                            const FieldSpec& field, double ms) {
  CheckRecord rec;
  rec.check = id;
  rec.params = base_params({{"field", field.str()}});
  rec.method = "identity";
  rec.millis = ms;
  if (difference.is_zero()) {
    rec.verdict = Verdict::Pass;
  } else {
    rec.verdict = Verdict::Fail;
    Witness w;
    w.poly = difference.str();
    rec.witness = std::move(w);
  }
  return rec;
}

CheckRecord congruence_record(const std::string& id, const Poly& lhs_minus_rhs,
                              const GroebnerBasis& gb, const FieldSpec& field, double* ms_out) {
  Timer timer;
  Poly nf = normal_form(lhs_minus_rhs, gb);
  CheckRecord rec;
  rec.check = id;
  rec.params = base_params({{"field", field.str()}});
  rec.method = "membership";
  rec.millis = timer.ms();
  if (ms_out) *ms_out = rec.millis;
  if (nf.is_zero()) {
    rec.verdict = Verdict::Pass;
  } else {
    rec.verdict = Verdict::Fail;
    Witness w;
    w.poly = nf.str();
    rec.witness = std::move(w);
  }
  return rec;
}

CheckRecord budget_record(const std::string& id, const std::string& method,
                          const FieldSpec& field, double ms) {
  CheckRecord rec;
  rec.check = id;
  rec.params = base_params({{"field", field.str()}});
  rec.verdict = Verdict::Budget;
  rec.method = method;
  rec.millis = ms;
  return rec;
}

void tag_records(Report& report, std::initializer_list<std::pair<std::string, std::string>> kv) {
  for (auto& rec : report.records)
    for (const auto& p : kv) rec.params.push_back(p);
}

}  // namespace

Report check_identity_suite(int c, int d, const FieldSpec& field) {
  if (c < 1 || d < 1) throw InvalidSpec("identity suite needs c, d >= 1");
  TwoBlockRing tb = make_two_block_ring(c, d, field);
  auto x = [&](int j) { return tb.x(j); };
  auto y = [&](int j) { return tb.y(j); };
  Report report;
  auto run = [&](const std::string& id, const Poly& diff) {
    Timer timer;
    report.add(identity_record(id, diff, field, timer.ms()));
  };

  if (c >= 2) {
    run("identity.base",
        x(1) * (x(0) * y(1) - x(1) * y(0)) -
            (x(0) * (x(1) * y(1) - x(2) * y(0)) + y(0) * (x(0) * x(2) - x(1) * x(1))));
  }
  for (int i = 3; i <= c; ++i) {
    Poly rhs = (x(i - 2) * y(0) * y(1) - x(i - 1) * y(0) * y(0)) * (x(0) * x(2) - x(1) * x(1)) -
               x(0) * y(1) * y(1) * (x(0) * x(i - 1) - x(1) * x(i - 2)) +
               x(0) * y(0) * y(1) * (x(0) * x(i) - x(2) * x(i - 2)) -
               x(0) * y(0) * y(0) * (x(1) * x(i) - x(2) * x(i - 1)) +
               x(0) * (x(0) * y(1) - x(1) * y(0)) * (x(i - 1) * y(1) - x(i) * y(0));
    run("identity.eq1[i=" + std::to_string(i) + "]",
        x(1) * (x(0) * y(1) - x(1) * y(0)) * (x(i - 2) * y(1) - x(i - 1) * y(0)) - rhs);
  }
  for (int j = 2; j <= d; ++j) {
    Poly rhs = -(x(0) * (y(j - 2) * y(j) - y(j - 1) * y(j - 1))) +
               y(j - 2) * (x(0) * y(j) - x(1) * y(j - 1));
    run("identity.eq3[j=" + std::to_string(j) + "]",
        y(j - 1) * (x(0) * y(j - 1) - x(1) * y(j - 2)) - rhs);
  }
  for (int j = 3; j <= d; ++j) {
    Poly rhs = -(x(0) * (y(j - 3) * y(j) - y(j - 1) * y(j - 2))) +
               y(j - 3) * (x(0) * y(j) - x(1) * y(j - 1)) +
               x(1) * (y(j - 3) * y(j - 1) - y(j - 2) * y(j - 2));
    run("identity.eq4[j=" + std::to_string(j) + "]",
        y(j - 2) * (x(0) * y(j - 1) - x(1) * y(j - 2)) - rhs);
  }
  if (c >= 2) {
    Poly rhs = -((x(0) * x(2) - x(1) * x(1)) * y(d)) + x(2) * (x(0) * y(d) - x(1) * y(d - 1));
    run("identity.eqa", x(1) * (x(1) * y(d) - x(2) * y(d - 1)) - rhs);
  }
  for (int i = 2; i <= c - 1; ++i) {
    Poly rhs = -((x(i - 1) * x(i + 1) - x(i) * x(i)) * y(d)) +
               x(i + 1) * (x(i - 1) * y(d) - x(i) * y(d - 1));
    run("identity.eq7[i=" + std::to_string(i) + "]",
        x(i) * (x(i) * y(d) - x(i + 1) * y(d - 1)) - rhs);
  }
  if (d >= 2) {
    for (int i = 1; i <= c - 1; ++i) {
      Poly rhs = (y(d - 2) * y(d) - y(d - 1) * y(d - 1)) * x(i + 1) +
                 y(d) * (x(i) * y(d - 1) - x(i + 1) * y(d - 2));
      run("identity.eq8[i=" + std::to_string(i) + "]",
          y(d - 1) * (x(i) * y(d) - x(i + 1) * y(d - 1)) - rhs);
    }
  }
  return report;
}

Report check_lemma1(int c, int d, const FieldSpec& field, const Budget& budget) {
  if (c < 2 || d < 1) throw InvalidSpec("lemma 1 needs c >= 2 and d >= 1");
  Report report;
  TwoBlockRing tb = make_two_block_ring(c, d, field);
  for (int i = 2; i <= c; ++i) {
    Timer timer;
    const std::string id = "lemma1[i=" + std::to_string(i) + ",d=" + std::to_string(d) + "]";
    try {
      GeneratorSet jid = gens_family(FamilyKind::Jij, c, d, i, d, field);
      Poly f = (tb.x(1).pow(static_cast<unsigned>(i - 1))) *
               ((tb.x(0) * tb.y(1) - tb.x(1) * tb.y(0)).pow(static_cast<unsigned>(i - 1)));
      Poly moved = Poly::from_terms(jid.ring, f.terms());
      auto mv = ideal_member(moved, jid, budget);
      CheckRecord rec;
      rec.check = id;
      rec.params = base_params({{"field", field.str()}});
      rec.method = "membership";
      rec.millis = timer.ms();
      rec.verdict = mv.member ? Verdict::Pass : Verdict::Fail;
      if (!mv.member) {
        Witness w;
        w.poly = moved.str();
        rec.witness = std::move(w);
      }
      report.add(std::move(rec));
    } catch (const BudgetExceeded&) {
      report.add(budget_record(id, "membership", field, timer.ms()));
    }
  }
  return report;
}

Report check_lemma2(int c, int d, const FieldSpec& field, const Budget& budget) {
  if (c < 1 || d < 2) throw InvalidSpec("lemma 2 needs c >= 1 and d >= 2");
  Report report;
  TwoBlockRing tb = make_two_block_ring(c, d, field);
  for (int j = 2; j <= d; ++j) {
    GeneratorSet prev = gens_family(FamilyKind::Jij, c, d, c, j - 1, field);
    GeneratorSet next = gens_family(FamilyKind::Jij, c, d, c, j, field);
    Report step = radical_contains(prev, next, budget,
                                   "lemma2.step[j=" + std::to_string(j) + "]");
    tag_records(step, {{"field", field.str()}});
    report.append(std::move(step));
    Timer timer;
    const std::string id = "lemma2.ast[j=" + std::to_string(j) + "]";
    try {
      Poly ast = tb.x(0) * tb.y(j - 1) - tb.x(1) * tb.y(j - 2);
      auto mv = radical_member(Poly::from_terms(next.ring, ast.terms()), next, budget);
      CheckRecord rec;
      rec.check = id;
      rec.params = base_params({{"field", field.str()}});
      rec.method = "rabinowitsch";
      rec.millis = timer.ms();
      rec.verdict = mv.member ? Verdict::Pass : Verdict::Fail;
      if (!mv.member) {
        Witness w;
        w.poly = ast.str();
        rec.witness = std::move(w);
      }
      report.add(std::move(rec));
    } catch (const BudgetExceeded&) {
      report.add(budget_record(id, "rabinowitsch", field, timer.ms()));
    }
  }
  return report;
}

Report check_lemma3(int d, const FieldSpec& field, const Budget& budget) {
  if (d < 1) throw InvalidSpec("lemma 3 needs d >= 1");
  Report report;
  TwoBlockRing tb = make_two_block_ring(d, d, field);
  auto x = [&](int j) { return tb.x(j); };
  auto y = [&](int j) { return tb.y(j); };
  const unsigned ud = static_cast<unsigned>(d);
  try {
    GeneratorSet sd = gens_family(FamilyKind::S, d, d, d, 1, field);
    GeneratorSet td = gens_family(FamilyKind::T, d, d, 1, d, field);
    GeneratorSet jd = gens_char_p(d, field);
    GroebnerBasis gb_s = buchberger(sd, budget);
    GroebnerBasis gb_t = buchberger(td, budget);
    GroebnerBasis gb_j = buchberger(jd, budget);
    auto in_ring = [&](const RingPtr& ring, const Poly& p) {
      return Poly::from_terms(ring, p.terms());
    };
    for (int k = 0; k <= d - 1; ++k) {
      Poly diff = x(0).pow(ud - 1) * x(d) -
                  x(1).pow(static_cast<unsigned>(k)) * x(d - k) *
                      x(0).pow(static_cast<unsigned>(d - k - 1));
      report.add(congruence_record("lemma3.claim2[k=" + std::to_string(k) + "]",
                                   in_ring(sd.ring, diff), gb_s, field, nullptr));
    }
    report.add(congruence_record("lemma3.eq1a", in_ring(sd.ring, x(0).pow(ud - 1) * x(d) - x(1).pow(ud)),
                                 gb_s, field, nullptr));
    report.add(congruence_record("lemma3.eq2a", in_ring(td.ring, y(d).pow(ud - 1) * y(0) - y(d - 1).pow(ud)),
                                 gb_t, field, nullptr));
    report.add(congruence_record("lemma3.main1",
                                 in_ring(jd.ring, x(0).pow(ud) * y(d).pow(ud) - x(1).pow(ud) * y(d - 1).pow(ud)),
                                 gb_j, field, nullptr));
    report.add(congruence_record("lemma3.main2",
                                 in_ring(jd.ring, x(d).pow(ud) * y(0).pow(ud) - x(d - 1).pow(ud) * y(1).pow(ud)),
                                 gb_j, field, nullptr));
  } catch (const BudgetExceeded&) {
    report.add(budget_record("lemma3[d=" + std::to_string(d) + "]", "membership", field, 0.0));
  }
  return report;
}

Report verify_theorem_main(const BlockSpec& spec, const FieldSpec& field, const Budget& budget) {
  spec.validate();
  ScrollMatrix m = build_matrix(spec, field);
  GeneratorSet full = minors_full(m);
  GeneratorSet reduced = minors_reduced(m);
  Report report;
  // The reduced set is a literal subset of the minors; only a violation
  // is worth a record.
  for (const auto& g : reduced.polys) {
    if (std::find(full.polys.begin(), full.polys.end(), g) == full.polys.end()) {
      CheckRecord rec;
      rec.check = "theorem.subset";
      rec.params = base_params({{"blocks", spec.str()}, {"field", field.str()}});
      rec.verdict = Verdict::Fail;
      rec.method = "count";
      Witness w;
      w.poly = g.str();
      rec.witness = std::move(w);
      report.add(std::move(rec));
      return report;
    }
  }
  Report contains = radical_contains(full, reduced, budget, "theorem");
  tag_records(contains, {{"blocks", spec.str()}, {"field", field.str()}});
  report.append(std::move(contains));
  return report;
}

Report verify_corollary4(std::uint32_t p, int h, const FieldSpec& field, const Budget& budget) {
  if (!is_prime_u32(p)) throw InvalidSpec("p must be prime");
  if (h < 1) throw InvalidSpec("h must be positive");
  long long dd = 1;
  for (int i = 0; i < h; ++i) {
    dd *= p;
    if (dd > 64) throw InvalidSpec("p^h too large; this suite caps p^h at 64");
  }
  const int d = static_cast<int>(dd);
  Report report;
  TwoBlockRing tb = make_two_block_ring(d, d, field);
  ScrollMatrix m = build_matrix(BlockSpec{{d, d}}, field);
  GeneratorSet full = minors_full(m);
  GeneratorSet charp = gens_char_p(d, field);
  auto x = [&](int j) { return tb.x(j); };
  auto y = [&](int j) { return tb.y(j); };
  const auto params = base_params(
      {{"p", std::to_string(p)}, {"h", std::to_string(h)}, {"field", field.str()}});

  // Converse inclusion: the prefix minors are minors of the matrix, and
  // the long cross binomial telescopes through consecutive minors.
  for (std::size_t k = 0; k + 1 < charp.polys.size(); ++k) {
    Poly moved = Poly::from_terms(full.ring, charp.polys[k].terms());
    if (std::find(full.polys.begin(), full.polys.end(), moved) == full.polys.end()) {
      CheckRecord rec;
      rec.check = "corollary4.subset";
      rec.params = params;
      rec.verdict = Verdict::Fail;
      rec.method = "count";
      Witness w;
      w.poly = moved.str();
      rec.witness = std::move(w);
      report.add(std::move(rec));
      return report;
    }
  }
  {
    Timer timer;
    Poly telescoped = Poly::zero(tb.ring);
    for (int k = 0; k <= d - 1; ++k)
      telescoped = telescoped + (x(k) * y(d - k) - x(k + 1) * y(d - k - 1));
    Poly diff = (x(0) * y(d) - x(d) * y(0)) - telescoped;
    CheckRecord rec = identity_record("corollary4.telescope", diff, field, timer.ms());
    rec.params = params;
    report.add(std::move(rec));
  }
  {
    // Frobenius: over characteristic p the d-th power of the short cross
    // binomial collapses to the difference of d-th powers.
    Timer timer;
    Poly lhs = (x(0) * y(d) - x(1) * y(d - 1)).pow(static_cast<unsigned>(d));
    Poly rhs = x(0).pow(static_cast<unsigned>(d)) * y(d).pow(static_cast<unsigned>(d)) -
               x(1).pow(static_cast<unsigned>(d)) * y(d - 1).pow(static_cast<unsigned>(d));
    CheckRecord rec = identity_record("corollary4.frobenius", lhs - rhs, field, timer.ms());
    rec.params = params;
    if (rec.verdict == Verdict::Fail) {
      Witness w;
      w.poly = (lhs - rhs).str();
      if (auto pt = find_separating_point(charp.polys, x(0) * y(d) - x(1) * y(d - 1)))
        w.point = PointWitness{*pt, (x(0) * y(d) - x(1) * y(d - 1)).str()};
      rec.witness = std::move(w);
    }
    report.add(std::move(rec));
  }
  for (const char* side : {"lemma3.left", "lemma3.right"}) {
    Timer timer;
    const std::string id = std::string("corollary4.") + side;
    try {
      GroebnerBasis gb_j = buchberger(charp, budget);
      Poly cross = side == std::string("lemma3.left") ? x(0) * y(d) - x(1) * y(d - 1)
                                                      : x(d - 1) * y(1) - x(d) * y(0);
      Poly moved = Poly::from_terms(charp.ring, cross.pow(static_cast<unsigned>(d)).terms());
      Poly nf = normal_form(moved, gb_j);
      CheckRecord rec;
      rec.check = id;
      rec.params = params;
      rec.method = "membership";
      rec.millis = timer.ms();
      rec.verdict = nf.is_zero() ? Verdict::Pass : Verdict::Fail;
      if (!nf.is_zero()) {
        Witness w;
        w.poly = nf.str();
        if (auto pt = find_separating_point(charp.polys, cross))
          w.point = PointWitness{*pt, cross.str()};
        rec.witness = std::move(w);
      }
      report.add(std::move(rec));
    } catch (const BudgetExceeded&) {
      report.add(budget_record(id, "membership", field, timer.ms()));
    }
  }
  Report contains = radical_contains(full, charp, budget, "corollary4");
  tag_records(contains,
              {{"p", std::to_string(p)}, {"h", std::to_string(h)}, {"field", field.str()}});
  report.append(std::move(contains));
  return report;
}

Report verify_prop5a(int c, const FieldSpec& field, const Budget& budget) {
  if (c < 2) throw InvalidSpec("this check needs c >= 2");
  Report report;
  ScrollMatrix m = build_matrix(BlockSpec{{c}}, field);
  GeneratorSet sc = minors_full(m);  // all 2-minors of the single block
  sc.name = SetName::Si;
  sc.params = {{"c", c}, {"i", c}};
  GeneratorSet fs{SetName::Stci, {{"c", c}}, m.ring, {}};
  for (int i = 1; i < c; ++i) fs.polys.push_back(stci_fi(m.ring, 0, i));
  for (int i = 1; i < c; ++i) {
    Timer timer;
    const std::string id = "prop5a.exact[F" + std::to_string(i) + "]";
    try {
      auto mv = ideal_member(fs.polys[static_cast<std::size_t>(i - 1)], sc, budget);
      CheckRecord rec;
      rec.check = id;
      rec.params = base_params({{"c", std::to_string(c)}, {"field", field.str()}});
      rec.method = "membership";
      rec.millis = timer.ms();
      rec.verdict = mv.member ? Verdict::Pass : Verdict::Fail;
      if (!mv.member) {
        Witness w;
        w.poly = fs.polys[static_cast<std::size_t>(i - 1)].str();
        rec.witness = std::move(w);
      }
      report.add(std::move(rec));
    } catch (const BudgetExceeded&) {
      report.add(budget_record(id, "membership", field, timer.ms()));
    }
  }
  Report contains = radical_contains(sc, fs, budget, "prop5a.radical");
  tag_records(contains, {{"c", std::to_string(c)}, {"field", field.str()}});
  report.append(std::move(contains));
  return report;
}

Report verify_corollary6(int c, int d, const FieldSpec& field, const Budget& budget) {
  if (c < 2 || d < 1) throw InvalidSpec("this check needs c >= 2 and d >= 1");
  Report report;
  ScrollMatrix m = build_matrix(BlockSpec{{c, d}}, field);
  GeneratorSet full = minors_full(m);
  GeneratorSet stci = gens_stci(c, d, field);
  const auto params = base_params({{"c", std::to_string(c)},
                                   {"d", std::to_string(d)},
                                   {"field", field.str()}});
  Report contains = radical_contains(full, stci, budget, "corollary6.radical");
  tag_records(contains,
              {{"c", std::to_string(c)}, {"d", std::to_string(d)}, {"field", field.str()}});
  report.append(std::move(contains));
  for (std::size_t k = 0; k < stci.polys.size(); ++k) {
    Timer timer;
    const std::string id = "corollary6.exact[" + std::to_string(k) + "]";
    try {
      Poly moved = Poly::from_terms(full.ring, stci.polys[k].terms());
      auto mv = ideal_member(moved, full, budget);
      CheckRecord rec;
      rec.check = id;
      rec.params = params;
      rec.params.push_back({"generator", stci.polys[k].str()});
      rec.method = "membership";
      rec.millis = timer.ms();
      rec.verdict = mv.member ? Verdict::Pass : Verdict::Fail;
      if (!mv.member) {
        Witness w;
        w.poly = stci.polys[k].str();
        rec.witness = std::move(w);
      }
      report.add(std::move(rec));
    } catch (const BudgetExceeded&) {
      report.add(budget_record(id, "membership", field, timer.ms()));
    }
  }
  {
    const int height = c + d - 1;
    const std::size_t expected =
        d == 1 ? static_cast<std::size_t>(height) : static_cast<std::size_t>(height + 1);
    CheckRecord rec;
    rec.check = "corollary6.count";
    rec.params = params;
    rec.params.push_back({"generators", std::to_string(stci.size())});
    rec.params.push_back({"height", std::to_string(height)});
    rec.method = "count";
    rec.verdict = stci.size() == expected ? Verdict::Pass : Verdict::Fail;
    report.add(std::move(rec));
  }
  // Characteristic-p refinement: with c = d = p^h the list
  // F_1..F_{c-1}, G_1..G_{d-1}, x0 yd - xd y0 has height-many elements.
  const std::uint32_t p = field.characteristic();
  if (p != 0 && c == d) {
    long long q = p;
    while (q < c) q *= p;
    if (q == c) {
      TwoBlockRing tb = make_two_block_ring(c, d, field);
      GeneratorSet shorter{SetName::Stci, {{"c", c}, {"d", d}}, tb.ring, {}};
      for (int i = 1; i < c; ++i) shorter.polys.push_back(stci_fi(tb.ring, 0, i));
      for (int i = 1; i < d; ++i)
        shorter.polys.push_back(stci_fi(tb.ring, static_cast<std::size_t>(c + 1), i));
      shorter.polys.push_back(tb.x(0) * tb.y(d) - tb.x(d) * tb.y(0));
      Report char_contains = radical_contains(full, shorter, budget, "corollary4a.radical");
      tag_records(char_contains,
                  {{"c", std::to_string(c)}, {"d", std::to_string(d)}, {"field", field.str()}});
      report.append(std::move(char_contains));
      CheckRecord rec;
      rec.check = "corollary4a.count";
      rec.params = params;
      rec.params.push_back({"generators", std::to_string(shorter.size())});
      rec.params.push_back({"height", std::to_string(c + d - 1)});
      rec.method = "count";
      rec.verdict = shorter.size() == static_cast<std::size_t>(c + d - 1) ? Verdict::Pass
                                                                          : Verdict::Fail;
      report.add(std::move(rec));
    }
  }
  return report;
}

Report check_counts_and_height(const BlockSpec& spec, const FieldSpec& field,
                               const Budget& budget) {
  spec.validate();
  Report report;
  ScrollMatrix m = build_matrix(spec, field);
  GeneratorSet full = minors_full(m);
  GeneratorSet reduced = minors_reduced(m);
  const auto params = base_params({{"blocks", spec.str()}, {"field", field.str()}});
  auto count_record = [&](const std::string& id, std::size_t actual, std::size_t expected) {
    CheckRecord rec;
    rec.check = id;
    rec.params = params;
    rec.params.push_back({"actual", std::to_string(actual)});
    rec.params.push_back({"expected", std::to_string(expected)});
    rec.method = "count";
    rec.verdict = actual == expected ? Verdict::Pass : Verdict::Fail;
    report.add(std::move(rec));
  };
  auto choose2 = [](long long n) -> std::size_t {
    return static_cast<std::size_t>(n * (n - 1) / 2);
  };
  count_record("counts.full", full.size(), choose2(spec.total_cols()));
  std::size_t reduced_expected = 0;
  for (int cb : spec.cols) reduced_expected += choose2(cb);
  for (std::size_t i = 0; i < spec.cols.size(); ++i)
    for (std::size_t j = i + 1; j < spec.cols.size(); ++j)
      reduced_expected += (spec.cols[i] == 1 && spec.cols[j] == 1) ? 1 : 2;
  count_record("counts.reduced", reduced.size(), reduced_expected);
  if (spec.two_block()) {
    const int c = spec.cols[0], d = spec.cols[1];
    if (c == d) {
      GeneratorSet charp = gens_char_p(d, field);
      count_record("counts.charp", charp.size(),
                   static_cast<std::size_t>(static_cast<long long>(d) * (d - 1) + 1));
    }
    if (c >= 2) {
      GeneratorSet stci = gens_stci(c, d, field);
      count_record("counts.stci", stci.size(),
                   d == 1 ? static_cast<std::size_t>(c) : static_cast<std::size_t>(c + d));
    }
    Timer timer;
    const std::string id = "counts.height";
    try {
      const int dim = ideal_dimension(full, budget);
      const int height = static_cast<int>(full.ring->nvars()) - dim;
      CheckRecord rec;
      rec.check = id;
      rec.params = params;
      rec.params.push_back({"height", std::to_string(height)});
      rec.params.push_back({"expected", std::to_string(c + d - 1)});
      rec.method = "dimension";
      rec.millis = timer.ms();
      rec.verdict = height == c + d - 1 ? Verdict::Pass : Verdict::Fail;
      report.add(std::move(rec));
    } catch (const BudgetExceeded&) {
      report.add(budget_record(id, "dimension", field, timer.ms()));
    }
  }
  return report;
}

Report check_points_agreement(const GeneratorSet& a, const GeneratorSet& b, std::uint32_t q,
                              bool expect_equal, const Budget& budget) {
  Report report;
  Timer timer;
  CheckRecord rec;
  rec.check = "points.agreement";
  rec.params = base_params({{"q", std::to_string(q)},
                            {"left", set_name_str(a.name)},
                            {"right", set_name_str(b.name)},
                            {"expect", expect_equal ? "equal" : "different"}});
  rec.method = "points";
  try {
    PointSet pa = points_vanishing(a, q, budget);
    PointSet pb = points_vanishing(b, q, budget);
    rec.millis = timer.ms();
    rec.params.push_back({"left_points", std::to_string(pa.points.size())});
    rec.params.push_back({"right_points", std::to_string(pb.points.size())});
    const bool equal = pa == pb;
    rec.verdict = equal == expect_equal ? Verdict::Pass : Verdict::Fail;
    if (!equal) {
      // Locate a separating point and the generator that rejects it.
      const bool a_extra = first_difference(pa, pb).has_value();
      const auto pt = a_extra ? first_difference(pa, pb) : first_difference(pb, pa);
      const GeneratorSet& judge = a_extra ? b : a;
      Witness w;
      PointWitness pw;
      pw.coords.assign(pt->begin(), pt->end());
      for (const auto& g : judge.polys) {
        if (eval_mod_q(g, *pt, q) != 0) {
          pw.nonvanishing = g.str();
          break;
        }
      }
      w.point = std::move(pw);
      rec.witness = std::move(w);
    }
  } catch (const BudgetExceeded&) {
    rec.verdict = Verdict::Budget;
    rec.millis = timer.ms();
  }
  report.add(std::move(rec));
  return report;
}

}  // namespace scrolls
