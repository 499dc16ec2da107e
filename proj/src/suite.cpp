#include "scrolls/suite.hpp"

#include "scrolls/parse.hpp"
#include "scrolls/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scrolls {

namespace {

const FieldSpec kQ = FieldSpec::rationals();

Report tag(Report r, std::initializer_list<std::pair<std::string, std::string>> kv) {
  for (auto& rec : r.records)
    for (const auto& p : kv) rec.params.push_back(p);
  return r;
}

// Pure-evaluation characteristic separation at (1,1,1,1,-1,1), plus the
// requirement that the wrong-characteristic run fails with exactly that
// witness.
Report charsep_job(const Budget& budget) {
  Report report;
  const std::vector<long long> witness = {1, 1, 1, 1, -1, 1};
  for (const FieldSpec& field : {kQ, FieldSpec::prime(3)}) {
    GeneratorSet j2 = gens_char_p(2, field);
    Poly minor01 = parse_poly("x0*y1 - x1*y0", j2.ring);
    std::vector<Coeff> point;
    for (long long v : witness) point.push_back(field.from_long(static_cast<long>(v)));
    bool all_vanish = true;
    for (const auto& g : j2.polys)
      if (!g.eval(point).is_zero()) all_vanish = false;
    const bool separates = all_vanish && !minor01.eval(point).is_zero();
    CheckRecord rec;
    rec.check = "charsep.eval";
    rec.params = {{"field", field.str()}};
    rec.method = "points";
    rec.verdict = separates ? Verdict::Pass : Verdict::Fail;
    Witness w;
    w.point = PointWitness{witness, minor01.str()};
    rec.witness = std::move(w);
    report.add(std::move(rec));
  }
  Report wrong_char = verify_corollary4(2, 1, kQ, budget);
  bool failed = wrong_char.overall() == Verdict::Fail;
  bool witness_seen = false;
  for (const auto& rec : wrong_char.records)
    if (rec.verdict == Verdict::Fail && rec.witness && rec.witness->point &&
        rec.witness->point->coords == witness)
      witness_seen = true;
  CheckRecord rec;
  rec.check = "charsep.expectfail";
  rec.params = {{"field", "Q"}, {"p", "2"}, {"h", "1"}};
  rec.method = "rabinowitsch";
  rec.verdict = (failed && witness_seen) ? Verdict::Pass : Verdict::Fail;
  if (rec.verdict == Verdict::Pass) {
    Witness w;
    w.point = PointWitness{witness, "x0*y1 - x1*y0"};
    rec.witness = std::move(w);
  }
  report.add(std::move(rec));
  return report;
}

// The seven-element list for the (4,3) matrix, frozen in canonical text.
Report stci_display_job() {
  static const char* kExpected[] = {
      "x0*x2 - x1^2",
      "x0*x3^2 - 2*x1*x2*x3 + x2^3",
      "x0*x4^3 - 3*x1*x3*x4^2 + 3*x2*x3^2*x4 - x3^4",
      "x0*y1^4 - 4*x1*y0*y1^3 + 6*x2*y0^2*y1^2 - 4*x3*y0^3*y1 + x4*y0^4",
      "y0*y2 - y1^2",
      "y0*y3^2 - 2*y1*y2*y3 + y2^3",
      "x0*y3 - x1*y2",
  };
  Report report;
  GeneratorSet stci = gens_stci(4, 3, kQ);
  CheckRecord rec;
  rec.check = "stci_display[4,3]";
  rec.params = {{"field", "Q"}, {"expected", "7"}};
  rec.method = "count";
  rec.verdict = Verdict::Pass;
  if (stci.size() != 7) {
    rec.verdict = Verdict::Fail;
  } else {
    for (std::size_t k = 0; k < 7; ++k) {
      const Poly expected = parse_poly(kExpected[k], stci.ring);
      if (stci.polys[k] != expected || stci.polys[k].str() != kExpected[k]) {
        rec.verdict = Verdict::Fail;
        Witness w;
        w.poly = stci.polys[k].str();
        rec.witness = std::move(w);
        break;
      }
    }
  }
  report.add(std::move(rec));
  return report;
}

Report example1_job(const Budget& budget) {
  const FieldSpec f2 = FieldSpec::prime(2);
  ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, f2);
  GeneratorSet full = minors_full(m);
  GeneratorSet charp = gens_char_p(2, f2);
  Report report = radical_contains(full, charp, budget, "example1");
  report.append(check_points_agreement(full, charp, 2, /*expect_equal=*/true, budget));
  return tag(std::move(report), {{"blocks", "2,2"}, {"field", "Fp:2"}});
}

void add_identity_jobs(std::vector<SuiteJob>& jobs, int cd_max) {
  for (const FieldSpec field : {kQ, FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    jobs.push_back({"identities[" + field.str() + "]", 1, [field, cd_max](const Budget&) {
                      Report all;
                      for (int c = 1; c <= cd_max; ++c)
                        for (int d = 1; d <= cd_max; ++d)
                          all.append(tag(check_identity_suite(c, d, field),
                                         {{"c", std::to_string(c)}, {"d", std::to_string(d)}}));
                      return all;
                    }});
  }
}

}  // namespace

SuiteLevel suite_level_parse(std::string_view text) {
  if (text == "smoke") return SuiteLevel::Smoke;
  if (text == "paper") return SuiteLevel::Paper;
  if (text == "stretch") return SuiteLevel::Stretch;
  throw InvalidSpec("suite level must be smoke, paper or stretch");
}

std::vector<SuiteJob> suite_jobs(SuiteLevel level) {
  std::vector<SuiteJob> jobs;
  if (level == SuiteLevel::Smoke) {
    add_identity_jobs(jobs, 3);
    jobs.push_back({"theorem[2,2][Q]", 2, [](const Budget& b) {
                      return verify_theorem_main(BlockSpec{{2, 2}}, kQ, b);
                    }});
    return jobs;
  }

  add_identity_jobs(jobs, 6);

  const std::vector<std::pair<int, int>> theorem_specs = {
      {1, 1}, {2, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}};
  for (const auto& [c, d] : theorem_specs) {
    for (const FieldSpec field : {kQ, FieldSpec::prime(2), FieldSpec::prime(3)}) {
      BlockSpec spec{{c, d}};
      jobs.push_back({"theorem[" + spec.str() + "][" + field.str() + "]", 2,
                      [spec, field](const Budget& b) {
                        return verify_theorem_main(spec, field, b);
                      }});
    }
  }

  for (const BlockSpec& spec : {BlockSpec{{2, 2, 2}}, BlockSpec{{2, 1, 2}}}) {
    jobs.push_back({"theorem[" + spec.str() + "][Fp:3]", 3, [spec](const Budget& b) {
                      return verify_theorem_main(spec, FieldSpec::prime(3), b);
                    }});
  }

  jobs.push_back({"example1", 4, example1_job});
  jobs.push_back({"charsep", 5, charsep_job});

  jobs.push_back({"corollary4[2,1][Fp:2]", 6, [](const Budget& b) {
                    return verify_corollary4(2, 1, FieldSpec::prime(2), b);
                  }});
  jobs.push_back({"corollary4[3,1][Fp:3]", 6, [](const Budget& b) {
                    return verify_corollary4(3, 1, FieldSpec::prime(3), b);
                  }});

  for (int c : {2, 3, 4, 5}) {
    jobs.push_back({"prop5a[" + std::to_string(c) + "][Q]", 7, [c](const Budget& b) {
                      return verify_prop5a(c, kQ, b);
                    }});
  }

  const std::vector<std::pair<int, int>> stci_specs = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}};
  for (const auto& [c, d] : stci_specs) {
    jobs.push_back({"corollary6[" + std::to_string(c) + "," + std::to_string(d) + "][Q]", 8,
                    [c, d](const Budget& b) { return verify_corollary6(c, d, kQ, b); }});
  }
  jobs.push_back({"stci_display[4,3]", 8, [](const Budget&) { return stci_display_job(); }});

  for (int c = 2; c <= 5; ++c)
    for (int d = 1; d <= 3; ++d)
      jobs.push_back({"lemma1[" + std::to_string(c) + "," + std::to_string(d) + "]", 9,
                      [c, d](const Budget& b) { return check_lemma1(c, d, kQ, b); }});
  for (int c = 1; c <= 4; ++c)
    for (int d = 2; d <= 4; ++d)
      jobs.push_back({"lemma2[" + std::to_string(c) + "," + std::to_string(d) + "]", 9,
                      [c, d](const Budget& b) { return check_lemma2(c, d, kQ, b); }});
  for (int d = 1; d <= 4; ++d)
    jobs.push_back({"lemma3[" + std::to_string(d) + "]", 9,
                    [d](const Budget& b) { return check_lemma3(d, kQ, b); }});

  for (int c = 1; c <= 5; ++c)
    for (int d = 1; c + d <= 6; ++d)
      jobs.push_back({"counts[" + std::to_string(c) + "," + std::to_string(d) + "]", 10,
                      [c, d](const Budget& b) {
                        return check_counts_and_height(BlockSpec{{c, d}}, kQ, b);
                      }});
  jobs.push_back({"counts[2,2,2]", 10, [](const Budget& b) {
                    return check_counts_and_height(BlockSpec{{2, 2, 2}}, kQ, b);
                  }});

  auto concord = [](const BlockSpec& spec, std::uint32_t q) {
    return SuiteJob{"concord.theorem[" + spec.str() + "][Fp:" + std::to_string(q) + "]", 11,
                    [spec, q](const Budget& b) {
                      const FieldSpec fq = FieldSpec::prime(q);
                      ScrollMatrix m = build_matrix(spec, fq);
                      return tag(check_points_agreement(minors_full(m), minors_reduced(m), q,
                                                        true, b),
                                 {{"blocks", spec.str()}});
                    }};
  };
  for (const auto& [c, d] : theorem_specs) {
    jobs.push_back(concord(BlockSpec{{c, d}}, 2));
    jobs.push_back(concord(BlockSpec{{c, d}}, 3));
  }
  jobs.push_back(concord(BlockSpec{{2, 2, 2}}, 3));
  jobs.push_back(concord(BlockSpec{{2, 1, 2}}, 3));
  jobs.push_back({"concord.example1[Fp:2]", 11, [](const Budget& b) {
                    const FieldSpec f2 = FieldSpec::prime(2);
                    ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, f2);
                    return check_points_agreement(minors_full(m), gens_char_p(2, f2), 2, true, b);
                  }});
  jobs.push_back({"concord.charsep[Fp:3]", 11, [](const Budget& b) {
                    // Rational witness exists, so the sets must differ.
                    const FieldSpec f3 = FieldSpec::prime(3);
                    ScrollMatrix m = build_matrix(BlockSpec{{2, 2}}, f3);
                    return check_points_agreement(minors_full(m), gens_char_p(2, f3), 3, false, b);
                  }});
  jobs.push_back({"concord.corollary4[3,1][Fp:3]", 11, [](const Budget& b) {
                    const FieldSpec f3 = FieldSpec::prime(3);
                    ScrollMatrix m = build_matrix(BlockSpec{{3, 3}}, f3);
                    return check_points_agreement(minors_full(m), gens_char_p(3, f3), 3, true, b);
                  }});

  if (level == SuiteLevel::Stretch) {
    jobs.push_back({"corollary4[2,2][Fp:2]", 0, [](const Budget& b) {
                      return verify_corollary4(2, 2, FieldSpec::prime(2), b);
                    }});
    jobs.push_back({"corollary6[4,3][Q]", 0, [](const Budget& b) {
                      return verify_corollary6(4, 3, kQ, b);
                    }});
  }
  return jobs;
}

std::vector<CriterionInfo> criterion_infos() {
  return {
      {1, "identity suite, c,d <= 6 over Q, F2, F3, F5", 5.0, 0.0},
      {2, "two-block radical containment over Q, F2, F3", 600.0, 60.0},
      {3, "three-block radical containment over F3", 240.0, 120.0},
      {4, "six minors against three binomials over F2, with points oracle", 5.0, 0.0},
      {5, "characteristic separation witness (1,1,1,1,-1,1)", 1.0, 0.0},
      {6, "square charp containment for p^h = 2, 3", 240.0, 120.0},
      {7, "prefix-minor ideals vs F-lists, c = 2..5", 120.0, 0.0},
      {8, "almost-complete-intersection lists over Q", 600.0, 0.0},
      {9, "stepwise lemma suite", 300.0, 0.0},
      {10, "cardinalities and heights", 180.0, 0.0},
      {11, "points oracle concordance", 300.0, 0.0},
  };
}

Report run_jobs(const std::vector<SuiteJob>& jobs, const Budget& budget, int parallel_jobs) {
  const int n = static_cast<int>(jobs.size());
  std::vector<Report> results(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#ifdef _OPENMP
  if (parallel_jobs > 0) omp_set_num_threads(parallel_jobs);
#endif
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    try {
      results[static_cast<std::size_t>(k)] = jobs[static_cast<std::size_t>(k)].run(budget);
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Report merged;
  for (int k = 0; k < n; ++k) {
    for (auto& rec : results[static_cast<std::size_t>(k)].records) {
      rec.check = jobs[static_cast<std::size_t>(k)].id + "/" + rec.check;
      merged.records.push_back(std::move(rec));
    }
  }
  return merged;
}

}  // namespace scrolls
