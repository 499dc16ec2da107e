#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "scrolls/json_io.hpp"
#include "scrolls/parse.hpp"
#include "scrolls/suite.hpp"
#include "scrolls/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace scrolls;

// Exit codes: 0 all checks pass / output produced, 1 a mathematical
// check failed, 2 usage or parse error, 3 budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string blocks;
  std::string field = "Q";
  std::string order = "degrevlex";
  std::string set = "full";
  std::string format = "text";
  std::string output;
  bool canonical_names = false;
  bool serial = false;
  int c = 0, d = 0, i = 0, j = 0, h = 1;
  std::uint32_t p = 0;
  int jobs = 0;
  long max_pairs = 200'000;
  int max_degree = 60;
  long long max_points = 10'000'000;
  std::string level = "paper";
};

Budget make_budget(const Options& opt) {
  Budget b;
  b.max_pairs = opt.max_pairs;
  b.max_degree = opt.max_degree;
  b.max_points = opt.max_points;
  if (const char* ms = std::getenv("SCROLLS_BUDGET_MS"))
    b.wall = std::chrono::milliseconds(std::atoll(ms));
  return b;
}

void write_out(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw Error("cannot write to '" + opt.output + "'");
  out << text;
}

std::pair<int, int> two_block_params(const Options& opt) {
  if (!opt.blocks.empty()) {
    BlockSpec spec = BlockSpec::parse(opt.blocks);
    if (!spec.two_block()) throw InvalidSpec("this set needs exactly two blocks");
    return {spec.cols[0], spec.cols[1]};
  }
  if (opt.c >= 1 && opt.d >= 1) return {opt.c, opt.d};
  throw InvalidSpec("give --blocks c,d or both --c and --d");
}

GeneratorSet build_set(const Options& opt) {
  const FieldSpec field = FieldSpec::parse(opt.field);
  const MonomialOrder order = MonomialOrder::parse(opt.order);
  if (opt.set == "full" || opt.set == "reduced") {
    if (opt.blocks.empty()) throw InvalidSpec("--blocks is required for this set");
    ScrollMatrix m =
        build_matrix(BlockSpec::parse(opt.blocks), field, order, opt.canonical_names);
    return opt.set == "full" ? minors_full(m) : minors_reduced(m);
  }
  if (opt.set == "stci") {
    auto [c, d] = two_block_params(opt);
    return gens_stci(c, d, field, order);
  }
  if (opt.set == "charp") {
    int d = opt.d;
    if (d == 0 && !opt.blocks.empty()) {
      BlockSpec spec = BlockSpec::parse(opt.blocks);
      if (!spec.two_block() || spec.cols[0] != spec.cols[1])
        throw InvalidSpec("charp needs square two-block shape d,d");
      d = spec.cols[0];
    }
    if (d == 0 && opt.p != 0) {
      d = 1;
      for (int k = 0; k < opt.h; ++k) d *= static_cast<int>(opt.p);
    }
    if (d == 0) throw InvalidSpec("charp needs --d, --blocks d,d or --p/--h");
    return gens_char_p(d, field, order);
  }
  if (opt.set.rfind("family:", 0) == 0) {
    auto [c, d] = two_block_params(opt);
    const std::string kind = opt.set.substr(7);
    if (kind == "S") return gens_family(FamilyKind::S, c, d, opt.i, 1, field, order);
    if (kind == "T") return gens_family(FamilyKind::T, c, d, 1, opt.j, field, order);
    if (kind == "J") return gens_family(FamilyKind::Jij, c, d, opt.i, opt.j, field, order);
    if (kind == "Jcd") return gens_family(FamilyKind::Jcd, c, d, c, d, field, order);
    throw InvalidSpec("family must be one of S, T, J, Jcd");
  }
  throw InvalidSpec("unknown set '" + opt.set + "'");
}

std::string report_text(const Report& report) {
  std::string out;
  for (const auto& rec : report.records) {
    out += "[" + verdict_str(rec.verdict) + "] " + rec.check;
    for (const auto& [k, v] : rec.params) out += " " + k + "=" + v;
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.1f", rec.millis);
    out += " (" + rec.method + ", " + ms + " ms)\n";
    if (rec.witness) out += "    witness: " + rec.witness->describe() + "\n";
  }
  out += "summary: " + std::to_string(report.count(Verdict::Pass)) + " pass, " +
         std::to_string(report.count(Verdict::Fail)) + " fail, " +
         std::to_string(report.count(Verdict::Budget)) + " budget\n";
  return out;
}

int report_exit(const Report& report) {
  switch (report.overall()) {
    case Verdict::Pass: return kExitOk;
    case Verdict::Fail: return kExitFail;
    case Verdict::Budget: return kExitBudget;
  }
  return kExitFail;
}

int emit_report(const Options& opt, const Report& report) {
  if (opt.format == "json") {
    write_out(opt, report_to_json(report).dump(2) + "\n");
  } else {
    write_out(opt, report_text(report));
  }
  return report_exit(report);
}

int cmd_gens(const Options& opt) {
  GeneratorSet gens = build_set(opt);
  if (opt.format == "json") {
    write_out(opt, gens_to_json(gens).dump(2) + "\n");
  } else {
    std::string out;
    for (const auto& s : gens.rendered()) out += s + "\n";
    write_out(opt, out);
  }
  return kExitOk;
}

int cmd_gb(const Options& opt) {
  GeneratorSet gens = build_set(opt);
  GroebnerBasis gb = buchberger(gens, MonomialOrder::parse(opt.order), make_budget(opt));
  if (opt.format == "json") {
    write_out(opt, gb_to_json(gb).dump(2) + "\n");
  } else {
    std::string out;
    for (const auto& g : gb.elements()) out += g.str() + "\n";
    out += "pairs=" + std::to_string(gb.stats().pairs) +
           " reductions=" + std::to_string(gb.stats().reductions) +
           " maxdeg=" + std::to_string(gb.stats().maxdeg) + "\n";
    write_out(opt, out);
  }
  return kExitOk;
}

int cmd_points(const Options& opt) {
  GeneratorSet gens = build_set(opt);
  const FieldSpec field = FieldSpec::parse(opt.field);
  if (!field.is_prime_field()) throw InvalidSpec("points enumeration needs --field Fp:<q>");
  Budget budget = make_budget(opt);
  PointSet ps = opt.serial ? points_vanishing_serial(gens, field.modulus(), budget)
                           : points_vanishing(gens, field.modulus(), budget);
  if (opt.format == "json") {
    write_out(opt, points_to_json(ps).dump(2) + "\n");
  } else {
    std::string out = std::to_string(ps.points.size()) + " points over Fp:" +
                      std::to_string(ps.q) + "^" + std::to_string(ps.nvars) + "\n";
    for (const auto& p : ps.points) {
      out += "(";
      for (std::size_t k = 0; k < p.size(); ++k)
        out += (k ? "," : "") + std::to_string(p[k]);
      out += ")\n";
    }
    write_out(opt, out);
  }
  return kExitOk;
}

int cmd_verify(const std::string& what, const Options& opt, bool field_given) {
  // The charp statement is characteristic-specific; demanding an explicit
  // field keeps a bare run from silently proving the weaker statement.
  if (what == "corollary4" && !field_given)
    throw InvalidSpec("verify corollary4 needs an explicit --field (use Fp:" +
                      std::to_string(opt.p) + " for the positive direction)");
  const FieldSpec field = FieldSpec::parse(opt.field);
  const Budget budget = make_budget(opt);
#ifdef _OPENMP
  if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
#endif
  Report report;
  if (what == "theorem") {
    if (opt.blocks.empty()) throw InvalidSpec("verify theorem needs --blocks");
    report = verify_theorem_main(BlockSpec::parse(opt.blocks), field, budget);
  } else if (what == "lemma1") {
    auto [c, d] = two_block_params(opt);
    report = check_lemma1(c, d, field, budget);
  } else if (what == "lemma2") {
    auto [c, d] = two_block_params(opt);
    report = check_lemma2(c, d, field, budget);
  } else if (what == "lemma3") {
    if (opt.d < 1) throw InvalidSpec("verify lemma3 needs --d");
    report = check_lemma3(opt.d, field, budget);
  } else if (what == "prop5a") {
    if (opt.c < 2) throw InvalidSpec("verify prop5a needs --c >= 2");
    report = verify_prop5a(opt.c, field, budget);
  } else if (what == "corollary4") {
    if (opt.p == 0) throw InvalidSpec("verify corollary4 needs --p and --h");
    report = verify_corollary4(opt.p, opt.h, field, budget);
  } else if (what == "corollary6") {
    auto [c, d] = two_block_params(opt);
    report = verify_corollary6(c, d, field, budget);
  } else if (what == "identities") {
    auto [c, d] = two_block_params(opt);
    report = check_identity_suite(c, d, field);
  } else if (what == "counts") {
    if (opt.blocks.empty()) throw InvalidSpec("verify counts needs --blocks");
    report = check_counts_and_height(BlockSpec::parse(opt.blocks), field, budget);
  } else {
    throw InvalidSpec("unknown verify target '" + what + "'");
  }
  return emit_report(opt, report);
}

int cmd_suite(const Options& opt) {
  const Budget budget = make_budget(opt);
  Report report = run_jobs(suite_jobs(suite_level_parse(opt.level)), budget, opt.jobs);
  return emit_report(opt, report);
}

void add_common(CLI::App* cmd, Options& opt, bool with_set) {
  // --h is a real option here, so help is long-form only.
  cmd->set_help_flag("--help", "print help");
  cmd->add_option("--blocks", opt.blocks, "block column counts, e.g. 2,2");
  cmd->add_option("--field", opt.field, "Q or Fp:<prime>")->capture_default_str();
  cmd->add_option("--order", opt.order, "degrevlex or lex")->capture_default_str();
  cmd->add_option("--format", opt.format, "text or json")->capture_default_str();
  cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");
  cmd->add_option("--c", opt.c, "first block columns");
  cmd->add_option("--d", opt.d, "second block columns");
  cmd->add_option("--max-pairs", opt.max_pairs, "S-pair cap")->capture_default_str();
  cmd->add_option("--max-degree", opt.max_degree, "intermediate degree cap")
      ->capture_default_str();
  cmd->add_option("--max-points", opt.max_points, "enumeration cap")->capture_default_str();
  if (with_set) {
    cmd->add_option("--set", opt.set,
                    "full | reduced | stci | charp | family:S|T|J|Jcd")
        ->capture_default_str();
    cmd->add_option("--i", opt.i, "family index i");
    cmd->add_option("--j", opt.j, "family index j");
    cmd->add_option("--p", opt.p, "prime for charp sets");
    cmd->add_option("--h", opt.h, "prime power exponent")->capture_default_str();
    cmd->add_flag("--canonical-names", opt.canonical_names,
                  "emit x{i}_{j} variable names even for two blocks");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "scrolls: determinantal generator sets of rational normal scrolls and\n"
      "mechanical verification of their radical-membership identities"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  Options opt;

  CLI::App* gens = app.add_subcommand("gens", "emit a named generator set");
  add_common(gens, opt, true);

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of a generator set");
  add_common(gb, opt, true);

  CLI::App* points = app.add_subcommand("points", "exhaustive vanishing set over F_q");
  add_common(points, opt, true);
  points->add_flag("--serial", opt.serial, "use the serial reference kernel");

  CLI::App* verify = app.add_subcommand("verify", "replay a verification suite");
  std::string what;
  verify->add_option("what", what,
                     "theorem | lemma1 | lemma2 | lemma3 | prop5a | corollary4 | "
                     "corollary6 | identities | counts")
      ->required();
  add_common(verify, opt, true);
  verify->add_option("--jobs", opt.jobs, "parallel verification jobs");

  CLI::App* suite = app.add_subcommand("suite", "run a fixed check list");
  suite->add_option("--level", opt.level, "smoke | paper | stretch")->capture_default_str();
  suite->add_option("--format", opt.format, "text or json");
  suite->add_option("-o,--output", opt.output, "write to file instead of stdout");
  suite->add_option("--jobs", opt.jobs, "parallel verification jobs");
  suite->add_option("--max-pairs", opt.max_pairs, "S-pair cap");
  suite->add_option("--max-degree", opt.max_degree, "intermediate degree cap");
  suite->add_option("--max-points", opt.max_points, "enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gens->parsed()) return cmd_gens(opt);
    if (gb->parsed()) return cmd_gb(opt);
    if (points->parsed()) return cmd_points(opt);
    if (verify->parsed()) return cmd_verify(what, opt, verify->count("--field") > 0);
    if (suite->parsed()) return cmd_suite(opt);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
