#include "scrolls/json_io.hpp"

namespace scrolls {

ordered_json gens_to_json(const GeneratorSet& gens) {
  ordered_json j;
  j["name"] = set_name_str(gens.name);
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : gens.params) params[k] = v;
  j["params"] = params;
  j["ring"] = {{"variables", gens.ring->var_names()}, {"field", gens.ring->field().str()}};
  j["generators"] = gens.rendered();
  return j;
}

ordered_json gb_to_json(const GroebnerBasis& gb) {
  ordered_json j;
  j["order"] = gb.ring()->order().str();
  std::vector<std::string> elems;
  elems.reserve(gb.elements().size());
  for (const auto& g : gb.elements()) elems.push_back(g.str());
  j["elements"] = elems;
  j["stats"] = {{"pairs", gb.stats().pairs},
                {"reductions", gb.stats().reductions},
                {"maxdeg", gb.stats().maxdeg}};
  return j;
}

ordered_json points_to_json(const PointSet& ps) {
  ordered_json j;
  j["q"] = ps.q;
  j["nvars"] = ps.nvars;
  j["count"] = ps.points.size();
  j["points"] = ps.points;
  return j;
}

ordered_json report_to_json(const Report& report, bool with_millis) {
  ordered_json j;
  ordered_json checks = ordered_json::array();
  for (const auto& rec : report.records) {
    ordered_json r;
    r["check"] = rec.check;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    r["params"] = params;
    r["verdict"] = verdict_str(rec.verdict);
    if (rec.witness) {
      ordered_json w = ordered_json::object();
      if (rec.witness->point) {
        w["point"] = rec.witness->point->coords;
        w["nonvanishing"] = rec.witness->point->nonvanishing;
      }
      if (rec.witness->poly) w["poly"] = *rec.witness->poly;
      r["witness"] = w;
    }
    r["method"] = rec.method;
    if (with_millis) r["millis"] = rec.millis;
    checks.push_back(std::move(r));
  }
  j["checks"] = checks;
  j["summary"] = {{"pass", report.count(Verdict::Pass)},
                  {"fail", report.count(Verdict::Fail)},
                  {"budget", report.count(Verdict::Budget)}};
  return j;
}

}  // namespace scrolls
