#include "sepnoether/report.hpp"

namespace sepnoether {

using nlohmann::json;

json to_json(const MultVector& m) { return json(m.entries()); }

json to_json(const Context& ctx) {
  json out = json::array();
  for (const auto& g : ctx.elements()) out.push_back(g.coords);
  return out;
}

json to_json(const Decomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) terms.push_back({{"coeff", t.coeff}, {"vector", to_json(t.vector)}});
  return {{"target", to_json(d.target)}, {"terms", std::move(terms)}};
}

json to_json(const BetaSepResult& r, bool include_elapsed) {
  json out = {
      {"schema", kSchemaVersion},
      {"group", r.group.to_string()},
      {"beta_sep", r.value},
      {"upper_bound", r.upper_bound},
      {"witness", {{"elements", to_json(r.witness_context)}, {"vector", to_json(r.witness_vector)}}},
      {"subsets_examined", r.subsets_examined},
      {"subsets_pruned", r.subsets_pruned},
  };
  if (include_elapsed) out["elapsed_ms"] = r.elapsed.count();
  return out;
}

json to_json(const WitnessPackage& pkg) {
  json out = {
      {"schema", kSchemaVersion},
      {"group", pkg.ctx.group().to_string()},
      {"table", pkg.odd_table ? "odd" : "even"},
      {"elements", to_json(pkg.ctx)},
      {"vector", to_json(pkg.m)},
      {"claimed_length", pkg.claimed_length},
      {"certificate", to_string(pkg.certificate)},
  };
  if (pkg.certificate == CertificateKind::Divisibility) {
    out["certificate_index"] = pkg.certificate_index;
    out["certificate_divisor"] = pkg.certificate_divisor;
  }
  if (!pkg.odd_table) out["prime"] = pkg.prime;
  return out;
}

json to_json(const TheoremCheck& check) {
  return {
      {"theorem", check.theorem},
      {"applies", check.applies},
      {"closed_form", check.closed_form ? json(*check.closed_form) : json(nullptr)},
      {"computed", check.computed ? json(*check.computed) : json(nullptr)},
      {"status", to_string(check.status)},
      {"hypothesis", check.hypothesis},
  };
}

json to_json(const TheoremReport& report, bool include_elapsed) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  json out = {
      {"schema", kSchemaVersion},
      {"group", report.group.to_string()},
      {"upper_bound", report.upper_bound},
      {"lower_bound", report.lower_bound},
      {"lower_bound_certified", report.lower_bound_certified},
      {"bounds_consistent", report.bounds_consistent()},
      {"beta_sep", report.sweep ? json(report.sweep->value) : json(nullptr)},
      {"theorems", std::move(checks)},
      {"status", report.has_mismatch() ? "MISMATCH" : "MATCH"},
  };
  if (report.sweep) out["sweep"] = to_json(*report.sweep, include_elapsed);
  if (!report.sweep_note.empty()) out["note"] = report.sweep_note;
  return out;
}

json group_info_json(const GroupSpec& group) {
  return {
      {"schema", kSchemaVersion},
      {"group", group.to_string()},
      {"alias", group.to_alias()},
      {"rank", group.rank()},
      {"exponent", group.exponent()},
      {"order", group.order()},
      {"d_star", d_star(group)},
      {"upper_bound", upper_bound(group)},
  };
}

Decomposition decomposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("target") || !j.contains("terms") || !j["terms"].is_array())
    fail(ErrorKind::Parse, "decomposition JSON needs 'target' and 'terms'");
  Decomposition d{MultVector(j["target"].get<std::vector<Int>>()), {}};
  for (const auto& t : j["terms"]) {
    if (!t.contains("coeff") || !t.contains("vector")) fail(ErrorKind::Parse, "term needs 'coeff' and 'vector'");
    d.terms.push_back({t["coeff"].get<Int>(), MultVector(t["vector"].get<std::vector<Int>>())});
  }
  return d;
}

}  // namespace sepnoether
