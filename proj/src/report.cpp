#include "bsaks/report.hpp"

#include <algorithm>
#include <sstream>

namespace bsaks {

using nlohmann::json;

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

void VerificationReport::sort_by_id() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

json number_json(const Number& x) {
  return {{"value", x.to_string()}, {"float", x.to_double()}, {"exact", x.is_exact()}};
}

namespace {

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json params_json(const std::vector<std::pair<std::string, std::string>>& params) {
  json out = json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json estimate_json(const QuantityEstimate& e) {
  json out;
  out["quantity"] = e.quantity;
  out["value"] = e.value.to_string();
  out["value_float"] = e.value.to_double();
  out["bound_kind"] = bound_kind_name(e.bound_kind);
  out["horizon"] = e.horizon;
  out["params"] = params_json(e.params);
  json w = nullptr;
  if (e.witness_pair) {
    w = {{"type", "pair"}, {"k", e.witness_pair->first}, {"l", e.witness_pair->second}};
  } else if (e.witness_blocks) {
    w = {{"type", "blocks"}, {"F", e.witness_blocks->first}, {"H", e.witness_blocks->second}};
  } else if (e.witness_set) {
    w = {{"type", "set"}, {"F", *e.witness_set}, {"alpha", rationals(e.witness_alpha)}};
  } else if (e.witness_functional) {
    w = {{"type", "functional"}, {"functional", e.witness_functional->to_string()}, {"count", e.witness_count}};
  }
  out["witness"] = w;
  if (e.profile) {
    json p = json::array();
    for (const auto& v : e.profile->values) p.push_back(v.to_string());
    out["profile"] = p;
  }
  return out;
}

json minimization_json(const MinimizationResult& r) {
  return {{"value", r.value.to_string()},
          {"value_float", r.value.to_double()},
          {"alpha", rationals(r.alpha)},
          {"method", min_method_name(r.method)},
          {"face", r.face}};
}

json sm_json(const SmResult& r) {
  json out = estimate_json(r.estimate);
  json sets = json::array();
  for (const auto& s : r.sets) sets.push_back({{"F", s.set}, {"min", minimization_json(s.result)}});
  out["sets"] = sets;
  return out;
}

json sm_check_json(const SmCheck& c) {
  json v = json::array();
  for (const auto& s : c.violations) v.push_back({{"F", s.set}, {"min", minimization_json(s.result)}});
  return {{"pass", c.pass},
          {"certified", c.certified},
          {"strategy", set_strategy_name(c.strategy)},
          {"sets_checked", c.sets_checked},
          {"violations", v}};
}

json dichotomy_json(const DichotomyResult& r, const VerifyOutcome& verified) {
  json out{{"case", dichotomy_case_name(r.which)}, {"M", r.m}, {"candidates", r.candidates}};
  if (r.which == DichotomyCase::kA) out["d"] = r.d;
  if (r.which == DichotomyCase::kB) out["f"] = r.f;
  out["verified"] = verified.ok;
  if (!verified.ok) out["verifier"] = verified.message;
  return out;
}

json ramsey_json(const RamseyResult& r, std::uint64_t t) {
  json out{{"t", t}};
  if (r.set) {
    out["set"] = *r.set;
    out["color"] = r.color;
  } else {
    out["set"] = nullptr;
    out["result"] = "none-at-this-n";
  }
  return out;
}

json set_report_json(const SetReport& r) {
  json analytic = json::array();
  for (const auto& a : r.record.analytic) {
    analytic.push_back(
        {{"quantity", a.quantity}, {"value", to_string(a.value)}, {"kind", bound_kind_name(a.kind)}, {"citation", a.citation}});
  }
  json evidence = json::array();
  for (const auto& e : r.evidence) {
    json item{{"quantity", e.quantity},
              {"member", e.member},
              {"source", e.source},
              {"value", e.value.to_string()},
              {"kind", bound_kind_name(e.kind)},
              {"checked", e.checked}};
    if (e.checked) {
      item["consistent"] = e.consistent;
      item["relation"] = e.relation;
    }
    evidence.push_back(item);
  }
  return {{"set", r.record.id},
          {"summary", r.record.summary},
          {"space", r.record.space.name()},
          {"analytic", analytic},
          {"evidence", evidence},
          {"consistent", r.consistent}};
}

json distortion_json(const DistortionResult& r) {
  return {{"sequence", r.spec.name()},
          {"eta", to_string(r.eta)},
          {"beta", r.beta.to_string()},
          {"beta_windows", {r.beta_small.to_string(), r.beta_large.to_string()}},
          {"scale", to_string(r.scale)},
          {"alpha", rationals(r.alpha)},
          {"m0", r.m0},
          {"sm_window", r.sm_lower.to_string()},
          {"max_norm", r.max_norm.to_string()}};
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item{{"id", c.id},
              {"citation", c.citation},
              {"values", params_json(c.values)},
              {"bound_kinds", c.bound_kinds},
              {"relation", c.relation},
              {"tolerance", c.tolerance},
              {"pass", c.pass}};
    if (r.timings) item["runtime_s"] = c.runtime;
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (!c.pass) item["reproduce"] = c.reproduce;
    checks.push_back(item);
  }
  return {{"pass", r.pass()}, {"checks", checks}};
}

std::string profile_csv(const WindowProfile& p) {
  std::ostringstream out;
  out << "m,value,exact\n";
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    out << i + 1 << ',' << p.values[i].to_string() << ',' << (p.values[i].is_exact() ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string set_report_csv(const SetReport& r) {
  std::ostringstream out;
  out << "set,quantity,member,source,value,kind,checked,consistent\n";
  for (const auto& e : r.evidence) {
    out << csv_field(r.record.id) << ',' << e.quantity << ',' << csv_field(e.member) << ',' << csv_field(e.source) << ','
        << e.value.to_string() << ',' << bound_kind_name(e.kind) << ',' << (e.checked ? 1 : 0) << ','
        << (e.consistent ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "id,pass,relation,tolerance,citation\n";
  for (const auto& c : r.checks) {
    out << csv_field(c.id) << ',' << (c.pass ? 1 : 0) << ',' << csv_field(c.relation) << ',' << csv_field(c.tolerance)
        << ',' << csv_field(c.citation) << '\n';
  }
  return out.str();
}

}  // namespace bsaks
