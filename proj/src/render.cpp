#include "r0/render.hpp"

namespace r0 {

namespace {

std::string bindings_text(const Algebra& alg,
                          const std::vector<std::pair<std::string, ElementId>>& elems) {
  std::string out;
  for (const auto& [role, id] : elems) {
    if (!out.empty()) out += " ";
    out += role + "=" + alg.name(id);
  }
  return out;
}

std::string grades_text(const std::vector<std::pair<std::string, Rat>>& grades) {
  std::string out;
  for (const auto& [role, r] : grades) {
    if (!out.empty()) out += " ";
    out += role + "=" + r.str();
  }
  return out;
}

}  // namespace

std::string check_line(const Algebra& alg, const CheckItem& item) {
  std::string out = item.pass ? "[PASS] " : "[FAIL] ";
  out += item.label;
  if (!item.pass) {
    const std::string w = bindings_text(alg, item.witness);
    if (!w.empty()) out += "  witness: " + w;
    if (!item.note.empty()) out += "  (" + item.note + ")";
  }
  return out;
}

std::string verdict_line(const Algebra& alg, const std::string& name, const Verdict& v) {
  std::string out = v.pass ? "[PASS] " : "[FAIL] ";
  out += name;
  if (!v.pass) {
    out += "  condition " + v.condition;
    const std::string e = bindings_text(alg, v.elems);
    const std::string g = grades_text(v.grades);
    if (!e.empty()) out += "  witness: " + e;
    if (!g.empty()) out += (e.empty() ? "  witness: " : " ") + g;
  }
  if (!v.note.empty()) out += "  (" + v.note + ")";
  return out;
}

std::string row_text(const Algebra& alg, const IntervalRow& row) {
  return "(" + row.lo.str() + ", " + row.hi.str() + "]  " + row.set.str(alg);
}

nlohmann::json check_json(const Algebra& alg, const CheckItem& item) {
  nlohmann::json j{{"label", item.label}, {"pass", item.pass}};
  if (!item.pass) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [role, id] : item.witness) w[role] = alg.name(id);
    if (!w.empty()) j["witness"] = w;
    if (!item.note.empty()) j["note"] = item.note;
  }
  return j;
}

nlohmann::json report_json(const Algebra& alg, const CheckReport& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& item : rep.items) arr.push_back(check_json(alg, item));
  return nlohmann::json{{"checks", arr}, {"pass", rep.pass()}};
}

nlohmann::json verdict_json(const Algebra& alg, const std::string& name, const Verdict& v) {
  nlohmann::json j{{"notion", name}, {"pass", v.pass}};
  if (!v.pass) {
    j["condition"] = v.condition;
    nlohmann::json e = nlohmann::json::object();
    for (const auto& [role, id] : v.elems) e[role] = alg.name(id);
    nlohmann::json g = nlohmann::json::object();
    for (const auto& [role, r] : v.grades) g[role] = r.str();
    j["witness"] = nlohmann::json{{"elements", e}, {"grades", g}};
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json row_json(const Algebra& alg, const IntervalRow& row) {
  return nlohmann::json{
      {"lo", row.lo.str()}, {"hi", row.hi.str()}, {"set", row.set.str(alg)}};
}

}  // namespace r0
