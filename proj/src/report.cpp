#include "realpoincare/report.hpp"

#include <iomanip>
#include <sstream>

namespace realpoincare {

using nlohmann::json;

namespace {

std::string tuple(const json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s + ")";
}

std::string angle(const json& arr) {
  std::string t = tuple(arr);
  return "<" + t.substr(1, t.size() - 2) + ">";
}

std::string coeff_line(const json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += " ";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

void field(std::ostream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(14) << key << value << "\n";
}

void point_line(std::ostream& os, const json& p) {
  std::string prox = p["proximate_to"].empty() ? "-" : "E" + coeff_line(p["proximate_to"]);
  for (auto& ch : prox)
    if (ch == ' ') ch = ',';
  os << "  p" << std::left << std::setw(4) << p["id"].get<int>() << std::setw(10) << p["kind"].get<std::string>()
     << "mult " << std::setw(4) << p["multiplicity"].get<int>() << "on " << std::setw(8) << prox;
  if (!p["translation"].is_null()) os << "at " << std::setw(8) << p["translation"].get<std::string>();
  else os << std::setw(11) << "";
  os << (p["center_real"].get<bool>() ? "real" : "non-real") << "\n";
}

void render_analyze(std::ostream& os, const json& d) {
  field(os, "branch", d["branch"]["text"]);
  const json& v = d["validation"];
  field(os, "valid", std::string(v["valid"].get<bool>() ? "yes" : "no") + ", multiplicity " +
                         std::to_string(v["multiplicity"].get<int>()) + (v["smooth"].get<bool>() ? " (smooth)" : ""));
  const json& r = d["reality"];
  std::string real = r["is_real"].get<bool>() ? "real (C = conj(C))" : "non-real";
  if (!r["witness_k"].is_null()) real += ", witness k = " + r["witness_k"].dump();
  if (!r["conjugation_shift"].is_null()) real += ", conjugation shift l = " + r["conjugation_shift"].dump();
  field(os, "reality", real);
  const json& ce = d["char_exponents"];
  field(os, "char. exp.", "beta = " + tuple(ce["beta"]) + ", N = " + tuple(ce["N"]) + ", g = " + ce["g"].dump());
  field(os, "classical", angle(d["classical_generators"]));

  const json& res = d["resolution"];
  field(os, "resolution", "delta_C = " + res["delta_C"].dump() + " (truncation " + res["truncation_used"].dump() + ")");
  for (const auto& p : res["points"]) point_line(os, p);
  os << "  exit point:\n";
  point_line(os, res["exit_point"]);
  std::string edges;
  for (const auto& e : res["graph"]["edges"]) edges += " " + e[0].dump() + "-" + e[1].dump();
  field(os, "dual graph", edges.empty() ? "(empty)" : edges.substr(1));
  field(os, "self-int.", tuple(res["graph"]["self_intersection"]));
  field(os, "dead ends", tuple(res["sigma"]));
  field(os, "rupture", tuple(res["tau"]));
  field(os, "m column", tuple(res["m_column"]));
  const json& s = d["semigroup"];
  field(os, "semigroup", angle(s["generators"]) + ", conductor " + s["conductor"].dump());
  field(os, "status", d["status"]);
  if (d["splitting"].is_null()) return;

  const json& sp = d["splitting"];
  field(os, "splitting", "rho = " + sp["rho"].dump() + ", q = " + sp["q"].dump() +
                             ", late split: " + (sp["late_split"].get<bool>() ? "yes" : "no") +
                             ", first non-real translation " + sp["nonreal_translation"].get<std::string>());
  for (const auto& p : sp["extension"]) point_line(os, p);
  const json& inv = d["real_invariants"];
  field(os, "M_sigma", tuple(inv["M_sigma"]));
  field(os, "M_tau", tuple(inv["M_tau"]));
  field(os, "m_rho", inv["m_rho"].dump());
  field(os, "recipe", "b = " + tuple(inv["recipe_b"]) + ": " + inv["recipe_parametrization"].get<std::string>());
  std::string mirror;
  for (const auto& e : d["real_graph_mirror"]["edges"])
    mirror += " " + e[0].get<std::string>() + "-" + e[1].get<std::string>();
  field(os, "real graph", mirror.empty() ? "(single vertex)" : mirror.substr(1));
}

void render_series(std::ostream& os, const json& d) {
  field(os, "branch", d["branch"]["text"]);
  if (d.contains("m_rho")) field(os, "m_rho", d["m_rho"].dump());
  const json& ex = d["expansion"];
  for (const char* key : {"PS", "P", "PR"}) {
    if (!d.contains(key)) continue;
    const std::string name = std::string(key) == "PS" ? "P^S" : (std::string(key) == "PR" ? "P^R" : "P");
    field(os, name, d[key]["factored"]);
    field(os, "", "to order " + ex["order"].dump() + ": " + coeff_line(ex[key]));
  }
  if (d.contains("refusal")) field(os, "note", d["refusal"]);
}

void render_verify(std::ostream& os, const json& d) {
  field(os, "branch", d["branch"]["text"]);
  for (const auto& c : d["checks"]) {
    os << (c["ok"].get<bool>() ? "  ok    " : "  FAIL  ") << c["name"].get<std::string>() << "\n";
    for (const auto& f : c["details"]) os << "          " << f.get<std::string>() << "\n";
  }
  const json& r = d["report"];
  os << (r["agree"].get<bool>() ? "  ok    " : "  FAIL  ") << "oracle comparison on [" << r["range"][0].dump() << ", "
     << r["range"][1].dump() << "], D = " << r["D_used"].dump() << ", matrix " << r["matrix_shape"][0].dump() << "x"
     << r["matrix_shape"][1].dump() << "\n";
  std::size_t shown = 0;
  for (const auto& m : r["mismatches"]) {
    if (++shown > 20) {
      os << "          ... " << r["mismatches"].size() - 20 << " more\n";
      break;
    }
    os << "          a = " << m["a"].dump() << ": expected " << m["expected"].get<std::string>() << ", got "
       << m["got"].get<std::string>() << " (" << m["sources"].get<std::string>() << ")\n";
  }
  field(os, "result", d["agree"].get<bool>() ? "all checks agree" : "MISMATCH");
}

void render_conjugate(std::ostream& os, const json& d) {
  field(os, "branch", d["branch"]["text"]);
  field(os, "M_sigma", tuple(d["M_sigma"]));
  field(os, "N", tuple(d["N"]));
  field(os, "b", tuple(d["b"]));
  field(os, "recipe", d["recipe"]);
  field(os, "recipe S", angle(d["recipe_generators"]) +
                            (d["semigroup_equal"].get<bool>() ? " = <M>" : " != <M>"));
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  const std::string cmd = doc.value("command", "");
  if (cmd == "analyze") render_analyze(os, doc);
  else if (cmd == "series") render_series(os, doc);
  else if (cmd == "verify") render_verify(os, doc);
  else if (cmd == "conjugate") render_conjugate(os, doc);
  else os << doc.dump(2) << "\n";
  return os.str();
}

}  // namespace realpoincare
