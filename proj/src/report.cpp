#include <socle/report.hpp>

#include <json.hpp>

#include <algorithm>

namespace socle {

namespace {

using nlohmann::json;

const char* kEncodingNote =
    "character layers encode the diagonal exponent pair (alpha, delta) in the "
    "(r, m) fields";

bool has_character_layer(const SocleFiltration& fil) {
  for (const Layer& layer : fil.layers)
    for (const LayerEntry& e : layer)
      if (e.label.kind == LabelKind::TORUS_CHAR || e.label.kind == LabelKind::S_CHAR)
        return true;
  return false;
}

std::vector<std::string> assembled_notes(const VerifyReport& rep) {
  std::vector<std::string> notes;
  if (!rep.expected.empty()) notes.push_back("expected: " + rep.expected);
  notes.insert(notes.end(), rep.notes.begin(), rep.notes.end());
  const bool mentioned =
      std::any_of(notes.begin(), notes.end(), [](const std::string& n) {
        return n.find("(alpha, delta)") != std::string::npos;
      });
  if (!mentioned && has_character_layer(rep.computed)) notes.push_back(kEncodingNote);
  return notes;
}

}  // namespace

std::string report_to_json(const VerifyReport& rep) {
  json j;
  j["check"] = rep.check;
  j["p"] = rep.p;
  j["r"] = rep.r;
  j["level"] = rep.level;
  j["group"] = rep.group;
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  json fil = json::array();
  for (const Layer& layer : rep.computed.layers) {
    json jl = json::array();
    for (const LayerEntry& e : layer) {
      json je;
      je["r"] = e.label.a;
      je["m"] = e.label.b;
      je["mult"] = e.mult;
      jl.push_back(je);
    }
    fil.push_back(jl);
  }
  j["filtration"] = fil;
  j["notes"] = assembled_notes(rep);
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& rep) {
  std::string s = rep.pass ? "[PASS]" : "[FAIL]";
  if (rep.report_only) s = rep.pass ? "[HELD]" : "[NOT HELD]";
  s += " " + rep.check + " p=" + std::to_string(rep.p) +
       " r=" + std::to_string(rep.r) + " N=" + std::to_string(rep.level) + " " +
       rep.group + "\n";
  if (!rep.computed.layers.empty())
    s += "  filtration: " + rep.computed.to_string() + "\n";
  for (const std::string& n : assembled_notes(rep)) s += "  note: " + n + "\n";
  return s;
}

std::string cache_file_name(const VerifyReport& rep) {
  return rep.check + "_p" + std::to_string(rep.p) + "_r" + std::to_string(rep.r) +
         "_N" + std::to_string(rep.level) + "_" + rep.group + ".json";
}

std::optional<VerifyReport> report_from_json(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  for (const char* key : {"check", "p", "r", "level", "group", "verdict",
                          "filtration", "notes"})
    if (!j.contains(key)) return std::nullopt;
  if (!j["check"].is_string() || !j["p"].is_number_unsigned() ||
      !j["r"].is_number_unsigned() || !j["level"].is_number_unsigned() ||
      !j["group"].is_string() || !j["verdict"].is_string() ||
      !j["filtration"].is_array() || !j["notes"].is_array())
    return std::nullopt;

  VerifyReport rep;
  rep.check = j["check"].get<std::string>();
  rep.p = j["p"].get<u32>();
  rep.r = j["r"].get<u32>();
  rep.level = j["level"].get<u32>();
  rep.group = j["group"].get<std::string>();
  rep.pass = j["verdict"].get<std::string>() == "PASS";
  rep.report_only = rep.check == "brauer";
  rep.computed.p = rep.p;
  for (const json& jl : j["filtration"]) {
    if (!jl.is_array()) return std::nullopt;
    Layer layer;
    for (const json& je : jl) {
      if (!je.is_object() || !je.contains("r") || !je.contains("m") ||
          !je.contains("mult"))
        return std::nullopt;
      layer.push_back(LayerEntry{weight_label(je["r"].get<u32>(), je["m"].get<u32>()),
                                 je["mult"].get<u32>()});
    }
    rep.computed.layers.push_back(layer);
  }
  for (const json& jn : j["notes"]) {
    if (!jn.is_string()) return std::nullopt;
    rep.notes.push_back(jn.get<std::string>());
  }
  return rep;
}

}  // namespace socle
