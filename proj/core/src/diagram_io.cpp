#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "milnor/diagram.hpp"
#include "milnor/error.hpp"

namespace milnor {

namespace {

using nlohmann::json;

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<int>();
}

int label_of_key(const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used != key.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("arc label '" + key + "' is not an integer");
  }
}

// label -> value, from either {"label": value} or an array indexed from label 1.
std::map<int, std::optional<int>> read_label_map(const json& j, const std::string& what) {
  std::map<int, std::optional<int>> out;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out[label_of_key(key)] = value.is_null() ? std::nullopt
                                               : std::optional<int>(as_int(value, what));
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out[static_cast<int>(i) + 1] =
          j[i].is_null() ? std::nullopt : std::optional<int>(as_int(j[i], what));
    }
  } else {
    throw ParseError(what + " must be an object or an array");
  }
  return out;
}

AnyDiagram parse_link_json(const json& j) {
  if (!j.is_object()) throw ParseError("diagram file must be a JSON object");
  for (const char* key : {"components", "pd", "component_of_arc"}) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  }
  const std::string kind_text = j.value("kind", std::string("link"));
  DiagramKind kind;
  if (kind_text == "link") {
    kind = DiagramKind::kLink;
  } else if (kind_text == "stringlink") {
    kind = DiagramKind::kStringLink;
  } else {
    throw ParseError("unknown diagram kind '" + kind_text + "'");
  }

  DiagramData d;
  d.name = j.value("name", std::string());
  d.components = as_int(j["components"], "components");

  const auto comp = read_label_map(j["component_of_arc"], "component_of_arc");
  std::map<int, int> id;
  for (const auto& [label, c] : comp) {
    if (!c) throw ValidationError("arc " + std::to_string(label) + " has no component");
    id.emplace(label, static_cast<int>(id.size()));
    d.arc_component.push_back(*c);
  }
  auto arc = [&](int label) {
    auto it = id.find(label);
    if (it == id.end()) throw ValidationError("arc label " + std::to_string(label) + " is unknown");
    return it->second;
  };

  d.successor.assign(id.size(), -1);
  if (j.contains("orientation")) {
    for (const auto& [label, next] : read_label_map(j["orientation"], "orientation")) {
      if (next) d.successor[static_cast<std::size_t>(arc(label))] = arc(*next);
    }
  } else {
    throw ParseError("missing field 'orientation'");
  }

  const json& pd = j["pd"];
  if (!pd.is_array()) throw ParseError("pd must be an array");
  std::vector<int> signs;
  if (j.contains("signs")) {
    if (!j["signs"].is_array() || j["signs"].size() != pd.size()) {
      throw ParseError("signs must list one entry per crossing");
    }
    for (const json& s : j["signs"]) signs.push_back(as_int(s, "signs entry"));
  }

  std::vector<int> occurrences(id.size(), 0);
  std::vector<std::array<int, 4>> quads;
  std::vector<bool> is_under_in(id.size(), false);
  for (const json& x : pd) {
    if (!x.is_array() || x.size() != 4) throw ParseError("each pd entry needs four labels");
    std::array<int, 4> q{};
    for (std::size_t i = 0; i < 4; ++i) {
      q[i] = arc(as_int(x[i], "pd label"));
      if (++occurrences[static_cast<std::size_t>(q[i])] > 2) {
        throw ValidationError("arc label " + x[i].dump() + " occurs more than twice");
      }
    }
    is_under_in[static_cast<std::size_t>(q[0])] = true;
    quads.push_back(q);
  }

  for (std::size_t x = 0; x < quads.size(); ++x) {
    const auto [a, b, c, dd] = quads[x];
    const std::string where = "crossing " + std::to_string(x + 1);
    auto succ = [&](int l) { return d.successor[static_cast<std::size_t>(l)]; };
    int sign = 0;
    if (!signs.empty()) {
      sign = signs[x];
      if (sign != 1 && sign != -1) throw ValidationError(where + " has sign other than +-1");
    } else {
      const bool forward = succ(b) == dd;   // over strand runs b -> d
      const bool backward = succ(dd) == b;  // over strand runs d -> b
      if (forward && !backward) {
        sign = -1;
      } else if (backward && !forward) {
        sign = 1;
      } else if (forward && backward) {
        // Two-arc over strand: the arc whose head is an undercrossing is the outgoing one here.
        if (is_under_in[static_cast<std::size_t>(b)] && !is_under_in[static_cast<std::size_t>(dd)]) {
          sign = 1;
        } else if (is_under_in[static_cast<std::size_t>(dd)] && !is_under_in[static_cast<std::size_t>(b)]) {
          sign = -1;
        } else {
          throw ValidationError(where + " has an ambiguous over-strand direction; add \"signs\"");
        }
      } else {
        throw ValidationError(where + " over-strand disagrees with the orientation");
      }
    }
    if (sign > 0) {
      d.crossings.push_back(Crossing{a, c, dd, b, 1});
    } else {
      d.crossings.push_back(Crossing{a, c, b, dd, -1});
    }
  }

  if (kind == DiagramKind::kLink) return LinkDiagram(std::move(d));
  return StringLinkDiagram(std::move(d));
}

}  // namespace

BraidWord parse_braid_json(std::string_view text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("strands") || !j.contains("word")) {
    throw ParseError("braid file needs 'strands' and 'word'");
  }
  BraidWord b;
  b.strands = as_int(j["strands"], "strands");
  if (!j["word"].is_array()) throw ParseError("word must be an array");
  for (const json& g : j["word"]) b.word.push_back(as_int(g, "braid generator"));
  try {
    validate(b);
  } catch (const InvalidArgument& e) {
    throw ValidationError(e.what());
  }
  return b;
}

AnyDiagram parse_diagram_json(std::string_view text) {
  const json j = parse_text(text);
  if (j.is_object() && j.contains("strands")) {
    const BraidWord b = parse_braid_json(text);
    const std::string kind = j.value("kind", std::string("stringlink"));
    try {
      if (kind == "stringlink") return braid_to_stringlink(b);
      if (kind == "closure") return braid_closure(b);
    } catch (const InvalidArgument& e) {
      throw ValidationError(e.what());
    }
    throw ParseError("unknown braid kind '" + kind + "'");
  }
  return parse_link_json(j);
}

AnyDiagram parse_pd(std::string_view text) { return parse_link_json(parse_text(text)); }

std::string to_json_text(const Diagram& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name();
  j["components"] = d.components();
  j["kind"] = d.is_string_link() ? "stringlink" : "link";
  nlohmann::ordered_json pd = nlohmann::ordered_json::array();
  nlohmann::ordered_json signs = nlohmann::ordered_json::array();
  for (const Crossing& c : d.crossings()) {
    const auto q = c.pd();
    pd.push_back({q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1});
    signs.push_back(c.sign);
  }
  j["pd"] = pd;
  nlohmann::ordered_json comp = nlohmann::ordered_json::object();
  nlohmann::ordered_json orient = nlohmann::ordered_json::object();
  for (int a = 0; a < d.arc_count(); ++a) {
    const std::string key = std::to_string(a + 1);
    comp[key] = d.component_of(a);
    if (d.successor(a) < 0) {
      orient[key] = nullptr;
    } else {
      orient[key] = d.successor(a) + 1;
    }
  }
  j["component_of_arc"] = comp;
  j["orientation"] = orient;
  j["signs"] = signs;
  return j.dump(2) + "\n";
}

}  // namespace milnor
