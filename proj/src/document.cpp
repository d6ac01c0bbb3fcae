#include "quiverkit/document.hpp"

#include <map>
#include <vector>

#include <json.hpp>

#include "quiverkit/error.hpp"

namespace quiverkit {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

Id id_from_json(const json& j) {
  if (j.is_string()) return Id(j.get<std::string>());
  if (j.is_number_unsigned()) return Id::natural(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return Id::natural(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  }
  if (j.is_array()) {
    std::vector<Id> elements;
    for (const auto& x : j) elements.push_back(id_from_json(x));
    return Id::tuple(std::move(elements));
  }
  throw Error(ErrorKind::invalid_argument, "not an id: " + j.dump());
}

json id_to_json(const Id& id) {
  switch (id.kind()) {
    case Id::Kind::text:
      return id.text();
    case Id::Kind::natural:
      return id.number();
    case Id::Kind::tuple:
      break;
  }
  json arr = json::array();
  for (const Id& x : id.elements()) arr.push_back(id_to_json(x));
  return arr;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::parse, "syntax error at line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + e.what());
  }
}

void check_keys(const json& j, std::initializer_list<const char*> known, const char* what) {
  if (!j.is_object()) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw Error(ErrorKind::invalid_argument, std::string(what) + ": unknown key \"" + key + "\"");
  }
  if (j.contains("version")) {
    const json& v = j.at("version");
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
      throw Error(ErrorKind::invalid_argument,
                  std::string(what) + ": unsupported version " + v.dump());
    }
  }
}

QuiverData quiver_data_from_json(const json& j) {
  check_keys(j, {"version", "v", "e"}, "quiver document");
  if (!j.contains("v") || !j.contains("e") || !j.at("v").is_array() || !j.at("e").is_array()) {
    throw Error(ErrorKind::invalid_argument, "quiver document needs arrays \"v\" and \"e\"");
  }
  QuiverData d;
  for (const auto& v : j.at("v")) d.vertices.push_back(id_from_json(v));
  for (const auto& e : j.at("e")) {
    if (!e.is_array() || e.size() != 3) {
      throw Error(ErrorKind::invalid_argument, "edge entry must be [id, src, tgt]: " + e.dump());
    }
    d.edges.push_back({id_from_json(e[0]), id_from_json(e[1]), id_from_json(e[2])});
  }
  return d;
}

Quiver quiver_from_json(const json& j) {
  QuiverData d = quiver_data_from_json(j);
  CheckReport r = validate_quiver(d);
  if (!r) throw Error(ErrorKind::invalid_argument, r.violations.front());
  return Quiver(d);
}

json quiver_to_json(const Quiver& q) {
  json j;
  j["version"] = kFormatVersion;
  j["v"] = json::array();
  for (const Id& v : q.vertices()) j["v"].push_back(id_to_json(v));
  j["e"] = json::array();
  for (Index e = 0; e < q.edge_count(); ++e) {
    j["e"].push_back(json::array({id_to_json(q.edge(e)), id_to_json(q.vertex(q.source(e))),
                                  id_to_json(q.vertex(q.target(e)))}));
  }
  return j;
}

std::map<Id, Id> map_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be an array");
  std::map<Id, Id> out;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      throw Error(ErrorKind::invalid_argument,
                  std::string(what) + " entry must be [x, image]: " + entry.dump());
    }
    Id x = id_from_json(entry[0]);
    if (!out.emplace(x, id_from_json(entry[1])).second) {
      throw Error(ErrorKind::invalid_argument,
                  std::string(what) + " defines " + x.to_string() + " twice");
    }
  }
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string id_json(const Id& id) { return id_to_json(id).dump(); }

QuiverData parse_quiver_data(std::string_view text) {
  return quiver_data_from_json(parse_json(text));
}

Quiver parse_quiver(std::string_view text) { return quiver_from_json(parse_json(text)); }

std::string serialize(const Quiver& q) {
  // One edge per line keeps golden files diffable.
  std::string out = "{\n  \"version\": " + std::to_string(kFormatVersion) + ",\n  \"v\": [";
  for (Index v = 0; v < q.vertex_count(); ++v) {
    if (v) out += ", ";
    out += id_json(q.vertex(v));
  }
  out += "],\n  \"e\": [";
  for (Index e = 0; e < q.edge_count(); ++e) {
    out += e ? ",\n    " : "\n    ";
    out += "[" + id_json(q.edge(e)) + ", " + id_json(q.vertex(q.source(e))) + ", " +
           id_json(q.vertex(q.target(e))) + "]";
  }
  out += q.edge_count() ? "\n  ]\n}\n" : "]\n}\n";
  return out;
}

QuiverMorphism parse_morphism(std::string_view text) {
  json j = parse_json(text);
  check_keys(j, {"version", "dom", "cod", "vmap", "emap"}, "morphism document");
  for (const char* k : {"dom", "cod", "vmap", "emap"}) {
    if (!j.contains(k)) {
      throw Error(ErrorKind::invalid_argument, std::string("morphism document lacks \"") + k + "\"");
    }
  }
  QuiverMorphism m = QuiverMorphism::from_ids(
      quiver_from_json(j.at("dom")), quiver_from_json(j.at("cod")),
      map_from_json(j.at("vmap"), "vmap"), map_from_json(j.at("emap"), "emap"));
  CheckReport r = validate_morphism(m);
  if (!r) throw Error(ErrorKind::invalid_argument, "not a quiver homomorphism: " + r.violations.front());
  return m;
}

std::string serialize(const QuiverMorphism& m) {
  auto rows = [](const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ",\n    " : "\n    ") + items[i];
    return out + (items.empty() ? "]" : "\n  ]");
  };
  std::vector<std::string> vmap;
  for (Index v = 0; v < m.dom().vertex_count(); ++v) {
    vmap.push_back("[" + id_json(m.dom().vertex(v)) + ", " +
                   id_json(m.cod().vertex(m.vertex_map()[v])) + "]");
  }
  std::vector<std::string> emap;
  for (Index e = 0; e < m.dom().edge_count(); ++e) {
    emap.push_back("[" + id_json(m.dom().edge(e)) + ", " + id_json(m.cod().edge(m.edge_map()[e])) +
                   "]");
  }
  return "{\n  \"version\": " + std::to_string(kFormatVersion) +
         ",\n  \"dom\": " + quiver_to_json(m.dom()).dump() +
         ",\n  \"cod\": " + quiver_to_json(m.cod()).dump() + ",\n  \"vmap\": " + rows(vmap) +
         ",\n  \"emap\": " + rows(emap) + "\n}\n";
}

std::string serialize(const CheckReport& r) {
  json j;
  j["ok"] = r.ok;
  if (r.criterion != 0) j["criterion"] = r.criterion;
  j["violations"] = r.violations;
  j["witness"] = json::array();
  for (const Id& x : r.witness) j["witness"].push_back(id_to_json(x));
  return j.dump();
}

std::string export_dot(const Quiver& q, std::string_view name) {
  std::string out = "digraph \"" + escape_dot(std::string(name)) + "\" {\n";
  for (Index v = 0; v < q.vertex_count(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + escape_dot(q.vertex(v).to_string()) +
           "\"];\n";
  }
  for (Index e = 0; e < q.edge_count(); ++e) {
    out += "  n" + std::to_string(q.source(e)) + " -> n" + std::to_string(q.target(e)) +
           " [label=\"" + escape_dot(q.edge(e).to_string()) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace quiverkit
