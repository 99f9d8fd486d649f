#include "rmon/json_io.hpp"

#include <fstream>
#include <sstream>

namespace rmon {

using nlohmann::json;

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json monoid_to_json(const Monoid& m) {
  json j;
  j["name"] = m.name;
  j["size"] = m.size;
  j["identity"] = m.identity;
  j["table"] = m.table;
  if (!m.labels.empty()) j["labels"] = m.labels;
  return j;
}

Monoid monoid_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("monoid JSON must be an object");
  for (const char* key : {"name", "size", "identity", "table"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("monoid JSON is missing '") + key + "'");
    }
  }
  Monoid m;
  if (!j["name"].is_string()) throw std::invalid_argument("'name' must be a string");
  if (!j["size"].is_number_integer()) throw std::invalid_argument("'size' must be an integer");
  if (!j["identity"].is_number_integer()) {
    throw std::invalid_argument("'identity' must be an integer");
  }
  if (!j["table"].is_array()) throw std::invalid_argument("'table' must be an array");
  m.name = j["name"].get<std::string>();
  m.size = j["size"].get<int>();
  m.identity = j["identity"].get<Elem>();
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw std::invalid_argument("'table' rows must be arrays");
    std::vector<Elem> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw std::invalid_argument("'table' entries must be integers");
      r.push_back(e.get<Elem>());
    }
    m.table.push_back(std::move(r));
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw std::invalid_argument("'labels' must be an array");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw std::invalid_argument("'labels' entries must be strings");
      m.labels.push_back(l.get<std::string>());
    }
  }
  return m;
}

Monoid load_monoid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
  return monoid_from_json(j);
}

void save_monoid(const Monoid& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << canonical_dump(monoid_to_json(m));
}

std::vector<std::pair<int, int>> cover_edges(const ActedPoset& p) {
  std::vector<std::pair<int, int>> out;
  int n = p.points();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!p.lt(u, v)) continue;
      bool cover = true;
      for (int w = 0; w < n && cover; ++w) {
        cover = !(p.lt(u, w) && p.lt(w, v));
      }
      if (cover) out.emplace_back(u, v);
    }
  }
  return out;
}

json poset_to_json(const ActedPoset& p) {
  json j;
  j["points"] = p.point_labels;
  json covers = json::array();
  for (auto [u, v] : cover_edges(p)) covers.push_back({u, v});
  j["covers"] = covers;
  j["action"] = p.action;
  return j;
}

json forest_to_json(const ChainForest& y) {
  json j;
  j["chains"] = y.chains;
  j["poset"] = poset_to_json(y.poset);
  return j;
}

std::string poset_dot(const ActedPoset& p, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.points(); ++i) {
    os << "  p" << i << " [label=\"" << p.point_labels[i] << "\"];\n";
  }
  for (auto [u, v] : cover_edges(p)) {
    os << "  p" << u << " -> p" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

json word_to_json(const PointedMSet& fam, const LocatedWord& w) {
  json j = json::array();
  for (const auto& [slot, letter] : w.entries) {
    j.push_back({slot, fam.letters[letter]});
  }
  return j;
}

LocatedWord word_from_json(const PointedMSet& fam, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("word JSON must be an array");
  std::vector<std::pair<int, int>> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_string()) {
      throw std::invalid_argument("word entries must be [slot, letter] pairs");
    }
    entries.emplace_back(e[0].get<int>(), fam.letter_by_label(e[1].get<std::string>()));
  }
  return make_word(std::move(entries), fam);
}

json normal_to_json(const ActedPoset& p, const NormalWord& w) {
  json j = json::array();
  for (Elem l : w.letters) j.push_back(p.point_labels[l]);
  return j;
}

json make_certificate(const std::string& suite, const json& params, bool pass) {
  json cert;
  cert["schema"] = "rmon.cert/1";
  cert["suite"] = suite;
  cert["params"] = params;
  cert["verdict"] = pass ? "pass" : "fail";
  return cert;
}

void write_certificate(const std::string& path, const json& cert) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << canonical_dump(cert);
}

json read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
  if (!j.is_object() || j.value("schema", "") != "rmon.cert/1") {
    throw std::invalid_argument("'" + path + "' is not an rmon.cert/1 certificate");
  }
  return j;
}

}  // namespace rmon
