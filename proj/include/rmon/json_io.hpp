// JSON encodings: monoids (round-trip canonical form), poset and chain
// forest exports, DOT rendering, and verification certificates.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rmon/located_words.hpp"
#include "rmon/order.hpp"
#include "rmon/po_semigroup.hpp"

namespace rmon {

// dump(2) with a trailing newline; keys come out alphabetically, so equal
// values give byte-equal dumps.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json monoid_to_json(const Monoid& m);
// Structural JSON problems (wrong types, missing keys) throw
// invalid_argument; semantic problems are left for validate().
Monoid monoid_from_json(const nlohmann::json& j);

Monoid load_monoid(const std::string& path);
void save_monoid(const Monoid& m, const std::string& path);

// u -> v with u < v and nothing strictly between.
std::vector<std::pair<int, int>> cover_edges(const ActedPoset& p);

nlohmann::json poset_to_json(const ActedPoset& p);
nlohmann::json forest_to_json(const ChainForest& y);
std::string poset_dot(const ActedPoset& p, const std::string& graph_name);

nlohmann::json word_to_json(const PointedMSet& fam, const LocatedWord& w);
LocatedWord word_from_json(const PointedMSet& fam, const nlohmann::json& j);
nlohmann::json normal_to_json(const ActedPoset& p, const NormalWord& w);

// Certificates carry {"schema": "rmon.cert/1", "suite", "params", "verdict"}
// plus suite-specific payload.
nlohmann::json make_certificate(const std::string& suite, const nlohmann::json& params,
                                bool pass);
void write_certificate(const std::string& path, const nlohmann::json& cert);
nlohmann::json read_certificate(const std::string& path);  // checks the schema tag

}  // namespace rmon
