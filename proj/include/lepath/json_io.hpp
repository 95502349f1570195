#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "lepath/multipoly.hpp"
#include "lepath/poset.hpp"
#include "lepath/qpoly.hpp"
#include "lepath/scan.hpp"
#include "lepath/stats.hpp"

namespace lepath {

using ordered_json = nlohmann::ordered_json;

// On-disk poset description: a generating set of relations (closure is
// computed on load), optional chains fixing the weight, optional labels.
struct PosetDocument {
    int n = 0;
    std::vector<std::pair<int, int>> relations;
    std::optional<ChainPartition> chains;
    std::map<int, std::string> labels;
};

PosetDocument parse_poset_document(const std::string& text);  // throws std::invalid_argument
PosetDocument load_poset_document(const std::string& path);
std::string serialize_poset_document(const PosetDocument& doc);

Poset poset_of_document(const PosetDocument& doc);

std::string poset_hash_hex(const Poset& p);

// Polynomials as exponent -> decimal-string coefficient maps.
ordered_json to_json(const QPoly& p);
ordered_json to_json(const MultiPoly& p);

ordered_json dist_json(const CountDist& d);
ordered_json dist_json(const QDist& d);
ordered_json dist_json(const MqDist& d);

ordered_json report_json(const ScanReport& rep);

}  // namespace lepath
