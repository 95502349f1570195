#include "lepath/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lepath {

namespace {
using nlohmann::json;
}

PosetDocument parse_poset_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    PosetDocument doc;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("poset document needs an integer field \"n\"");
    doc.n = j["n"].get<int>();
    if (doc.n < 1) throw std::invalid_argument("element count must be positive");
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw std::invalid_argument("\"relations\" must be an array of [u,v] pairs");
        for (const auto& e : j["relations"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw std::invalid_argument("each relation must be a pair [u,v]");
            doc.relations.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    if (j.contains("chains")) {
        const auto& c = j["chains"];
        if (!c.is_object() || !c.contains("c1") || !c.contains("c2"))
            throw std::invalid_argument("\"chains\" must hold arrays \"c1\" and \"c2\"");
        ChainPartition cp;
        for (const auto& e : c["c1"]) cp.c1.push_back(e.get<int>());
        for (const auto& e : c["c2"]) cp.c2.push_back(e.get<int>());
        doc.chains = std::move(cp);
    }
    if (j.contains("labels")) {
        for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
            doc.labels[std::stoi(it.key())] = it.value().get<std::string>();
    }
    return doc;
}

PosetDocument load_poset_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_poset_document(ss.str());
}

std::string serialize_poset_document(const PosetDocument& doc) {
    ordered_json j;
    j["n"] = doc.n;
    auto rel = doc.relations;
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    ordered_json arr = ordered_json::array();
    for (auto [u, v] : rel) arr.push_back({u, v});
    j["relations"] = std::move(arr);
    if (doc.chains) {
        j["chains"]["c1"] = doc.chains->c1;
        j["chains"]["c2"] = doc.chains->c2;
    }
    if (!doc.labels.empty()) {
        ordered_json labels;
        for (const auto& [id, name] : doc.labels) labels[std::to_string(id)] = name;
        j["labels"] = std::move(labels);
    }
    return j.dump(2) + "\n";
}

Poset poset_of_document(const PosetDocument& doc) {
    Poset p = Poset::from_relations(doc.n, doc.relations);
    if (doc.chains) doc.chains->validate(p);
    return p;
}

std::string poset_hash_hex(const Poset& p) {
    char buf[20];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)p.fingerprint());
    return buf;
}

ordered_json to_json(const QPoly& p) {
    ordered_json j = ordered_json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
    return j;
}

ordered_json to_json(const MultiPoly& p) {
    ordered_json j = ordered_json::object();
    for (const auto& [e, c] : p.terms()) {
        std::ostringstream key;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) key << ",";
            key << e[i];
        }
        j[key.str()] = c.get_str();
    }
    return j;
}

ordered_json dist_json(const CountDist& d) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : d.table) j[std::to_string(k)] = v.get_str();
    return j;
}

ordered_json dist_json(const QDist& d) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : d.table) j[std::to_string(k)] = to_json(v);
    return j;
}

ordered_json dist_json(const MqDist& d) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : d.table) j[std::to_string(k)] = to_json(v);
    return j;
}

ordered_json report_json(const ScanReport& rep) {
    ordered_json j;
    j["suite"] = rep.suite;
    ordered_json counters = ordered_json::object();
    for (const auto& [k, v] : rep.counters) counters[k] = v;
    j["counters"] = std::move(counters);
    j["violation_count"] = rep.violation_count;
    j["violations"] = rep.violations;
    j["specimens"] = rep.specimens;
    j["ok"] = rep.ok();
    return j;
}

}  // namespace lepath
