#include "slidetok/io.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "slidetok/error.hpp"

namespace slidetok {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& field,
                               const std::string& reason) {
    throw Error(ErrorCode::SchemaError, field + ": " + reason);
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
}

void require_known_keys(const json& doc,
                        std::initializer_list<const char*> known) {
    for (const auto& item : doc.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (item.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) schema_error(item.key(), "unknown field");
    }
}

int get_int(const json& doc, const std::string& field) {
    if (!doc.is_number_integer()) schema_error(field, "must be an integer");
    auto wide = doc.get<std::int64_t>();
    if (wide < std::numeric_limits<int>::min() ||
        wide > std::numeric_limits<int>::max()) {
        schema_error(field, "out of range");
    }
    return static_cast<int>(wide);
}

std::vector<int> get_int_list(const json& doc, const std::string& field) {
    if (!doc.is_array()) schema_error(field, "must be an array");
    std::vector<int> out;
    out.reserve(doc.size());
    for (const auto& entry : doc) out.push_back(get_int(entry, field));
    return out;
}

std::vector<std::pair<int, int>> get_pair_list(const json& doc,
                                               const std::string& field) {
    if (!doc.is_array()) schema_error(field, "must be an array");
    std::vector<std::pair<int, int>> out;
    out.reserve(doc.size());
    for (const auto& entry : doc) {
        if (!entry.is_array() || entry.size() != 2) {
            schema_error(field, "entries must be pairs");
        }
        out.emplace_back(get_int(entry[0], field), get_int(entry[1], field));
    }
    return out;
}

const json& require(const json& doc, const char* field) {
    auto it = doc.find(field);
    if (it == doc.end()) schema_error(field, "required");
    return *it;
}

void require_version(const json& doc) {
    int version = get_int(require(doc, "schema_version"), "schema_version");
    if (version != kSchemaVersion) {
        schema_error("schema_version",
                     "unsupported version " + std::to_string(version));
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) schema_error("document", "must be a JSON object");
    require_known_keys(doc, {"schema_version", "n", "edges", "start", "target"});
    require_version(doc);

    int n = get_int(require(doc, "n"), "n");
    if (n < 0) schema_error("n", "must be non-negative");
    auto edges = get_pair_list(require(doc, "edges"), "edges");
    auto start = get_int_list(require(doc, "start"), "start");
    auto target = get_int_list(require(doc, "target"), "target");

    Instance inst;
    inst.tree = Tree::build(n, edges);
    inst.start = IndependentSet::checked(inst.tree, std::move(start));
    inst.target = IndependentSet::checked(inst.tree, std::move(target));
    return inst;
}

std::string emit_instance(const Instance& inst) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = inst.tree.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : inst.tree.edges()) {
        edges.push_back(json::array({u, v}));
    }
    doc["edges"] = std::move(edges);
    doc["start"] = inst.start.vertices();
    doc["target"] = inst.target.vertices();
    return doc.dump() + "\n";
}

PlanDocument parse_plan(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) schema_error("document", "must be a JSON object");
    require_known_keys(doc, {"schema_version", "moves", "meta"});
    require_version(doc);

    PlanDocument out;
    for (const auto& [from, to] : get_pair_list(require(doc, "moves"), "moves")) {
        out.plan.push_back(Move{from, to});
    }
    if (auto it = doc.find("meta"); it != doc.end()) {
        const json& meta = *it;
        if (!meta.is_object()) schema_error("meta", "must be an object");
        require_known_keys(meta, {"certificate_kind", "move_count",
                                  "sequence_length", "elapsed_us"});
        PlanMeta m;
        const json& kind = require(meta, "certificate_kind");
        if (!kind.is_string()) {
            schema_error("certificate_kind", "must be a string");
        }
        m.certificate_kind = kind.get<std::string>();
        m.move_count = get_int(require(meta, "move_count"), "move_count");
        m.sequence_length =
            get_int(require(meta, "sequence_length"), "sequence_length");
        const json& elapsed = require(meta, "elapsed_us");
        if (!elapsed.is_number_integer()) {
            schema_error("elapsed_us", "must be an integer");
        }
        m.elapsed_us = elapsed.get<std::int64_t>();
        out.meta = std::move(m);
    }
    return out;
}

std::string emit_plan(const PlanDocument& doc) {
    json out;
    out["schema_version"] = kSchemaVersion;
    json moves = json::array();
    for (const Move& m : doc.plan) {
        moves.push_back(json::array({m.from, m.to}));
    }
    out["moves"] = std::move(moves);
    if (doc.meta) {
        json meta;
        meta["certificate_kind"] = doc.meta->certificate_kind;
        meta["move_count"] = doc.meta->move_count;
        meta["sequence_length"] = doc.meta->sequence_length;
        meta["elapsed_us"] = doc.meta->elapsed_us;
        out["meta"] = std::move(meta);
    }
    return out.dump() + "\n";
}

std::string emit_dot(const Tree& tree, const IndependentSet* tokens,
                     const Move* highlight) {
    std::string out = "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < tree.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (tokens != nullptr && tokens->contains(v)) {
            out += " [style=filled]";
        }
        out += ";\n";
    }
    for (const auto& [u, v] : tree.edges()) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v);
        if (highlight != nullptr &&
            ((highlight->from == u && highlight->to == v) ||
             (highlight->from == v && highlight->to == u))) {
            out += " [style=bold]";
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace slidetok
