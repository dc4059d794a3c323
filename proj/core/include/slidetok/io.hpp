// Instance/plan JSON documents and DOT export.
#ifndef SLIDETOK_IO_HPP
#define SLIDETOK_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "slidetok/independent_set.hpp"
#include "slidetok/tree.hpp"

namespace slidetok {

inline constexpr int kSchemaVersion = 1;

/// Parses an instance document:
///   {"schema_version":1,"n":3,"edges":[[0,1],[1,2]],"start":[0,2],"target":[0,2]}
/// Throws Error{SyntaxError, SchemaError, NotATree, DuplicateEdge,
/// InvalidVertex, NotIndependent}.
Instance parse_instance(const std::string& text);

/// Canonical compact JSON: fixed key order (schema_version, n, edges, start,
/// target), edges as (min,max) ascending, vertex lists ascending, trailing
/// newline. parse(emit(x)) == x.
std::string emit_instance(const Instance& inst);

/// Optional provenance block carried alongside a serialized plan.
struct PlanMeta {
    std::string certificate_kind;
    int move_count = 0;
    int sequence_length = 0;
    std::int64_t elapsed_us = 0;
};

struct PlanDocument {
    Plan plan;
    std::optional<PlanMeta> meta;
};

/// Throws Error{SyntaxError, SchemaError}.
PlanDocument parse_plan(const std::string& text);

/// Canonical compact JSON with fixed key order (schema_version, moves, meta);
/// trailing newline. parse(emit(x)) == x.
std::string emit_plan(const PlanDocument& doc);

/// Undirected DOT graph; token vertices filled, an optional move's edge bold.
/// Deterministic ordering, no layout hints.
std::string emit_dot(const Tree& tree,
                     const IndependentSet* tokens = nullptr,
                     const Move* highlight = nullptr);

}  // namespace slidetok

#endif
