#pragma once

#include <json.hpp>

#include "padicops/crossed.hpp"
#include "padicops/ktheory.hpp"

namespace padic {

using json = nlohmann::json;

// Scalars: {"v": valuation, "u": mantissa} with the mantissa as a number
// when it fits and a decimal string otherwise; below-precision values are
// {"O": floor}.
json scalar_to_json(const PadicScalar& x);
PadicScalar scalar_from_json(const json& j, long p, int prec);

// Vectors: {"window": [...], "entries": {"label": scalar}}.
json vector_to_json(const PadicVector& v);
PadicVector vector_from_json(const json& j, long p, int prec);

// Matrices mirror the vector form, entries row-major over the window.
json matrix_to_json(const OperatorMatrix& m);
OperatorMatrix matrix_from_json(const json& j, long p, int prec);

// Groups: {"elements": [...], "table": [[...]]}.
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

// Groupoids: {"objects", "arrows", "s", "r", "inverse", "compose"} with
// compose as triples [g, h, gh].
json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const json& j);

// Actions: {"group": ..., "space": [...], "perms": [[...]]}.
json action_to_json(const GroupAction& a);
GroupAction action_from_json(const json& j);

// Cocycles: {"group": ..., "values": [[int]]}.
json cocycle_to_json(const Cocycle& c);
Cocycle cocycle_from_json(const json& j, long p, int prec);

// Graphs: {"vertices": [...], "edges": [{"id", "s", "r"}]}.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json group_report_to_json(const FinGenAbGroup& g);
json extension_to_json(const ExtensionData& e);
// {"degree": n, "group": {...}|null, "extension": {...}|null, "notes": []}
json kh_report_to_json(long degree, const ExtensionData& e);

json norm_to_json(const NormValue& n, long p);

}  // namespace padic
