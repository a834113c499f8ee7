#pragma once

#include <string>

#include "json.hpp"
#include "pgr/graph.hpp"

namespace pgr {

using Json = nlohmann::ordered_json;

// Canonical graph document: signature, nodes, edges, interface, next_id.
Json graph_to_json(const PortGraph& g);
PortGraph graph_from_json(const Json& doc);

std::string graph_to_text(const PortGraph& g);  // pretty-printed, newline-terminated
PortGraph graph_from_text(const std::string& text);

// 16 hex digits of FNV-1a over the compact canonical document.
std::string content_hash(const PortGraph& g);

Json port_ref_to_json(const PortGraph& g, PortRef p);

}  // namespace pgr
