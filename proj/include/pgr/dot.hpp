#pragma once

#include <string>

#include "pgr/graph.hpp"

namespace pgr {

struct DotOptions {
    bool show_labels = true;  // formula labels on edges
    bool show_ids = true;
};

// Graphviz rendering. Output depends only on the graph, so equal graphs give
// byte-identical text. Scope boxes of s nodes become clusters; principal-like
// ports (conclusion, erasing, copying) are drawn filled.
std::string to_dot(const PortGraph& g, const DotOptions& opts = {});

}  // namespace pgr
