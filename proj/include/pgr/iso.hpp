#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgr/graph.hpp"

namespace pgr {

struct IsoOptions {
    // Node names whose non-principal ports may be permuted (used for
    // flattened contraction trees).
    std::set<std::string, std::less<>> unordered_families;
    bool compare_slot_kinds = false;
};

struct IsoResult {
    bool isomorphic = false;
    std::map<NodeId, NodeId> witness;  // g node id -> h node id
    explicit operator bool() const { return isomorphic; }
};

// Bijective morphism preserving node names, port names and states, edges,
// and the interface position by position. Labels and scope annotations are
// not compared.
IsoResult is_isomorphic(const PortGraph& g, const PortGraph& h, const IsoOptions& opts = {});

// The part of `g` reachable from the given interface slots, re-based so that
// its interface is exactly those slots in the given order. Throws GraphError
// if the part reaches any other slot.
PortGraph restrict_to_slots(const PortGraph& g, const std::vector<std::size_t>& slots);

// Connected components over nodes and interface slots; each component lists
// its node ids and slot indices.
struct Component {
    std::vector<NodeId> nodes;
    std::vector<std::size_t> slots;
};
std::vector<Component> connected_components(const PortGraph& g);

}  // namespace pgr
