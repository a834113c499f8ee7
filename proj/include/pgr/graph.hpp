#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgr/error.hpp"

namespace pgr {

using NodeId = std::int64_t;

// Node ids are non-negative; a PortRef whose node is kSlot addresses a
// position in the graph's free-port interface instead of a node port.
inline constexpr NodeId kSlot = -1;

enum class PortState {
    principal,
    auxiliary,
    conclusion,  // rendered with a bullet; the principal side of a logic node
    erasing,     // W's bullet
    copying,     // C's bullet
    scope_bound  // the bound wires passing through an s node
};

std::string_view to_string(PortState s);
PortState port_state_from_string(std::string_view s);

// Conclusion, erasing and copying marks all act as the node's principal port.
inline bool is_principal(PortState s) {
    return s == PortState::principal || s == PortState::conclusion ||
           s == PortState::erasing || s == PortState::copying;
}

struct PortSpec {
    std::string name;
    PortState state = PortState::auxiliary;
    friend bool operator==(const PortSpec&, const PortSpec&) = default;
};

struct PortRef {
    NodeId node = kSlot;
    std::uint32_t port = 0;

    static PortRef slot(std::size_t i) { return {kSlot, static_cast<std::uint32_t>(i)}; }
    bool is_slot() const { return node == kSlot; }
    friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

// Node names used throughout the library.
namespace names {
inline constexpr std::string_view contraction = "C";
inline constexpr std::string_view weakening = "W";
inline constexpr std::string_view and_intro = "andI";
inline constexpr std::string_view and_elim1 = "andE1";
inline constexpr std::string_view and_elim2 = "andE2";
inline constexpr std::string_view imp_intro = "impI";
inline constexpr std::string_view imp_elim = "impE";
inline constexpr std::string_view scope = "s";
inline constexpr std::string_view eraser = "eps";
inline constexpr std::string_view duplicator = "delta";
inline constexpr std::string_view lambda = "lam";
inline constexpr std::string_view apply = "app";
inline constexpr std::string_view axiom = "Ax";
}  // namespace names

// Port indices of the fixed node kinds.
namespace ports {
inline constexpr std::uint32_t conclusion = 0;  // every logic node, lam/app root
inline constexpr std::uint32_t left = 1, right = 2;            // andI
inline constexpr std::uint32_t premise = 1;                     // andE1/andE2
inline constexpr std::uint32_t body = 1, binder = 2, scope = 3;  // impI, lam
inline constexpr std::uint32_t function = 1, argument = 2;      // impE, app
inline constexpr std::uint32_t copy = 0, out1 = 1, out2 = 2;    // C, delta(a=1,b=2)
inline constexpr std::uint32_t principal = 0;                   // W, eps, s
// s_n: principal, then (in_k, out_k) pairs.
inline constexpr std::uint32_t scope_in(std::size_t k) { return static_cast<std::uint32_t>(1 + 2 * k); }
inline constexpr std::uint32_t scope_out(std::size_t k) { return static_cast<std::uint32_t>(2 + 2 * k); }
}  // namespace ports

// Port names for every node name, with two variadic families: s_n carries
// n bound wire pairs and impI optionally carries a scope port.
class PSignature {
public:
    static const PSignature& standard();

    void add(std::string name, std::vector<PortSpec> ports);
    void add_variadic(std::string family);

    bool knows(std::string_view name) const;
    bool is_variadic(std::string_view name) const;
    // Throws GraphError when the port list is not an instance of `name`.
    void check(std::string_view name, const std::vector<PortSpec>& ports) const;

    const std::map<std::string, std::vector<PortSpec>, std::less<>>& entries() const { return entries_; }
    const std::vector<std::string>& variadic_families() const { return variadic_; }

private:
    std::map<std::string, std::vector<PortSpec>, std::less<>> entries_;
    std::vector<std::string> variadic_;
};

std::vector<PortSpec> scope_ports(std::size_t arity);
std::vector<PortSpec> imp_intro_ports(bool with_scope);
// Ports of a fixed-arity node from the standard signature.
std::vector<PortSpec> standard_ports(std::string_view name);

struct Node {
    NodeId id = 0;
    std::string name;
    std::vector<PortSpec> ports;
    std::vector<PortRef> peers;        // one peer per port
    std::vector<std::string> labels;   // formula labels, "" when absent
    std::optional<NodeId> scope;       // innermost enclosing s node

    std::size_t arity() const { return ports.size(); }
    // Number of bound wire pairs of an s node.
    std::size_t scope_arity() const { return (ports.size() - 1) / 2; }
};

enum class SlotKind { free, hypothesis, conclusion };
std::string_view to_string(SlotKind k);
SlotKind slot_kind_from_string(std::string_view s);

struct Slot {
    PortRef peer;
    SlotKind kind = SlotKind::free;
    std::string label;
};

// A port graph with an ordered free-port interface. Every node port and
// every interface slot carries exactly one edge; an interface slot wired
// to another slot is a bare wire (an elided axiom).
class PortGraph {
public:
    PortGraph() = default;

    const std::map<NodeId, Node>& nodes() const { return nodes_; }
    const std::vector<Slot>& interface() const { return interface_; }
    NodeId next_id() const { return next_id_; }

    bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
    const Node& node(NodeId id) const;
    PortRef peer(PortRef p) const;
    const PortSpec& port_spec(PortRef p) const;
    const std::string& label(PortRef p) const;

    std::size_t node_count() const { return nodes_.size(); }
    // Node-to-node edges, each reported once with the smaller endpoint first.
    std::vector<std::pair<PortRef, PortRef>> edges() const;
    std::size_t count_named(std::string_view name) const;
    std::vector<NodeId> ids_named(std::string_view name) const;

    // Throws GraphError on any broken invariant.
    void validate() const;

    friend bool operator==(const PortGraph&, const PortGraph&);

private:
    friend class GraphEditor;
    std::map<NodeId, Node> nodes_;
    std::vector<Slot> interface_;
    NodeId next_id_ = 0;
};

bool operator==(const PortGraph& a, const PortGraph& b);

// Mutable access used by builders and rewriting. Edits happen on a private
// copy; finish() validates and hands back an immutable graph.
class GraphEditor {
public:
    GraphEditor() = default;
    explicit GraphEditor(PortGraph g) : g_(std::move(g)) {}

    NodeId add_node(std::string name, std::vector<PortSpec> ports,
                    std::optional<NodeId> scope = std::nullopt);
    void remove_node(NodeId id);
    // Wires a to b. Both ends must currently be unlinked.
    void link(PortRef a, PortRef b);
    // Detaches p from its peer, leaving both ends unlinked.
    void unlink(PortRef p);
    std::size_t add_slot(SlotKind kind, std::string label = {});

    void set_label(PortRef p, std::string label);
    void set_scope(NodeId id, std::optional<NodeId> scope);
    void set_ports(NodeId id, std::vector<PortSpec> ports);
    void rename(NodeId id, std::string name);
    void reserve_ids(NodeId next) {
        if (next > g_.next_id_) g_.next_id_ = next;
    }

    bool linked(PortRef p) const;
    const PortGraph& view() const { return g_; }
    Node& mutable_node(NodeId id);
    std::vector<Slot>& slots() { return g_.interface_; }

    PortGraph finish();

private:
    PortGraph g_;
};

struct NodeSpec {
    std::string name;
    std::vector<PortSpec> ports;  // empty: use the standard signature
    std::vector<std::string> labels = {};
};

struct EdgeSpec {
    std::size_t from_node;
    std::string from_port;
    std::size_t to_node;
    std::string to_port;
};

// Builds a graph from node specs and named-port edges. Unconnected ports
// become the interface, in node then port declaration order.
PortGraph build_graph(const std::vector<NodeSpec>& nodes, const std::vector<EdgeSpec>& edges,
                      const PSignature& sig = PSignature::standard());

// Index of a port by name; throws GraphError naming the port when absent.
std::uint32_t port_index(const Node& n, std::string_view port_name);

// Same graph with node ids renumbered 0..n-1 in id order.
PortGraph compact_ids(const PortGraph& g);

// The empty graph.
inline PortGraph empty_graph() { return PortGraph{}; }

}  // namespace pgr
