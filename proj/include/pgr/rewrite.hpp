#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgr/graph.hpp"

namespace pgr {

// Injective map from the left-hand side's nodes (in id order) to host nodes.
// Ports map index-for-index, so the port map is induced by the node map.
struct Morphism {
    std::vector<NodeId> node_map;
    friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

// A port graph rewrite rule. The arrow node is kept as data: each free port
// of `lhs` maps to one free port of `rhs`, or to the black hole (nullopt).
struct RewriteRule {
    std::string name;
    PortGraph lhs;
    PortGraph rhs;
    std::vector<std::optional<std::size_t>> interface_map;
    // Index of the lhs node whose scope annotation new rhs nodes inherit.
    std::size_t anchor = 0;

    std::vector<std::size_t> black_hole() const;
};

// Declarative construction of rules: ports of the two sides are connected
// through named keys instead of slot positions.
class RuleBuilder {
public:
    explicit RuleBuilder(std::string name) : name_(std::move(name)) {}

    std::size_t lhs_node(std::string_view name, std::vector<PortSpec> ports = {});
    std::size_t rhs_node(std::string_view name, std::vector<PortSpec> ports = {});
    void lhs_link(std::size_t a, std::uint32_t pa, std::size_t b, std::uint32_t pb);
    void rhs_link(std::size_t a, std::uint32_t pa, std::size_t b, std::uint32_t pb);
    // Marks a port as free and names it.
    void lhs_free(std::size_t node, std::uint32_t port, std::string key);
    void rhs_free(std::size_t node, std::uint32_t port, std::string key);
    // A bare wire in the right-hand side joining two lhs keys.
    void rhs_wire(std::string key_a, std::string key_b);
    void black_hole(std::string key);
    void anchor(std::size_t lhs_index) { anchor_ = lhs_index; }

    RewriteRule build() const;

private:
    struct Side {
        std::vector<std::pair<std::string, std::vector<PortSpec>>> nodes;
        std::vector<std::tuple<std::size_t, std::uint32_t, std::size_t, std::uint32_t>> links;
        // key -> (node index, port) ; node index SIZE_MAX means "the other end of a bare wire"
        std::vector<std::pair<std::string, std::pair<std::size_t, std::uint32_t>>> frees;
    };
    std::string name_;
    Side lhs_, rhs_;
    std::vector<std::pair<std::string, std::string>> wires_;
    std::vector<std::string> holes_;
    std::size_t anchor_ = 0;
};

// Every injective morphism of lhs into host, sorted lexicographically by
// the mapped node ids. Formula labels and scope annotations are ignored.
std::vector<Morphism> find_matches(const PortGraph& lhs, const PortGraph& host);

// Throws VerificationError when `m` is not a morphism of lhs into host.
void verify_match(const PortGraph& lhs, const PortGraph& host, const Morphism& m);

// Replaces the matched subgraph by the rule's right-hand side. Nodes
// outside the match keep their ids; new nodes get fresh ids.
PortGraph apply_rule(const PortGraph& host, const RewriteRule& rule, const Morphism& match);

bool is_normal_form(const PortGraph& host, const std::vector<RewriteRule>& rules);

// Reassigns scope annotations that point at deleted s nodes to the
// deleted node's own enclosing scope.
void repair_scopes(GraphEditor& ed, const std::map<NodeId, std::optional<NodeId>>& removed_scopes);

}  // namespace pgr
