#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pgr/lambda.hpp"

namespace pgr {

namespace {

void require_only(const PortGraph& g, std::initializer_list<std::string_view> allowed, const char* what) {
    std::string bad;
    for (const auto& [id, n] : g.nodes()) {
        if (std::find(allowed.begin(), allowed.end(), n.name) != allowed.end()) continue;
        if (!bad.empty()) bad += ", ";
        bad += n.name + "#" + std::to_string(id);
    }
    if (!bad.empty()) throw GraphError(std::string("not in the ") + what + " fragment: " + bad);
}

PortGraph to_lambda(const PortGraph& g) {
    require_only(g, {names::imp_intro, names::imp_elim, names::scope}, "linear logic");
    GraphEditor ed(g);
    for (NodeId s : g.ids_named(names::scope)) {
        const Node& n = ed.view().node(s);
        std::vector<std::pair<PortRef, PortRef>> joins;
        for (std::size_t k = 0; k < n.scope_arity(); ++k)
            joins.emplace_back(n.peers[ports::scope_in(k)], n.peers[ports::scope_out(k)]);
        ed.remove_node(s);
        for (auto [a, b] : joins) ed.link(a, b);
    }
    for (const auto& [id, n] : g.nodes()) {
        if (n.name == names::imp_intro) {
            ed.set_ports(id, standard_ports(names::lambda));
            ed.rename(id, std::string(names::lambda));
        } else if (n.name == names::imp_elim) {
            ed.set_ports(id, standard_ports(names::apply));
            ed.rename(id, std::string(names::apply));
        }
        if (n.name != names::scope) ed.set_scope(id, std::nullopt);
    }
    return compact_ids(ed.finish());
}

bool is_root_port(PortRef p) { return !p.is_slot() && p.port == ports::conclusion; }

PortGraph to_logic(const PortGraph& g) {
    require_only(g, {names::lambda, names::apply}, "linear lambda");
    if (g.interface().empty()) {
        if (g.node_count() == 0) return g;
        throw GraphError("a term graph needs a root slot");
    }
    // Tree structure: children hang off body/fun/arg ports by their root port.
    std::vector<NodeId> order;  // preorder
    std::map<NodeId, std::size_t> depth;
    std::function<void(NodeId, std::size_t)> visit = [&](NodeId id, std::size_t d) {
        if (depth.count(id)) throw GraphError("node " + std::to_string(id) + " is shared; not a term graph");
        depth[id] = d;
        order.push_back(id);
        const Node& n = g.node(id);
        for (std::uint32_t p = 1; p < 3; ++p) {
            if (n.name == names::lambda && p == ports::binder) continue;
            if (is_root_port(n.peers[p])) visit(n.peers[p].node, d + 1);
        }
    };
    PortRef top = g.interface().back().peer;
    if (is_root_port(top)) visit(top.node, 0);
    if (order.size() != g.node_count()) throw GraphError("graph is not a single term tree");

    // Leaf positions below a node, left to right.
    std::function<void(NodeId, std::vector<PortRef>&, std::set<NodeId>&)> leaves =
        [&](NodeId id, std::vector<PortRef>& out, std::set<NodeId>& inside) {
            inside.insert(id);
            const Node& n = g.node(id);
            for (std::uint32_t p = 1; p < 3; ++p) {
                if (n.name == names::lambda && p == ports::binder) continue;
                if (is_root_port(n.peers[p])) leaves(n.peers[p].node, out, inside);
                else out.push_back({id, p});
            }
        };

    GraphEditor ed(g);
    for (NodeId id : order) {
        const Node& n = g.node(id);
        if (n.name == names::apply) {
            ed.set_ports(id, standard_ports(names::imp_elim));
            ed.rename(id, std::string(names::imp_elim));
        }
    }
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return depth[a] < depth[b]; });
    for (NodeId id : order) {
        if (g.node(id).name != names::lambda) continue;
        std::vector<PortRef> body_leaves;
        std::set<NodeId> inside;
        if (is_root_port(g.node(id).peers[ports::body])) leaves(g.node(id).peers[ports::body].node, body_leaves, inside);
        else body_leaves.push_back({id, ports::body});
        // A wire crosses the scope unless its source is a binder inside.
        std::vector<PortRef> crossing;
        for (PortRef q : body_leaves) {
            PortRef src = ed.view().peer(q);
            bool local = !src.is_slot() && src.port == ports::binder &&
                         ed.view().node(src.node).name == names::lambda && (src.node == id || inside.count(src.node));
            if (!local) crossing.push_back(q);
        }
        std::optional<NodeId> outer = ed.view().node(id).scope;
        ed.set_ports(id, imp_intro_ports(!crossing.empty()));
        ed.rename(id, std::string(names::imp_intro));
        if (crossing.empty()) continue;
        NodeId s = ed.add_node(std::string(names::scope), scope_ports(crossing.size()), outer);
        ed.link({id, ports::scope}, {s, ports::principal});
        for (std::size_t k = 0; k < crossing.size(); ++k) {
            PortRef q = crossing[k];
            PortRef src = ed.view().peer(q);
            ed.unlink(q);
            ed.link({s, ports::scope_in(k)}, q);
            ed.link({s, ports::scope_out(k)}, src);
        }
        for (NodeId m : inside) ed.set_scope(m, s);
    }
    return compact_ids(ed.finish());
}

}  // namespace

PortGraph curry_howard_rename(const PortGraph& g, RenameDirection dir) {
    return dir == RenameDirection::to_lambda ? to_lambda(g) : to_logic(g);
}

}  // namespace pgr
