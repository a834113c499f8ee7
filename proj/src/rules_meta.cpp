#include <set>

#include "pgr/rules.hpp"

namespace pgr {

namespace {

std::optional<NodeId> scope_node_of(const PortGraph& g, NodeId imp) {
    const Node& n = g.node(imp);
    if (n.name != names::imp_intro) throw IntegrityError("node " + std::to_string(imp) + " is not an implication");
    if (n.ports.size() < 4) return std::nullopt;
    PortRef sp = n.peers[ports::scope];
    if (sp.is_slot() || sp.port != ports::principal || g.node(sp.node).name != names::scope)
        throw IntegrityError("implication " + std::to_string(imp) + " has no s node on its scope port");
    return sp.node;
}

bool within(const PortGraph& g, std::optional<NodeId> scope, NodeId target) {
    std::set<NodeId> seen;
    while (scope) {
        if (*scope == target) return true;
        if (!seen.insert(*scope).second || !g.has_node(*scope)) return false;
        scope = g.node(*scope).scope;
    }
    return false;
}

}  // namespace

std::vector<NodeId> scope_extent(const PortGraph& g, NodeId imp) {
    std::optional<NodeId> s = scope_node_of(g, imp);
    std::set<PortRef> boundary{{imp, ports::body}, {imp, ports::binder}};
    std::vector<PortRef> stack{g.peer({imp, ports::body}), g.peer({imp, ports::binder})};
    if (s) {
        const Node& sn = g.node(*s);
        for (std::size_t k = 0; k < sn.scope_arity(); ++k) {
            boundary.insert({*s, ports::scope_in(k)});
            stack.push_back(sn.peers[ports::scope_in(k)]);
        }
    }
    std::set<NodeId> seen;
    while (!stack.empty()) {
        PortRef p = stack.back();
        stack.pop_back();
        if (p.is_slot())
            throw IntegrityError("scope of implication " + std::to_string(imp) + " reaches interface slot " +
                                 std::to_string(p.port));
        if (p.node == imp || (s && p.node == *s)) {
            if (!boundary.count(p))
                throw IntegrityError("scope of implication " + std::to_string(imp) + " re-enters it through port " +
                                     g.node(p.node).ports[p.port].name);
            continue;
        }
        if (!seen.insert(p.node).second) continue;
        for (PortRef q : g.node(p.node).peers) stack.push_back(q);
    }
    if (s) {
        for (NodeId id : seen)
            if (!within(g, g.node(id).scope, *s))
                throw IntegrityError("node " + std::to_string(id) + " lies inside the scope of s node " +
                                     std::to_string(*s) + " but is not annotated with it");
    }
    return {seen.begin(), seen.end()};
}

namespace {

std::vector<PortRef> outside_wires(const PortGraph& g, std::optional<NodeId> s, const std::set<NodeId>& region,
                                   NodeId agent) {
    std::vector<PortRef> out;
    if (!s) return out;
    const Node& sn = g.node(*s);
    for (std::size_t k = 0; k < sn.scope_arity(); ++k) {
        PortRef q = sn.peers[ports::scope_out(k)];
        if (!q.is_slot() && (region.count(q.node) || q.node == agent))
            throw IntegrityError("bound wire " + std::to_string(k + 1) + " of s node " + std::to_string(*s) +
                                 " leads back into its own scope");
        out.push_back(q);
    }
    return out;
}

std::map<NodeId, std::optional<NodeId>> scopes_removed(const PortGraph& g, const std::set<NodeId>& gone) {
    std::map<NodeId, std::optional<NodeId>> out;
    for (NodeId id : gone)
        if (g.node(id).name == names::scope) out[id] = g.node(id).scope;
    return out;
}

}  // namespace

PortGraph erase_implication(const PortGraph& host, NodeId eraser, NodeId imp) {
    if (host.peer({eraser, 0}) != PortRef{imp, ports::conclusion})
        throw VerificationError("eraser " + std::to_string(eraser) + " is not attached to implication " + std::to_string(imp));
    std::optional<NodeId> s = scope_node_of(host, imp);
    auto ext = scope_extent(host, imp);
    std::set<NodeId> region(ext.begin(), ext.end());
    region.insert(imp);
    if (s) region.insert(*s);
    auto outs = outside_wires(host, s, region, eraser);
    std::vector<std::string> labels;
    if (s)
        for (std::size_t k = 0; k < outs.size(); ++k) labels.push_back(host.label({*s, ports::scope_out(k)}));

    std::optional<NodeId> scope = host.node(imp).scope;
    auto removed = scopes_removed(host, region);
    GraphEditor ed(host);
    for (NodeId id : region) ed.remove_node(id);
    ed.remove_node(eraser);
    for (std::size_t k = 0; k < outs.size(); ++k) {
        NodeId w = ed.add_node(std::string(names::weakening), standard_ports(names::weakening), scope);
        ed.link({w, 0}, outs[k]);
        ed.set_label({w, 0}, labels[k]);
    }
    repair_scopes(ed, removed);
    return ed.finish();
}

PortGraph copy_implication(const PortGraph& host, NodeId copier, NodeId imp) {
    if (host.peer({copier, ports::copy}) != PortRef{imp, ports::conclusion})
        throw VerificationError("contraction " + std::to_string(copier) + " is not attached to implication " +
                                std::to_string(imp));
    std::optional<NodeId> s = scope_node_of(host, imp);
    auto ext = scope_extent(host, imp);
    std::set<NodeId> region(ext.begin(), ext.end());
    region.insert(imp);
    if (s) region.insert(*s);
    auto outs = outside_wires(host, s, region, copier);
    PortRef o1 = host.peer({copier, ports::out1});
    PortRef o2 = host.peer({copier, ports::out2});
    std::optional<NodeId> scope = host.node(imp).scope;

    GraphEditor ed(host);
    std::map<NodeId, NodeId> clone;
    for (NodeId id : region) {
        const Node& n = host.node(id);
        clone[id] = ed.add_node(n.name, n.ports, n.scope);
        ed.mutable_node(clone[id]).labels = n.labels;
    }
    for (NodeId id : region) {
        const Node& n = host.node(id);
        if (n.scope && region.count(*n.scope)) ed.set_scope(clone[id], clone[*n.scope]);
        for (std::uint32_t p = 0; p < n.ports.size(); ++p) {
            PortRef q = n.peers[p];
            if (q.is_slot() || !region.count(q.node)) continue;
            PortRef a{clone[id], p}, b{clone[q.node], q.port};
            if (!ed.linked(a)) ed.link(a, b);
        }
    }
    ed.remove_node(copier);
    if (o1 == PortRef{copier, ports::out2}) {
        ed.link({imp, ports::conclusion}, {clone[imp], ports::conclusion});
    } else {
        ed.link({imp, ports::conclusion}, o1);
        ed.link({clone[imp], ports::conclusion}, o2);
    }
    for (std::size_t k = 0; k < outs.size(); ++k) {
        PortRef out1{*s, ports::scope_out(k)};
        PortRef out2{clone[*s], ports::scope_out(k)};
        std::string label = host.label(out1);
        ed.unlink(out1);
        NodeId c = ed.add_node(std::string(names::contraction), standard_ports(names::contraction), scope);
        ed.link({c, ports::copy}, outs[k]);
        ed.link({c, ports::out1}, out1);
        ed.link({c, ports::out2}, out2);
        for (std::uint32_t p = 0; p < 3; ++p) ed.set_label({c, p}, label);
    }
    return ed.finish();
}

}  // namespace pgr
