#include "pgr/iso.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace pgr {

namespace {

struct IsoState {
    std::map<NodeId, NodeId> fwd;
    std::set<NodeId> used;
    // For nodes with permutable ports: g port -> h port (-1 when unknown).
    std::map<NodeId, std::vector<int>> port_map;
    std::deque<std::pair<PortRef, PortRef>> queue;
};

class IsoSearch {
public:
    IsoSearch(const PortGraph& g, const PortGraph& h, const IsoOptions& o) : g_(g), h_(h), opts_(o) {}

    bool run(std::map<NodeId, NodeId>& witness) {
        IsoState st;
        for (std::size_t i = 0; i < g_.interface().size(); ++i)
            st.queue.emplace_back(g_.interface()[i].peer, h_.interface()[i].peer);
        if (!solve(st)) return false;
        witness = std::move(found_);
        return true;
    }

private:
    bool unordered(const Node& n) const { return opts_.unordered_families.count(n.name) != 0; }

    void enqueue_port(IsoState& st, NodeId u, std::uint32_t p, NodeId v, std::uint32_t q) {
        st.queue.emplace_back(g_.peer({u, p}), h_.peer({v, q}));
    }

    bool map_node(IsoState& st, NodeId u, NodeId v) {
        const Node& gn = g_.node(u);
        const Node& hn = h_.node(v);
        if (st.used.count(v) || gn.name != hn.name || gn.ports != hn.ports) return false;
        st.fwd[u] = v;
        st.used.insert(v);
        if (unordered(gn)) {
            std::vector<int> pm(gn.ports.size(), -1);
            pm[0] = 0;
            st.port_map[u] = std::move(pm);
            enqueue_port(st, u, 0, v, 0);
        } else {
            for (std::uint32_t p = 0; p < gn.ports.size(); ++p) enqueue_port(st, u, p, v, p);
        }
        return true;
    }

    bool map_port(IsoState& st, NodeId u, std::uint32_t p, std::uint32_t q) {
        auto& pm = st.port_map[u];
        if (pm[p] != -1) return pm[p] == static_cast<int>(q);
        if (p == 0 || q == 0) return false;
        if (std::find(pm.begin(), pm.end(), static_cast<int>(q)) != pm.end()) return false;
        pm[p] = static_cast<int>(q);
        enqueue_port(st, u, p, st.fwd[u], q);
        return true;
    }

    bool unify(IsoState& st, PortRef a, PortRef b) {
        if (a.is_slot() || b.is_slot()) {
            if (!(a.is_slot() && b.is_slot() && a.port == b.port)) return false;
            return !opts_.compare_slot_kinds || g_.interface()[a.port].kind == h_.interface()[b.port].kind;
        }
        auto it = st.fwd.find(a.node);
        if (it == st.fwd.end()) {
            if (!map_node(st, a.node, b.node)) return false;
            it = st.fwd.find(a.node);
        }
        if (it->second != b.node) return false;
        const Node& gn = g_.node(a.node);
        if (unordered(gn)) return map_port(st, a.node, a.port, b.port);
        return a.port == b.port;
    }

    bool propagate(IsoState& st) {
        while (!st.queue.empty()) {
            auto [a, b] = st.queue.front();
            st.queue.pop_front();
            if (!unify(st, a, b)) return false;
        }
        return true;
    }

    bool solve(IsoState st) {
        if (!propagate(st)) return false;
        // Pending port choices on permutable nodes.
        for (auto& [u, pm] : st.port_map) {
            for (std::uint32_t p = 1; p < pm.size(); ++p) {
                if (pm[p] != -1) continue;
                for (std::uint32_t q = 1; q < pm.size(); ++q) {
                    if (std::find(pm.begin(), pm.end(), static_cast<int>(q)) != pm.end()) continue;
                    IsoState next = st;
                    if (map_port(next, u, p, q) && solve(std::move(next))) return true;
                }
                return false;
            }
        }
        // Unreached components: pick the lowest unmapped node.
        for (const auto& [u, gn] : g_.nodes()) {
            if (st.fwd.count(u)) continue;
            for (const auto& [v, hn] : h_.nodes()) {
                if (st.used.count(v) || hn.name != gn.name || hn.ports != gn.ports) continue;
                IsoState next = st;
                if (map_node(next, u, v) && solve(std::move(next))) return true;
            }
            return false;
        }
        found_ = st.fwd;
        return true;
    }

    const PortGraph& g_;
    const PortGraph& h_;
    const IsoOptions& opts_;
    std::map<NodeId, NodeId> found_;
};

}  // namespace

IsoResult is_isomorphic(const PortGraph& g, const PortGraph& h, const IsoOptions& opts) {
    IsoResult r;
    if (g.node_count() != h.node_count() || g.interface().size() != h.interface().size()) return r;
    std::map<std::pair<std::string, std::size_t>, int> census;
    for (const auto& [id, n] : g.nodes()) ++census[{n.name, n.ports.size()}];
    for (const auto& [id, n] : h.nodes()) --census[{n.name, n.ports.size()}];
    for (const auto& [k, c] : census)
        if (c != 0) return r;
    IsoSearch search(g, h, opts);
    r.isomorphic = search.run(r.witness);
    return r;
}

PortGraph restrict_to_slots(const PortGraph& g, const std::vector<std::size_t>& slots) {
    std::set<std::size_t> allowed(slots.begin(), slots.end());
    std::set<NodeId> nodes;
    std::vector<PortRef> stack;
    for (std::size_t s : slots) stack.push_back(g.interface().at(s).peer);
    while (!stack.empty()) {
        PortRef p = stack.back();
        stack.pop_back();
        if (p.is_slot()) {
            if (!allowed.count(p.port)) throw GraphError("part reaches interface slot " + std::to_string(p.port));
            continue;
        }
        if (!nodes.insert(p.node).second) continue;
        for (PortRef q : g.node(p.node).peers) stack.push_back(q);
    }
    GraphEditor ed;
    std::map<NodeId, NodeId> fresh;
    for (NodeId id : nodes) {
        const Node& n = g.node(id);
        fresh[id] = ed.add_node(n.name, n.ports);
        for (std::uint32_t p = 0; p < n.ports.size(); ++p) ed.set_label({fresh[id], p}, n.labels[p]);
    }
    std::map<std::size_t, std::size_t> slot_pos;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        const Slot& s = g.interface()[slots[i]];
        slot_pos[slots[i]] = ed.add_slot(s.kind, s.label);
    }
    auto translate = [&](PortRef p) {
        return p.is_slot() ? PortRef::slot(slot_pos.at(p.port)) : PortRef{fresh.at(p.node), p.port};
    };
    for (NodeId id : nodes) {
        const Node& n = g.node(id);
        for (std::uint32_t p = 0; p < n.ports.size(); ++p) {
            PortRef a = translate({id, p});
            PortRef b = translate(n.peers[p]);
            if (!ed.linked(a)) ed.link(a, b);
        }
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        PortRef a = PortRef::slot(i);
        if (!ed.linked(a)) ed.link(a, translate(g.interface()[slots[i]].peer));
    }
    for (NodeId id : nodes) {
        const Node& n = g.node(id);
        if (n.scope && nodes.count(*n.scope)) ed.set_scope(fresh[id], fresh[*n.scope]);
    }
    return ed.finish();
}

std::vector<Component> connected_components(const PortGraph& g) {
    std::vector<Component> out;
    std::set<NodeId> seen_nodes;
    std::set<std::size_t> seen_slots;
    auto grow = [&](PortRef start) {
        Component c;
        std::vector<PortRef> stack{start};
        while (!stack.empty()) {
            PortRef p = stack.back();
            stack.pop_back();
            if (p.is_slot()) {
                if (!seen_slots.insert(p.port).second) continue;
                c.slots.push_back(p.port);
                stack.push_back(g.interface()[p.port].peer);
                continue;
            }
            if (!seen_nodes.insert(p.node).second) continue;
            c.nodes.push_back(p.node);
            for (PortRef q : g.node(p.node).peers) stack.push_back(q);
        }
        std::sort(c.nodes.begin(), c.nodes.end());
        std::sort(c.slots.begin(), c.slots.end());
        out.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < g.interface().size(); ++i)
        if (!seen_slots.count(i)) grow(PortRef::slot(i));
    for (const auto& [id, n] : g.nodes())
        if (!seen_nodes.count(id)) grow(PortRef{id, 0});
    return out;
}

}  // namespace pgr
