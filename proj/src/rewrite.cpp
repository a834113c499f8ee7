#include "pgr/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pgr {

std::vector<std::size_t> RewriteRule::black_hole() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < interface_map.size(); ++i)
        if (!interface_map[i]) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// RuleBuilder

std::size_t RuleBuilder::lhs_node(std::string_view name, std::vector<PortSpec> ports) {
    if (ports.empty()) ports = standard_ports(name);
    lhs_.nodes.emplace_back(std::string(name), std::move(ports));
    return lhs_.nodes.size() - 1;
}

std::size_t RuleBuilder::rhs_node(std::string_view name, std::vector<PortSpec> ports) {
    if (ports.empty()) ports = standard_ports(name);
    rhs_.nodes.emplace_back(std::string(name), std::move(ports));
    return rhs_.nodes.size() - 1;
}

void RuleBuilder::lhs_link(std::size_t a, std::uint32_t pa, std::size_t b, std::uint32_t pb) {
    lhs_.links.emplace_back(a, pa, b, pb);
}

void RuleBuilder::rhs_link(std::size_t a, std::uint32_t pa, std::size_t b, std::uint32_t pb) {
    rhs_.links.emplace_back(a, pa, b, pb);
}

void RuleBuilder::lhs_free(std::size_t node, std::uint32_t port, std::string key) {
    lhs_.frees.push_back({std::move(key), {node, port}});
}

void RuleBuilder::rhs_free(std::size_t node, std::uint32_t port, std::string key) {
    rhs_.frees.push_back({std::move(key), {node, port}});
}

void RuleBuilder::rhs_wire(std::string key_a, std::string key_b) {
    wires_.emplace_back(std::move(key_a), std::move(key_b));
}

void RuleBuilder::black_hole(std::string key) { holes_.push_back(std::move(key)); }

RewriteRule RuleBuilder::build() const {
    auto make_side = [](const Side& side, std::vector<std::string>& slot_keys,
                        const std::vector<std::pair<std::string, std::string>>* wires) {
        GraphEditor ed;
        std::vector<NodeId> ids;
        for (const auto& [name, ports] : side.nodes) ids.push_back(ed.add_node(name, ports));
        for (const auto& [a, pa, b, pb] : side.links) ed.link({ids.at(a), pa}, {ids.at(b), pb});
        for (const auto& [key, where] : side.frees) {
            auto s = ed.add_slot(SlotKind::free);
            ed.link({ids.at(where.first), where.second}, PortRef::slot(s));
            slot_keys.push_back(key);
        }
        if (wires) {
            for (const auto& [ka, kb] : *wires) {
                auto sa = ed.add_slot(SlotKind::free);
                auto sb = ed.add_slot(SlotKind::free);
                ed.link(PortRef::slot(sa), PortRef::slot(sb));
                slot_keys.push_back(ka);
                slot_keys.push_back(kb);
            }
        }
        return ed.finish();
    };

    RewriteRule rule;
    rule.name = name_;
    rule.anchor = anchor_;
    std::vector<std::string> lkeys, rkeys;
    rule.lhs = make_side(lhs_, lkeys, nullptr);
    rule.rhs = make_side(rhs_, rkeys, &wires_);

    std::set<std::string> seen_r;
    for (const auto& k : rkeys) {
        if (!seen_r.insert(k).second) throw GraphError("rule " + name_ + ": rhs key '" + k + "' used twice");
        if (std::find(lkeys.begin(), lkeys.end(), k) == lkeys.end())
            throw GraphError("rule " + name_ + ": rhs key '" + k + "' has no lhs counterpart");
    }
    for (const auto& k : lkeys) {
        auto it = std::find(rkeys.begin(), rkeys.end(), k);
        bool hole = std::find(holes_.begin(), holes_.end(), k) != holes_.end();
        if (it == rkeys.end()) {
            if (!hole) throw GraphError("rule " + name_ + ": lhs key '" + k + "' is neither mapped nor black-holed");
            rule.interface_map.push_back(std::nullopt);
        } else {
            if (hole) throw GraphError("rule " + name_ + ": key '" + k + "' both mapped and black-holed");
            rule.interface_map.push_back(static_cast<std::size_t>(it - rkeys.begin()));
        }
    }
    return rule;
}

// ---------------------------------------------------------------------------
// Matching

namespace {

struct PlanStep {
    std::size_t lhs_index;
    // When set, the host node is the peer of (earlier lhs node, port).
    std::optional<std::pair<std::size_t, std::uint32_t>> via;
    std::uint32_t arrive_port = 0;
};

std::vector<PlanStep> make_plan(const PortGraph& lhs, const std::vector<NodeId>& lids,
                                const std::map<NodeId, std::size_t>& index_of) {
    std::vector<PlanStep> plan;
    std::vector<bool> placed(lids.size(), false);
    for (std::size_t root = 0; root < lids.size(); ++root) {
        if (placed[root]) continue;
        placed[root] = true;
        plan.push_back({root, std::nullopt, 0});
        for (std::size_t q = plan.size() - 1; q < plan.size(); ++q) {
            const Node& n = lhs.node(lids[plan[q].lhs_index]);
            for (std::uint32_t p = 0; p < n.peers.size(); ++p) {
                PortRef other = n.peers[p];
                if (other.is_slot()) continue;
                std::size_t oi = index_of.at(other.node);
                if (placed[oi]) continue;
                placed[oi] = true;
                plan.push_back({oi, std::make_pair(plan[q].lhs_index, p), other.port});
            }
        }
    }
    return plan;
}

bool compatible(const Node& l, const Node& h) { return l.name == h.name && l.ports == h.ports; }

}  // namespace

std::vector<Morphism> find_matches(const PortGraph& lhs, const PortGraph& host) {
    std::vector<Morphism> out;
    if (lhs.node_count() == 0 || lhs.node_count() > host.node_count()) return out;

    std::vector<NodeId> lids;
    std::map<NodeId, std::size_t> index_of;
    for (const auto& [id, n] : lhs.nodes()) {
        index_of[id] = lids.size();
        lids.push_back(id);
    }
    // Host candidates per name, in id order.
    std::map<std::string, std::vector<NodeId>, std::less<>> by_name;
    for (const auto& [id, n] : host.nodes()) by_name[n.name].push_back(id);

    auto plan = make_plan(lhs, lids, index_of);
    std::vector<NodeId> assign(lids.size(), kSlot);
    std::set<NodeId> used;

    // All lhs edges between nodes placed so far must exist in the host.
    auto consistent = [&](std::size_t li) {
        const Node& ln = lhs.node(lids[li]);
        const Node& hn = host.node(assign[li]);
        for (std::uint32_t p = 0; p < ln.peers.size(); ++p) {
            PortRef lp = ln.peers[p];
            if (lp.is_slot()) continue;
            NodeId other = assign[index_of.at(lp.node)];
            if (other == kSlot) continue;
            if (hn.peers[p] != PortRef{other, lp.port}) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> search = [&](std::size_t step) {
        if (step == plan.size()) {
            // Plan order differs from lhs id order; node_map is by lhs id order.
            out.push_back(Morphism{assign});
            return;
        }
        const PlanStep& ps = plan[step];
        const Node& ln = lhs.node(lids[ps.lhs_index]);
        auto try_host = [&](NodeId hid) {
            if (used.count(hid)) return;
            const Node& hn = host.node(hid);
            if (!compatible(ln, hn)) return;
            assign[ps.lhs_index] = hid;
            used.insert(hid);
            if (consistent(ps.lhs_index)) search(step + 1);
            used.erase(hid);
            assign[ps.lhs_index] = kSlot;
        };
        if (ps.via) {
            NodeId from = assign[ps.via->first];
            PortRef hp = host.node(from).peers[ps.via->second];
            if (hp.is_slot() || hp.port != ps.arrive_port) return;
            try_host(hp.node);
        } else {
            auto it = by_name.find(ln.name);
            if (it == by_name.end()) return;
            for (NodeId hid : it->second) try_host(hid);
        }
    };
    search(0);
    std::sort(out.begin(), out.end());
    return out;
}

void verify_match(const PortGraph& lhs, const PortGraph& host, const Morphism& m) {
    if (m.node_map.size() != lhs.node_count())
        throw VerificationError("match has " + std::to_string(m.node_map.size()) + " nodes, rule expects " +
                                std::to_string(lhs.node_count()));
    std::map<NodeId, NodeId> f;
    std::set<NodeId> image;
    std::size_t i = 0;
    for (const auto& [id, ln] : lhs.nodes()) {
        NodeId h = m.node_map[i++];
        if (!host.has_node(h)) throw VerificationError("stale match: node " + std::to_string(h) + " no longer exists");
        if (!compatible(ln, host.node(h)))
            throw VerificationError("stale match: node " + std::to_string(h) + " changed name or ports");
        if (!image.insert(h).second) throw VerificationError("match is not injective");
        f[id] = h;
    }
    for (const auto& [id, ln] : lhs.nodes()) {
        const Node& hn = host.node(f[id]);
        for (std::uint32_t p = 0; p < ln.peers.size(); ++p) {
            PortRef lp = ln.peers[p];
            if (lp.is_slot()) continue;
            if (hn.peers[p] != PortRef{f[lp.node], lp.port})
                throw VerificationError("stale match: edge at node " + std::to_string(f[id]) + " differs");
        }
    }
}

// ---------------------------------------------------------------------------
// Application

void repair_scopes(GraphEditor& ed, const std::map<NodeId, std::optional<NodeId>>& removed_scopes) {
    if (removed_scopes.empty()) return;
    auto resolve = [&](std::optional<NodeId> s) {
        while (s && removed_scopes.count(*s)) s = removed_scopes.at(*s);
        return s;
    };
    std::vector<NodeId> ids;
    for (const auto& [id, n] : ed.view().nodes()) ids.push_back(id);
    for (NodeId id : ids) {
        auto s = ed.view().node(id).scope;
        if (s && removed_scopes.count(*s)) ed.set_scope(id, resolve(s));
    }
}

PortGraph apply_rule(const PortGraph& host, const RewriteRule& rule, const Morphism& match) {
    verify_match(rule.lhs, host, match);

    std::map<NodeId, NodeId> f;  // lhs id -> host id
    {
        std::size_t i = 0;
        for (const auto& [id, n] : rule.lhs.nodes()) f[id] = match.node_map[i++];
    }
    std::set<NodeId> matched(match.node_map.begin(), match.node_map.end());
    auto map_port = [&](PortRef lp) { return PortRef{f.at(lp.node), lp.port}; };

    const auto& lslots = rule.lhs.interface();
    const auto& rslots = rule.rhs.interface();
    const std::size_t nl = lslots.size(), nr = rslots.size();

    // Point numbering: [0, nl) lhs slots, [nl, nl+nr) rhs slots, then real
    // endpoints (external host ports and new rhs node ports).
    std::vector<std::vector<std::size_t>> adj(nl + nr);
    std::vector<PortRef> real;            // index - (nl+nr) -> endpoint
    std::vector<bool> real_is_new;        // true: rhs node port (host id assigned later)
    auto add_real = [&](PortRef p, bool is_new) {
        real.push_back(p);
        real_is_new.push_back(is_new);
        adj.emplace_back();
        return nl + nr + real.size() - 1;
    };
    auto connect = [&](std::size_t a, std::size_t b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };

    std::map<PortRef, std::size_t> lslot_of_host_port;
    for (std::size_t i = 0; i < nl; ++i) {
        PortRef lp = lslots[i].peer;
        if (lp.is_slot()) throw GraphError("rule " + rule.name + ": bare wire in left-hand side");
        lslot_of_host_port[map_port(lp)] = i;
    }
    for (std::size_t i = 0; i < nl; ++i) {
        PortRef hp = map_port(lslots[i].peer);
        PortRef x = host.peer(hp);
        if (!x.is_slot() && matched.count(x.node)) {
            std::size_t j = lslot_of_host_port.at(x);
            if (i < j) connect(i, j);
        } else {
            connect(i, add_real(x, false));
        }
        if (rule.interface_map.at(i)) connect(i, nl + *rule.interface_map[i]);
    }
    for (std::size_t j = 0; j < nr; ++j) {
        PortRef y = rslots[j].peer;
        if (y.is_slot()) {
            if (j < y.port) connect(nl + j, nl + y.port);
        } else {
            connect(nl + j, add_real(y, true));
        }
    }

    GraphEditor ed(host);
    std::optional<NodeId> inherited;
    {
        auto it = std::next(rule.lhs.nodes().begin(), static_cast<std::ptrdiff_t>(rule.anchor));
        inherited = host.node(f.at(it->first)).scope;
    }
    std::map<NodeId, std::optional<NodeId>> removed_scopes;
    for (NodeId h : match.node_map) {
        const Node& n = host.node(h);
        if (n.name == names::scope) removed_scopes[h] = n.scope;
        ed.remove_node(h);
    }
    std::map<NodeId, NodeId> fresh;  // rhs id -> new host id
    for (const auto& [rid, rn] : rule.rhs.nodes()) fresh[rid] = ed.add_node(rn.name, rn.ports, inherited);
    for (const auto& [a, b] : rule.rhs.edges()) ed.link({fresh[a.node], a.port}, {fresh[b.node], b.port});

    auto resolve_real = [&](std::size_t idx) {
        std::size_t k = idx - nl - nr;
        return real_is_new[k] ? PortRef{fresh.at(real[k].node), real[k].port} : real[k];
    };
    std::vector<bool> done(adj.size(), false);
    for (std::size_t start = nl + nr; start < adj.size(); ++start) {
        if (done[start]) continue;
        done[start] = true;
        std::size_t prev = start;
        std::size_t cur = adj[start].empty() ? start : adj[start][0];
        while (cur < nl + nr) {
            done[cur] = true;
            if (adj[cur].size() > 2) throw GraphError("rule " + rule.name + ": interface fan-out is not supported");
            if (adj[cur].size() < 2) throw GraphError("rule " + rule.name + ": black hole would leave a port dangling");
            std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
        done[cur] = true;
        ed.link(resolve_real(start), resolve_real(cur));
    }

    // Labels travel along wires onto fresh ports.
    for (const auto& [rid, nid] : fresh) {
        const Node& n = ed.view().node(nid);
        for (std::uint32_t p = 0; p < n.ports.size(); ++p) {
            if (!ed.view().node(nid).labels[p].empty()) continue;
            PortRef other = ed.view().peer({nid, p});
            const std::string& l = ed.view().label(other);
            if (!l.empty()) ed.set_label({nid, p}, l);
        }
    }
    repair_scopes(ed, removed_scopes);
    return ed.finish();
}

bool is_normal_form(const PortGraph& host, const std::vector<RewriteRule>& rules) {
    for (const auto& r : rules)
        if (!find_matches(r.lhs, host).empty()) return false;
    return true;
}

}  // namespace pgr
