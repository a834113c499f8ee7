#include "pgr/graph.hpp"

#include <algorithm>
#include <set>

namespace pgr {

std::string_view to_string(PortState s) {
    switch (s) {
        case PortState::principal: return "principal";
        case PortState::auxiliary: return "auxiliary";
        case PortState::conclusion: return "conclusion";
        case PortState::erasing: return "erasing";
        case PortState::copying: return "copying";
        case PortState::scope_bound: return "scope-bound";
    }
    return "auxiliary";
}

PortState port_state_from_string(std::string_view s) {
    for (auto st : {PortState::principal, PortState::auxiliary, PortState::conclusion,
                    PortState::erasing, PortState::copying, PortState::scope_bound}) {
        if (to_string(st) == s) return st;
    }
    throw GraphError("unknown port state '" + std::string(s) + "'");
}

std::string_view to_string(SlotKind k) {
    switch (k) {
        case SlotKind::free: return "free";
        case SlotKind::hypothesis: return "hypothesis";
        case SlotKind::conclusion: return "conclusion";
    }
    return "free";
}

SlotKind slot_kind_from_string(std::string_view s) {
    for (auto k : {SlotKind::free, SlotKind::hypothesis, SlotKind::conclusion}) {
        if (to_string(k) == s) return k;
    }
    throw GraphError("unknown slot kind '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Signature

namespace {

PortSpec aux(std::string n) { return {std::move(n), PortState::auxiliary}; }
PortSpec concl(std::string n) { return {std::move(n), PortState::conclusion}; }
PortSpec prin(std::string n) { return {std::move(n), PortState::principal}; }

PSignature make_standard() {
    PSignature sig;
    sig.add("C", {{"copy", PortState::copying}, aux("out1"), aux("out2")});
    sig.add("W", {{"erase", PortState::erasing}});
    sig.add("andI", {concl("concl"), aux("left"), aux("right")});
    sig.add("andE1", {concl("concl"), aux("premise")});
    sig.add("andE2", {concl("concl"), aux("premise")});
    sig.add("impI", imp_intro_ports(false));
    sig.add("impE", {concl("concl"), aux("fun"), aux("arg")});
    sig.add("s", scope_ports(0));
    sig.add("eps", {prin("p")});
    sig.add("delta", {prin("p"), aux("a"), aux("b")});
    sig.add("lam", {concl("root"), aux("body"), aux("binder")});
    sig.add("app", {concl("root"), aux("fun"), aux("arg")});
    sig.add("Ax", {aux("top"), aux("bottom")});
    sig.add_variadic("s");
    sig.add_variadic("impI");
    return sig;
}

}  // namespace

const PSignature& PSignature::standard() {
    static const PSignature sig = make_standard();
    return sig;
}

void PSignature::add(std::string name, std::vector<PortSpec> ports) {
    entries_[std::move(name)] = std::move(ports);
}

void PSignature::add_variadic(std::string family) {
    if (std::find(variadic_.begin(), variadic_.end(), family) == variadic_.end())
        variadic_.push_back(std::move(family));
}

bool PSignature::knows(std::string_view name) const { return entries_.find(name) != entries_.end(); }

bool PSignature::is_variadic(std::string_view name) const {
    return std::find(variadic_.begin(), variadic_.end(), name) != variadic_.end();
}

void PSignature::check(std::string_view name, const std::vector<PortSpec>& ports) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw GraphError("unknown node name '" + std::string(name) + "'");
    if (name == names::scope && is_variadic(name)) {
        if (ports.empty() || ports.size() % 2 == 0 || ports != scope_ports(ports.size() / 2))
            throw GraphError("ports of s do not form an s_n instance");
        return;
    }
    if (name == names::imp_intro && is_variadic(name)) {
        if (ports != imp_intro_ports(false) && ports != imp_intro_ports(true))
            throw GraphError("ports of impI must be concl, body, binder[, scope]");
        return;
    }
    if (ports != it->second) {
        for (const auto& p : ports) {
            bool found = std::any_of(it->second.begin(), it->second.end(),
                                     [&](const PortSpec& q) { return q.name == p.name; });
            if (!found)
                throw GraphError("unknown port '" + p.name + "' for node '" + std::string(name) + "'");
        }
        throw GraphError("port list does not match signature of '" + std::string(name) + "'");
    }
}

std::vector<PortSpec> scope_ports(std::size_t arity) {
    std::vector<PortSpec> ps{prin("p")};
    for (std::size_t k = 0; k < arity; ++k) {
        ps.push_back({"in" + std::to_string(k + 1), PortState::scope_bound});
        ps.push_back({"out" + std::to_string(k + 1), PortState::scope_bound});
    }
    return ps;
}

std::vector<PortSpec> imp_intro_ports(bool with_scope) {
    std::vector<PortSpec> ps{concl("concl"), aux("body"), aux("binder")};
    if (with_scope) ps.push_back(aux("scope"));
    return ps;
}

std::vector<PortSpec> standard_ports(std::string_view name) {
    const auto& e = PSignature::standard().entries();
    auto it = e.find(name);
    if (it == e.end()) throw GraphError("unknown node name '" + std::string(name) + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// PortGraph

const Node& PortGraph::node(NodeId id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw GraphError("no node with id " + std::to_string(id));
    return it->second;
}

PortRef PortGraph::peer(PortRef p) const {
    if (p.is_slot()) {
        if (p.port >= interface_.size()) throw GraphError("slot out of range");
        return interface_[p.port].peer;
    }
    const Node& n = node(p.node);
    if (p.port >= n.peers.size()) throw GraphError("port out of range on node " + std::to_string(p.node));
    return n.peers[p.port];
}

const PortSpec& PortGraph::port_spec(PortRef p) const {
    const Node& n = node(p.node);
    return n.ports.at(p.port);
}

const std::string& PortGraph::label(PortRef p) const {
    if (p.is_slot()) return interface_.at(p.port).label;
    return node(p.node).labels.at(p.port);
}

std::vector<std::pair<PortRef, PortRef>> PortGraph::edges() const {
    std::vector<std::pair<PortRef, PortRef>> out;
    for (const auto& [id, n] : nodes_) {
        for (std::uint32_t i = 0; i < n.peers.size(); ++i) {
            PortRef a{id, i};
            PortRef b = n.peers[i];
            if (b.is_slot()) continue;
            if (a <= b) out.emplace_back(a, b);
        }
    }
    return out;
}

std::size_t PortGraph::count_named(std::string_view name) const {
    return static_cast<std::size_t>(std::count_if(
        nodes_.begin(), nodes_.end(), [&](const auto& kv) { return kv.second.name == name; }));
}

std::vector<NodeId> PortGraph::ids_named(std::string_view name) const {
    std::vector<NodeId> out;
    for (const auto& [id, n] : nodes_)
        if (n.name == name) out.push_back(id);
    return out;
}

void PortGraph::validate() const {
    auto valid_ref = [&](PortRef r) {
        if (r.is_slot()) return r.port < interface_.size();
        auto it = nodes_.find(r.node);
        return it != nodes_.end() && r.port < it->second.ports.size();
    };
    for (const auto& [id, n] : nodes_) {
        if (id < 0 || id >= next_id_) throw GraphError("node id out of range: " + std::to_string(id));
        if (n.peers.size() != n.ports.size() || n.labels.size() != n.ports.size())
            throw GraphError("node " + std::to_string(id) + " has inconsistent port tables");
        int principal = 0;
        for (std::uint32_t i = 0; i < n.ports.size(); ++i) {
            if (is_principal(n.ports[i].state)) ++principal;
            PortRef here{id, i};
            PortRef there = n.peers[i];
            if (!valid_ref(there))
                throw GraphError("dangling edge at " + n.name + "#" + std::to_string(id) + "." + n.ports[i].name);
            if (peer(there) != here)
                throw GraphError("edge at " + n.name + "#" + std::to_string(id) + "." + n.ports[i].name +
                                 " is not reciprocal");
        }
        if (principal > 1) throw GraphError("node " + std::to_string(id) + " has several principal ports");
        if (n.scope) {
            auto it = nodes_.find(*n.scope);
            if (it == nodes_.end() || it->second.name != names::scope)
                throw GraphError("node " + std::to_string(id) + " references missing scope " +
                                 std::to_string(*n.scope));
        }
    }
    for (std::size_t i = 0; i < interface_.size(); ++i) {
        PortRef there = interface_[i].peer;
        if (!valid_ref(there)) throw GraphError("dangling interface slot " + std::to_string(i));
        if (peer(there) != PortRef::slot(i)) throw GraphError("interface slot " + std::to_string(i) + " not reciprocal");
        if (there == PortRef::slot(i)) throw GraphError("interface slot wired to itself");
    }
}

bool operator==(const PortGraph& a, const PortGraph& b) {
    if (a.nodes_.size() != b.nodes_.size() || a.interface_.size() != b.interface_.size()) return false;
    for (std::size_t i = 0; i < a.interface_.size(); ++i) {
        const auto& x = a.interface_[i];
        const auto& y = b.interface_[i];
        if (x.peer != y.peer || x.kind != y.kind || x.label != y.label) return false;
    }
    auto it = b.nodes_.begin();
    for (const auto& [id, n] : a.nodes_) {
        const Node& m = it->second;
        if (id != it->first || n.name != m.name || n.ports != m.ports || n.peers != m.peers ||
            n.labels != m.labels || n.scope != m.scope)
            return false;
        ++it;
    }
    return true;
}

// ---------------------------------------------------------------------------
// GraphEditor

namespace {
constexpr PortRef kUnlinked{-2, 0};
}

NodeId GraphEditor::add_node(std::string name, std::vector<PortSpec> ports, std::optional<NodeId> scope) {
    Node n;
    n.id = g_.next_id_++;
    n.name = std::move(name);
    n.peers.assign(ports.size(), kUnlinked);
    n.labels.assign(ports.size(), std::string{});
    n.ports = std::move(ports);
    n.scope = scope;
    NodeId id = n.id;
    g_.nodes_.emplace(id, std::move(n));
    return id;
}

void GraphEditor::remove_node(NodeId id) {
    Node& n = mutable_node(id);
    for (std::uint32_t i = 0; i < n.peers.size(); ++i) {
        if (n.peers[i] != kUnlinked) unlink({id, i});
    }
    g_.nodes_.erase(id);
}

bool GraphEditor::linked(PortRef p) const {
    if (p.is_slot()) return g_.interface_.at(p.port).peer != kUnlinked;
    return g_.node(p.node).peers.at(p.port) != kUnlinked;
}

static PortRef& slot_of(PortRef p, std::map<NodeId, Node>& nodes, std::vector<Slot>& iface) {
    if (p.is_slot()) {
        if (p.port >= iface.size()) throw GraphError("slot out of range");
        return iface[p.port].peer;
    }
    auto it = nodes.find(p.node);
    if (it == nodes.end()) throw GraphError("no node with id " + std::to_string(p.node));
    if (p.port >= it->second.peers.size())
        throw GraphError("port index out of range on node " + std::to_string(p.node));
    return it->second.peers[p.port];
}

void GraphEditor::link(PortRef a, PortRef b) {
    if (a == b) throw GraphError("cannot wire a port to itself");
    PortRef& sa = slot_of(a, g_.nodes_, g_.interface_);
    PortRef& sb = slot_of(b, g_.nodes_, g_.interface_);
    auto describe = [&](PortRef p) {
        if (p.is_slot()) return "interface slot " + std::to_string(p.port);
        const Node& n = g_.node(p.node);
        return n.name + "#" + std::to_string(p.node) + "." + n.ports[p.port].name;
    };
    if (sa != kUnlinked) throw GraphError("duplicate edge on port " + describe(a));
    if (sb != kUnlinked) throw GraphError("duplicate edge on port " + describe(b));
    sa = b;
    sb = a;
}

void GraphEditor::unlink(PortRef p) {
    PortRef& sp = slot_of(p, g_.nodes_, g_.interface_);
    if (sp == kUnlinked) return;
    PortRef other = sp;
    sp = kUnlinked;
    if (!(other.node == -2)) {
        PortRef& so = slot_of(other, g_.nodes_, g_.interface_);
        so = kUnlinked;
    }
}

std::size_t GraphEditor::add_slot(SlotKind kind, std::string label) {
    g_.interface_.push_back(Slot{kUnlinked, kind, std::move(label)});
    return g_.interface_.size() - 1;
}

void GraphEditor::set_label(PortRef p, std::string label) {
    if (p.is_slot())
        g_.interface_.at(p.port).label = std::move(label);
    else
        mutable_node(p.node).labels.at(p.port) = std::move(label);
}

void GraphEditor::set_scope(NodeId id, std::optional<NodeId> scope) { mutable_node(id).scope = scope; }

void GraphEditor::set_ports(NodeId id, std::vector<PortSpec> ports) {
    Node& n = mutable_node(id);
    for (std::uint32_t i = static_cast<std::uint32_t>(ports.size()); i < n.ports.size(); ++i) unlink({id, i});
    n.ports = std::move(ports);
    n.peers.resize(n.ports.size(), kUnlinked);
    n.labels.resize(n.ports.size());
}

void GraphEditor::rename(NodeId id, std::string name) { mutable_node(id).name = std::move(name); }

Node& GraphEditor::mutable_node(NodeId id) {
    auto it = g_.nodes_.find(id);
    if (it == g_.nodes_.end()) throw GraphError("no node with id " + std::to_string(id));
    return it->second;
}

PortGraph GraphEditor::finish() {
    g_.validate();
    return std::move(g_);
}

// ---------------------------------------------------------------------------

std::uint32_t port_index(const Node& n, std::string_view port_name) {
    for (std::uint32_t i = 0; i < n.ports.size(); ++i)
        if (n.ports[i].name == port_name) return i;
    throw GraphError("unknown port '" + std::string(port_name) + "' on node '" + n.name + "'");
}

PortGraph build_graph(const std::vector<NodeSpec>& nodes, const std::vector<EdgeSpec>& edges,
                      const PSignature& sig) {
    GraphEditor ed;
    std::vector<NodeId> ids;
    for (const auto& spec : nodes) {
        std::vector<PortSpec> ports = spec.ports;
        if (ports.empty()) {
            if (!sig.knows(spec.name)) throw GraphError("unknown node name '" + spec.name + "'");
            ports = sig.entries().find(spec.name)->second;
        }
        sig.check(spec.name, ports);
        NodeId id = ed.add_node(spec.name, ports);
        for (std::uint32_t i = 0; i < spec.labels.size() && i < ports.size(); ++i)
            ed.set_label({id, i}, spec.labels[i]);
        ids.push_back(id);
    }
    for (const auto& e : edges) {
        if (e.from_node >= ids.size() || e.to_node >= ids.size()) throw GraphError("edge references unknown node");
        const Node& a = ed.view().node(ids[e.from_node]);
        const Node& b = ed.view().node(ids[e.to_node]);
        ed.link({a.id, port_index(a, e.from_port)}, {b.id, port_index(b, e.to_port)});
    }
    for (NodeId id : ids) {
        const Node& n = ed.view().node(id);
        for (std::uint32_t i = 0; i < n.ports.size(); ++i) {
            if (!ed.linked({id, i})) {
                auto s = ed.add_slot(SlotKind::free, n.labels[i]);
                ed.link({id, i}, PortRef::slot(s));
            }
        }
    }
    return ed.finish();
}

}  // namespace pgr

namespace pgr {

PortGraph compact_ids(const PortGraph& g) {
    std::map<NodeId, NodeId> fresh;
    NodeId next = 0;
    for (const auto& [id, n] : g.nodes()) fresh[id] = next++;
    auto remap = [&](PortRef p) { return p.is_slot() ? p : PortRef{fresh.at(p.node), p.port}; };
    GraphEditor ed;
    for (const auto& [id, n] : g.nodes()) {
        NodeId nid = ed.add_node(n.name, n.ports, n.scope ? std::optional<NodeId>(fresh.at(*n.scope)) : std::nullopt);
        Node& m = ed.mutable_node(nid);
        m.labels = n.labels;
    }
    for (const auto& s : g.interface()) ed.add_slot(s.kind, s.label);
    for (const auto& [id, n] : g.nodes())
        for (std::uint32_t p = 0; p < n.ports.size(); ++p)
            if (!ed.linked({fresh[id], p})) ed.link({fresh[id], p}, remap(n.peers[p]));
    for (std::size_t i = 0; i < g.interface().size(); ++i)
        if (!ed.linked(PortRef::slot(i))) ed.link(PortRef::slot(i), remap(g.interface()[i].peer));
    return ed.finish();
}

}  // namespace pgr
