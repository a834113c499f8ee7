#include "pgr/serialize.hpp"

#include <cstdio>
#include <set>

namespace pgr {

Json port_ref_to_json(const PortGraph& g, PortRef p) {
    Json j;
    if (p.is_slot()) {
        j["slot"] = p.port;
    } else {
        j["node"] = p.node;
        j["port"] = g.node(p.node).ports.at(p.port).name;
    }
    return j;
}

Json graph_to_json(const PortGraph& g) {
    Json doc;
    std::set<std::string> present;
    for (const auto& [id, n] : g.nodes()) present.insert(n.name);
    Json sig = Json::object();
    Json entries = Json::object();
    Json variadic = Json::array();
    const auto& std_sig = PSignature::standard();
    for (const auto& name : present) {
        Json ports = Json::array();
        if (std_sig.knows(name))
            for (const auto& p : std_sig.entries().find(name)->second) ports.push_back(p.name);
        entries[name] = ports;
        if (std_sig.is_variadic(name)) variadic.push_back(name);
    }
    sig["entries"] = entries;
    sig["variadic"] = variadic;
    doc["signature"] = sig;

    Json nodes = Json::array();
    for (const auto& [id, n] : g.nodes()) {
        Json jn;
        jn["id"] = id;
        jn["name"] = n.name;
        Json ports = Json::array();
        for (std::size_t i = 0; i < n.ports.size(); ++i) {
            Json jp;
            jp["name"] = n.ports[i].name;
            jp["state"] = std::string(to_string(n.ports[i].state));
            if (!n.labels[i].empty()) jp["label"] = n.labels[i];
            ports.push_back(jp);
        }
        jn["ports"] = ports;
        if (n.scope) jn["scope"] = *n.scope;
        nodes.push_back(jn);
    }
    doc["nodes"] = nodes;

    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({port_ref_to_json(g, a), port_ref_to_json(g, b)}));
    doc["edges"] = edges;

    Json iface = Json::array();
    for (const auto& s : g.interface()) {
        Json js = port_ref_to_json(g, s.peer);
        js["kind"] = std::string(to_string(s.kind));
        if (!s.label.empty()) js["label"] = s.label;
        iface.push_back(js);
    }
    doc["interface"] = iface;
    doc["next_id"] = g.next_id();
    return doc;
}

PortGraph graph_from_json(const Json& doc) {
    try {
        GraphEditor ed;
        const auto& sig = PSignature::standard();
        NodeId max_id = -1;
        std::vector<NodeId> file_ids;
        for (const auto& jn : doc.at("nodes")) file_ids.push_back(jn.at("id").get<NodeId>());
        // Node ids are preserved: allocate up to each id, dropping the gaps.
        std::map<NodeId, NodeId> id_map;
        std::set<NodeId> sorted(file_ids.begin(), file_ids.end());
        if (sorted.size() != file_ids.size()) throw GraphError("duplicate node id");
        std::map<NodeId, const Json*> by_id;
        for (const auto& jn : doc.at("nodes")) by_id[jn.at("id").get<NodeId>()] = &jn;
        std::vector<NodeId> placeholders;
        for (NodeId want : sorted) {
            if (want < 0) throw GraphError("negative node id");
            while (ed.view().next_id() < want) placeholders.push_back(ed.add_node("W", standard_ports("W")));
            const Json& jn = *by_id[want];
            std::vector<PortSpec> ports;
            for (const auto& jp : jn.at("ports"))
                ports.push_back({jp.at("name").get<std::string>(), port_state_from_string(jp.at("state").get<std::string>())});
            std::string name = jn.at("name").get<std::string>();
            sig.check(name, ports);
            NodeId id = ed.add_node(name, ports);
            std::uint32_t i = 0;
            for (const auto& jp : jn.at("ports")) {
                if (jp.contains("label")) ed.set_label({id, i}, jp["label"].get<std::string>());
                ++i;
            }
            id_map[want] = id;
            max_id = want;
        }
        for (NodeId p : placeholders) ed.remove_node(p);
        for (const auto& jn : doc.at("nodes")) {
            if (jn.contains("scope")) ed.set_scope(jn.at("id").get<NodeId>(), jn.at("scope").get<NodeId>());
        }
        auto ref = [&](const Json& j) -> PortRef {
            if (j.contains("slot")) return PortRef::slot(j.at("slot").get<std::size_t>());
            NodeId id = j.at("node").get<NodeId>();
            const Node& n = ed.view().node(id);
            return PortRef{id, port_index(n, j.at("port").get<std::string>())};
        };
        const auto& iface = doc.at("interface");
        for (const auto& js : iface)
            ed.add_slot(slot_kind_from_string(js.value("kind", std::string("free"))), js.value("label", std::string()));
        for (const auto& e : doc.at("edges")) {
            if (e.size() != 2) throw GraphError("edge must have two endpoints");
            PortRef a = ref(e[0]), b = ref(e[1]);
            if (a.is_slot() || b.is_slot()) throw GraphError("edges list node ports only; use the interface for free ports");
            ed.link(a, b);
        }
        for (std::size_t i = 0; i < iface.size(); ++i) {
            PortRef target = ref(iface[i]);
            if (!ed.linked(PortRef::slot(i))) ed.link(PortRef::slot(i), target);
            else if (ed.view().peer(PortRef::slot(i)) != target)
                throw GraphError("interface slot " + std::to_string(i) + " disagrees with its partner");
        }
        if (doc.contains("next_id")) ed.reserve_ids(doc["next_id"].get<NodeId>());
        (void)max_id;
        for (const auto& [id, n] : ed.view().nodes())
            for (std::uint32_t p = 0; p < n.ports.size(); ++p)
                if (!ed.linked({id, p}))
                    throw GraphError("port " + n.name + "#" + std::to_string(id) + "." + n.ports[p].name +
                                     " has no edge and is not in the interface");
        return ed.finish();
    } catch (const Json::exception& e) {
        throw GraphError(std::string("malformed graph document: ") + e.what());
    }
}

std::string graph_to_text(const PortGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

PortGraph graph_from_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw GraphError(std::string("graph document is not valid JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

std::string content_hash(const PortGraph& g) {
    std::string text = graph_to_json(g).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace pgr
