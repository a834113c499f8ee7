#include "pgr/dot.hpp"

#include <map>
#include <sstream>

namespace pgr {

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\' || c == '<' || c == '>' || c == '{' || c == '}' || c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string html_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string endpoint(PortRef p) {
    if (p.is_slot()) return "slot" + std::to_string(p.port);
    return "n" + std::to_string(p.node) + ":p" + std::to_string(p.port);
}

void emit_node(std::ostream& os, const Node& n, const DotOptions& opts, const std::string& indent) {
    os << indent << "n" << n.id << " [shape=plaintext, label=<<table border=\"0\" cellborder=\"1\" cellspacing=\"0\"><tr>";
    for (std::uint32_t p = 0; p < n.ports.size(); ++p) {
        const auto& spec = n.ports[p];
        bool marked = spec.state != PortState::auxiliary && spec.state != PortState::principal;
        os << "<td port=\"p" << p << "\"" << (marked ? " bgcolor=\"black\"" : "") << ">";
        if (marked) os << "<font color=\"white\">";
        os << html_escape(spec.name);
        if (marked) os << "</font>";
        os << "</td>";
    }
    os << "</tr><tr><td colspan=\"" << n.ports.size() << "\"><b>" << html_escape(n.name) << "</b>";
    if (opts.show_ids) os << " " << n.id;
    os << "</td></tr></table>>];\n";
}

}  // namespace

std::string to_dot(const PortGraph& g, const DotOptions& opts) {
    std::ostringstream os;
    os << "graph pgr {\n  node [fontname=\"Helvetica\"];\n";
    // Nodes grouped by innermost s node; nested clusters follow the scope chain.
    std::map<std::optional<NodeId>, std::vector<NodeId>> children;
    for (const auto& [id, n] : g.nodes()) {
        std::optional<NodeId> sc = n.scope;
        if (sc && !g.has_node(*sc)) sc.reset();
        children[sc].push_back(id);
    }
    std::map<NodeId, bool> is_box;
    for (const auto& [sc, ids] : children)
        if (sc) is_box[*sc] = true;

    auto emit = [&](auto&& self, std::optional<NodeId> parent, const std::string& indent) -> void {
        auto it = children.find(parent);
        if (it == children.end()) return;
        for (NodeId id : it->second) {
            emit_node(os, g.node(id), opts, indent);
            if (is_box.count(id)) {
                os << indent << "subgraph cluster_s" << id << " {\n"
                   << indent << "  label=\"scope " << id << "\"; style=dashed;\n";
                self(self, std::optional<NodeId>(id), indent + "  ");
                os << indent << "}\n";
            }
        }
    };
    emit(emit, std::nullopt, "  ");

    for (std::size_t i = 0; i < g.interface().size(); ++i) {
        const Slot& s = g.interface()[i];
        os << "  slot" << i << " [shape=circle, width=0.3, label=\"" << i << "\", tooltip=\""
           << to_string(s.kind) << "\"];\n";
    }
    for (const auto& [a, b] : g.edges()) {
        os << "  " << endpoint(a) << " -- " << endpoint(b);
        const std::string& lab = a.is_slot() ? g.interface()[a.port].label : g.label(a);
        if (opts.show_labels && !lab.empty()) os << " [label=\"" << escape(lab) << "\"]";
        os << ";\n";
    }
    for (std::size_t i = 0; i < g.interface().size(); ++i) {
        const Slot& s = g.interface()[i];
        if (s.peer.is_slot() && s.peer.port < i) continue;
        os << "  slot" << i << " -- " << endpoint(s.peer);
        if (opts.show_labels && !s.label.empty()) os << " [label=\"" << escape(s.label) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace pgr
