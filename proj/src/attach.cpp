#include "pgr/rules.hpp"

namespace pgr {

PortGraph attach_to_interface(const PortGraph& g, std::string_view agent) {
    if (agent != names::eraser && agent != names::duplicator)
        throw GraphError("only eps and delta can be attached to an interface, not '" + std::string(agent) + "'");
    const bool dup = agent == names::duplicator;
    const std::vector<Slot> old = g.interface();
    GraphEditor ed(g);
    for (std::size_t i = 0; i < old.size(); ++i) ed.unlink(PortRef::slot(i));
    ed.slots().clear();

    std::vector<NodeId> agents;
    for (const Slot& s : old) {
        NodeId a = ed.add_node(std::string(agent), standard_ports(agent));
        ed.set_label({a, 0}, s.label);
        agents.push_back(a);
    }
    for (std::size_t i = 0; i < old.size(); ++i) {
        PortRef p = old[i].peer;
        if (p.is_slot()) {
            if (p.port > i) ed.link({agents[i], 0}, {agents[p.port], 0});
        } else {
            ed.link({agents[i], 0}, p);
        }
        if (dup) {
            for (std::uint32_t side : {1u, 2u}) {
                std::size_t k = ed.add_slot(old[i].kind, old[i].label);
                ed.set_label({agents[i], side}, old[i].label);
                ed.link({agents[i], side}, PortRef::slot(k));
            }
        }
    }
    return ed.finish();
}

}  // namespace pgr
