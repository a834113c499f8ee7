#include <doctest.h>

#include "gen.hpp"
#include "pgr/engine.hpp"
#include "pgr/iso.hpp"
#include "pgr/parse.hpp"

using namespace pgr;

namespace {

PortGraph gr(const char* proof) { return translate(parse_proof(proof)); }

// Puts `agent` on the conclusion wire; C's two outputs become new slots.
PortGraph cap(const PortGraph& g, std::string_view agent) {
    GraphEditor ed(g);
    std::size_t last = g.interface().size() - 1;
    PortRef root = g.interface()[last].peer;
    SlotKind kind = g.interface()[last].kind;
    std::string label = g.interface()[last].label;
    ed.unlink(PortRef::slot(last));
    ed.slots().pop_back();
    NodeId a = ed.add_node(std::string(agent), standard_ports(agent));
    ed.link({a, 0}, root);
    for (std::uint32_t p = 1; p < standard_ports(agent).size(); ++p)
        ed.link({a, p}, PortRef::slot(ed.add_slot(kind, label)));
    return ed.finish();
}

// Fires the first redex of the named rule.
PortGraph fire_named(const PortGraph& g, const RuleCatalogue& cat, const std::string& rule) {
    for (const auto& r : list_redexes(g, cat))
        if (r.rule == rule) return fire(g, r);
    FAIL("no redex for " << rule);
    return g;
}

bool has_redex(const PortGraph& g, const RuleCatalogue& cat, const std::string& rule) {
    for (const auto& r : list_redexes(g, cat))
        if (r.rule == rule) return true;
    return false;
}

// Slots wired as given pairs plus one W per listed slot.
PortGraph wires_and_erasers(std::size_t slots, std::vector<std::pair<std::size_t, std::size_t>> wires,
                            std::vector<std::size_t> erased) {
    GraphEditor ed;
    for (std::size_t i = 0; i < slots; ++i) ed.add_slot(SlotKind::free);
    for (auto [a, b] : wires) ed.link(PortRef::slot(a), PortRef::slot(b));
    for (std::size_t s : erased) {
        NodeId w = ed.add_node("W", standard_ports("W"));
        ed.link({w, 0}, PortRef::slot(s));
    }
    return ed.finish();
}

const RuleCatalogue& global() {
    static const RuleCatalogue c = RuleCatalogue::logic(Mode::global);
    return c;
}
const RuleCatalogue& small() {
    static const RuleCatalogue c = RuleCatalogue::logic(Mode::small_step);
    return c;
}

}  // namespace

TEST_CASE("beta.and") {
    PortGraph g = gr("andE1(andI(ax(A), ax(B)))");
    CHECK(is_isomorphic(fire_named(g, global(), "beta.and.e1"), wires_and_erasers(3, {{0, 2}}, {1})));
    PortGraph h = gr("andE2(andI(ax(A), ax(B)))");
    CHECK(is_isomorphic(fire_named(h, global(), "beta.and.e2"), wires_and_erasers(3, {{1, 2}}, {0})));
    CHECK_FALSE(has_redex(gr("c(0, andI(andE2(ax(A & B)), andE1(ax(A & B))))"), global(), "beta.and.e1"));
}

TEST_CASE("beta.and is local") {
    PortGraph g = gr("andE1(andI(c(0, andI(andE2(ax(A & B)), andE1(ax(A & B)))), ax(C)))");
    PortGraph h = fire_named(g, global(), "beta.and.e1");
    std::size_t kept = 0;
    for (const auto& [id, n] : g.nodes()) {
        if (n.name == "andE1" && n.peers[ports::conclusion].is_slot()) continue;  // the redex
        if (n.name == "andI" && !n.peers[ports::conclusion].is_slot() &&
            g.node(n.peers[ports::conclusion].node).peers[ports::conclusion].is_slot())
            continue;
        REQUIRE(h.has_node(id));
        CHECK(h.node(id).name == n.name);
        for (std::uint32_t p = 0; p < n.peers.size(); ++p)
            if (!n.peers[p].is_slot() && h.has_node(n.peers[p].node) && n.peers[p].node < 4)
                CHECK(h.node(id).peers[p] == n.peers[p]);
        ++kept;
    }
    CHECK(kept == 4);
}

TEST_CASE("beta.imp") {
    PortGraph g = gr("impE(impI(ax(A)), ax(A))");
    PortGraph h = fire_named(g, global(), "beta.imp");
    CHECK(is_isomorphic(h, wires_and_erasers(2, {{0, 1}}, {})));
    // With an open scope the s node goes too.
    PortGraph k = gr("impE(impI(w(B, ax(A))), ax(B))");
    CHECK(k.count_named("s") == 1);
    PortGraph kk = fire_named(k, global(), "beta.imp");
    CHECK(kk.count_named("s") == 0);
    CHECK(is_isomorphic(kk, wires_and_erasers(3, {{0, 2}}, {1})));
    for (const auto& [id, n] : kk.nodes()) CHECK_FALSE(n.scope.has_value());
}

TEST_CASE("cw") {
    PortGraph g = gr("c(0, w(A, ax(A)))");
    CHECK(is_isomorphic(fire_named(g, global(), "cw"), wires_and_erasers(2, {{0, 1}}, {})));
    PortGraph two = gr("c(1, w(A, w(A, ax(B))))");
    Strategy only_cw;
    only_cw.rule_filter = {"cw"};
    Trace t = normalise(two, global(), only_cw);
    CHECK(t.size() == 1);
    CHECK(is_isomorphic(t.final_graph, wires_and_erasers(3, {{0, 2}}, {1})));
    CHECK_FALSE(has_redex(gr("c(0, andI(andE2(ax(A & B)), andE1(ax(A & B))))"), global(), "cw"));
}

TEST_CASE("global erasing") {
    PortGraph w_andI = build_graph({{"W", {}}, {"andI", {}}}, {{0, "erase", 1, "concl"}});
    PortGraph h = fire_named(w_andI, global(), "erase.global.andI");
    CHECK(h.count_named("W") == 2);
    CHECK(h.node_count() == 2);

    PortGraph id = cap(gr("impI(ax(A))"), "W");
    CHECK(normalise(id, global()).final_graph.node_count() == 0);

    PortGraph inner = cap(gr("impI(w(B, ax(A)))"), "W");
    PortGraph e = fire_named(inner, global(), "erase.global.impI");
    CHECK(e.count_named("s") == 0);
    CHECK(is_isomorphic(e, wires_and_erasers(1, {}, {0})));
}

TEST_CASE("global copying") {
    PortGraph id = cap(gr("impI(ax(A))"), "C");
    PortGraph two = fire_named(id, global(), "copy.global.impI");
    PortGraph expect = build_graph({{"impI", {}}, {"impI", {}}}, {{0, "body", 0, "binder"}, {1, "body", 1, "binder"}});
    CHECK(is_isomorphic(two, expect));

    PortGraph open = cap(gr("impI(w(B, ax(A)))"), "C");
    PortGraph c = fire_named(open, global(), "copy.global.impI");
    CHECK(c.count_named("impI") == 2);
    CHECK(c.count_named("s") == 2);
    CHECK(c.count_named("C") == 1);
    CHECK(c.count_named("W") == 2);

    PortGraph c_andI = build_graph({{"C", {}}, {"andI", {}}}, {{0, "copy", 1, "concl"}});
    PortGraph d = fire_named(c_andI, global(), "copy.global.andI");
    CHECK(d.count_named("andI") == 2);
    CHECK(d.count_named("C") == 2);
}

TEST_CASE("meta-rules reject inconsistent scope annotations") {
    PortGraph g = cap(gr("impI(w(B, ax(A)))"), "W");
    GraphEditor ed(g);
    for (NodeId w : g.ids_named("W"))
        if (g.node(w).scope) ed.set_scope(w, std::nullopt);
    PortGraph bad = ed.finish();
    CHECK_THROWS_AS(normalise(bad, global()), IntegrityError);
}

TEST_CASE("eps and delta rules") {
    PortGraph e = build_graph({{"eps", {}}, {"andI", {}}}, {{0, "p", 1, "concl"}});
    PortGraph e2 = fire_named(e, small(), "eps.andI");
    CHECK(e2.count_named("eps") == 2);
    CHECK(e2.node_count() == 2);

    PortGraph dd = build_graph({{"delta", {}}, {"delta", {}}}, {{0, "p", 1, "p"}});
    PortGraph wires = fire_named(dd, small(), "delta.delta");
    CHECK(wires.node_count() == 0);
    for (const auto& s : wires.interface()) CHECK(s.peer.is_slot());

    PortGraph da = build_graph({{"delta", {}}, {"andI", {}}}, {{0, "p", 1, "concl"}});
    PortGraph da2 = fire_named(da, small(), "delta.andI");
    CHECK(da2.count_named("andI") == 2);
    CHECK(da2.count_named("delta") == 2);

    // Duplicating an axiom wire gives two wires.
    PortGraph ax = normalise(attach_to_interface(gr("ax(A)"), "delta"), RuleCatalogue::delta()).final_graph;
    CHECK(is_isomorphic(ax, wires_and_erasers(4, {{0, 2}, {1, 3}}, {})));
}

TEST_CASE("small-step W and C at an open implication") {
    PortGraph w = cap(gr("impI(w(B, ax(A)))"), "W");
    CHECK(has_redex(w, small(), "eps.W-impI"));
    CHECK(is_isomorphic(normalise(w, small()).final_graph, wires_and_erasers(1, {}, {0})));
    PortGraph c = cap(gr("impI(w(B, ax(A)))"), "C");
    CHECK(has_redex(c, small(), "delta.C-impI"));
    Trace t = normalise(c, small());
    CHECK(t.outcome == Outcome::normal_form);
    CHECK(is_isomorphic(t.final_graph, normalise(c, global()).final_graph));
}

TEST_CASE("eps cascade step count") {
    // A step either eats one logic node (consuming one eps, making arity - 1)
    // or annihilates an eps pair; every eps ends up consumed.
    auto predicted = [](const PortGraph& g) {
        std::size_t eps = g.interface().size();
        for (const auto& [id, n] : g.nodes()) eps += n.arity() - 1;
        return g.node_count() + (eps - g.node_count()) / 2;
    };
    PortGraph comm = gr("c(0, andI(andE2(ax(A & B)), andE1(ax(A & B))))");
    Trace t = normalise(attach_to_interface(comm, "eps"), RuleCatalogue::epsilon());
    CHECK(t.final_graph.node_count() == 0);
    CHECK(t.size() == predicted(comm));
    CHECK(t.size() == 6);

    testing::Rng rng(8);
    int checked = 0;
    for (int i = 0; i < 300 && checked < 100; ++i) {
        PortGraph g = translate(testing::random_proof(rng));
        if (g.count_named("s") || g.count_named("impI")) continue;
        ++checked;
        CHECK(normalise(attach_to_interface(g, "eps"), RuleCatalogue::epsilon()).size() == predicted(g));
    }
    CHECK(checked > 20);
}

TEST_CASE("erasing cost grows with the graph") {
    const std::pair<const char*, const char*> pairs[] = {
        {"ax(A)", "andE1(ax(A & B))"},
        {"andE1(ax(A & B))", "andI(andE1(ax(A & B)), ax(C))"},
        {"impI(ax(A))", "impI(andE1(ax(A & B)))"},
        {"impI(w(B, ax(A)))", "impI(impI(w(B, ax(A))))"},
        {"c(0, andI(andE2(ax(A & B)), andE1(ax(A & B))))", "andI(c(0, andI(andE2(ax(A & B)), andE1(ax(A & B)))), ax(C))"},
    };
    for (auto [small_p, big_p] : pairs) {
        auto steps = [](const char* p) {
            return normalise(attach_to_interface(gr(p), "eps"), RuleCatalogue::epsilon()).size();
        };
        CHECK_MESSAGE(steps(small_p) < steps(big_p), small_p << " vs " << big_p);
    }
}

TEST_CASE("catalogue enumeration and labels") {
    auto g = global().names();
    auto s = small().names();
    auto has = [](const std::vector<std::string>& v, const char* n) { return std::find(v.begin(), v.end(), n) != v.end(); };
    for (const char* n : {"beta.and.e1", "beta.and.e2", "beta.imp", "cw", "erase.global.impI", "copy.global.impI"})
        CHECK(has(g, n));
    CHECK_FALSE(has(g, "eps.andI"));
    CHECK(has(s, "eps.eps"));
    CHECK(has(s, "delta.delta"));
    CHECK_FALSE(has(s, "erase.global.impI"));
    RuleCatalogue f = global().filtered({"beta*"});
    CHECK(f.names() == std::vector<std::string>{"beta.and.e1", "beta.and.e2", "beta.imp"});
    RuleCatalogue back = RuleCatalogue::from_label(f.label());
    CHECK(back.names() == f.names());
    CHECK(RuleCatalogue::from_label("lambda").names() == std::vector<std::string>{"beta"});
    CHECK_THROWS_AS(RuleCatalogue::from_label("nonsense"), Error);
    CHECK(mode_from_string("small-step") == Mode::small_step);
    CHECK_THROWS_AS(mode_from_string("fast"), Error);
}
