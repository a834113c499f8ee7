#include <algorithm>
#include <chrono>

#include "criteria.hpp"
#include "pgr/document.hpp"
#include "pgr/iso.hpp"
#include "pgr/parse.hpp"

using namespace pgr;

namespace acceptance {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string data(const std::string& name) { return read_file(std::string(PGR_DATA_DIR) + "/" + name); }

std::vector<std::string> sorted_names(const PortGraph& g) {
    std::vector<std::string> out;
    for (const auto& [id, n] : g.nodes()) out.push_back(n.name);
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

PortGraph identity_graph() { return build_graph({{"lam", {}}}, {{0, "body", 0, "binder"}}); }

Verdict comm() {
    auto t0 = std::chrono::steady_clock::now();
    PortGraph g = translate(parse_proof(data("comm.prf")));
    // C on the hypothesis, its two copies feeding the eliminations, swapped into andI.
    PortGraph want = build_graph({{"C", {}}, {"andE1", {}}, {"andE2", {}}, {"andI", {}}},
                                 {{0, "out1", 2, "premise"},
                                  {0, "out2", 1, "premise"},
                                  {2, "concl", 3, "left"},
                                  {1, "concl", 3, "right"}});
    double t = seconds_since(t0);
    bool iso = static_cast<bool>(is_isomorphic(g, want));
    std::string names = join(sorted_names(g));
    bool ok = g.node_count() == 4 && names == "C andE1 andE2 andI" && iso && t < 1.0;
    return {ok, "nodes {" + names + "}, iso " + (iso ? "yes" : "no")};
}

Verdict axiom_k() {
    auto t0 = std::chrono::steady_clock::now();
    PortGraph g = translate(parse_proof(data("axiom_k.prf")));
    double t = seconds_since(t0);
    std::string names = join(sorted_names(g));
    PortRef root = g.interface().back().peer;
    const Node& outer = g.node(root.node);
    bool outer_closed = outer.name == "impI" && outer.ports.size() == 3;
    bool ok = names == "W impI impI s" && outer_closed && g.count_named("s") == 1 && t < 1.0;
    return {ok, "nodes {" + names + "}, outer impI " + (outer_closed ? "closed" : "has a scope")};
}

Verdict reduces_in(const std::string& file, std::size_t want_steps) {
    PortGraph g = translate_term(parse_term(data(file)));
    Strategy s;
    s.kind = StrategyKind::innermost;
    Trace t = normalise(g, RuleCatalogue::lambda(), s);
    bool iso = static_cast<bool>(is_isomorphic(t.final_graph, identity_graph()));
    bool ok = t.size() == want_steps && t.outcome == Outcome::normal_form && iso;
    return {ok, std::to_string(t.size()) + " steps, result iso Gr(\\x. x): " + (iso ? "yes" : "no")};
}

}  // namespace

std::vector<Criterion> example_criteria() {
    return {
        {"commutativity proof translates to the 4-node graph", comm},
        {"A -> B -> A translates to impI, impI, W, s with a closed outer impI", axiom_k},
        {"(\\x. x) (\\x. x) reduces in exactly 1 beta step to Gr(\\x. x)", [] { return reduces_in("id_id.lam", 1); }},
        {"(\\x y. y x) (\\x. x) (\\x. x) reduces in exactly 3 beta steps to Gr(\\x. x)",
         [] { return reduces_in("three.lam", 3); }},
    };
}

}  // namespace acceptance
