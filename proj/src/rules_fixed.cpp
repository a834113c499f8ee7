#include "pgr/rules.hpp"

namespace pgr {

namespace {

std::string key(std::string_view stem, std::size_t i) { return std::string(stem) + std::to_string(i); }

std::vector<PortSpec> ports_of(std::string_view alpha) { return standard_ports(alpha); }

// Scope ports of an implication with s_n: body, binder, in_k, out_k keys.
struct ImpLhs {
    std::size_t imp;
    std::optional<std::size_t> s;
};

ImpLhs imp_lhs(RuleBuilder& b, std::size_t arity) {
    ImpLhs l{b.lhs_node(names::imp_intro, imp_intro_ports(arity > 0)), std::nullopt};
    b.lhs_free(l.imp, ports::body, "body");
    b.lhs_free(l.imp, ports::binder, "binder");
    if (arity > 0) {
        l.s = b.lhs_node(names::scope, scope_ports(arity));
        b.lhs_link(l.imp, ports::scope, *l.s, ports::principal);
        for (std::size_t k = 0; k < arity; ++k) {
            b.lhs_free(*l.s, ports::scope_in(k), key("in", k));
            b.lhs_free(*l.s, ports::scope_out(k), key("out", k));
        }
    }
    return l;
}

// Two implication shells (with s nodes when arity > 0); returns the impI ids.
std::pair<std::size_t, std::size_t> imp_shells(RuleBuilder& b, std::size_t arity,
                                                std::optional<std::pair<std::size_t, std::size_t>>* scopes) {
    std::size_t i1 = b.rhs_node(names::imp_intro, imp_intro_ports(arity > 0));
    std::size_t i2 = b.rhs_node(names::imp_intro, imp_intro_ports(arity > 0));
    if (arity > 0) {
        std::size_t s1 = b.rhs_node(names::scope, scope_ports(arity));
        std::size_t s2 = b.rhs_node(names::scope, scope_ports(arity));
        b.rhs_link(i1, ports::scope, s1, ports::principal);
        b.rhs_link(i2, ports::scope, s2, ports::principal);
        *scopes = std::make_pair(s1, s2);
    }
    return {i1, i2};
}

// A binary agent (delta or C) whose principal port takes `k` and whose
// outputs feed port (n1, p1) and (n2, p2).
void splitter(RuleBuilder& b, std::string_view agent, const std::string& k, std::size_t n1, std::uint32_t p1,
              std::size_t n2, std::uint32_t p2) {
    std::size_t d = b.rhs_node(agent);
    b.rhs_free(d, 0, k);
    b.rhs_link(d, 1, n1, p1);
    b.rhs_link(d, 2, n2, p2);
}

}  // namespace

RewriteRule beta_and(int which) {
    RuleBuilder b(which == 1 ? "beta.and.e1" : "beta.and.e2");
    auto intro = b.lhs_node(names::and_intro);
    auto elim = b.lhs_node(which == 1 ? names::and_elim1 : names::and_elim2);
    b.lhs_link(intro, ports::conclusion, elim, ports::premise);
    b.lhs_free(intro, ports::left, "left");
    b.lhs_free(intro, ports::right, "right");
    b.lhs_free(elim, ports::conclusion, "out");
    auto w = b.rhs_node(names::weakening);
    b.rhs_wire(which == 1 ? "left" : "right", "out");
    b.rhs_free(w, ports::principal, which == 1 ? "right" : "left");
    return b.build();
}

RewriteRule beta_imp(std::size_t arity) {
    RuleBuilder b("beta.imp");
    ImpLhs l = imp_lhs(b, arity);
    auto elim = b.lhs_node(names::imp_elim);
    b.lhs_link(l.imp, ports::conclusion, elim, ports::function);
    b.lhs_free(elim, ports::conclusion, "out");
    b.lhs_free(elim, ports::argument, "arg");
    b.rhs_wire("binder", "arg");
    b.rhs_wire("body", "out");
    for (std::size_t k = 0; k < arity; ++k) b.rhs_wire(key("in", k), key("out", k));
    return b.build();
}

std::vector<RewriteRule> cw_simplify() {
    std::vector<RewriteRule> out;
    for (std::uint32_t p : {ports::out1, ports::out2}) {
        RuleBuilder b("cw");
        auto c = b.lhs_node(names::contraction);
        auto w = b.lhs_node(names::weakening);
        b.lhs_link(c, p, w, ports::principal);
        b.lhs_free(c, ports::copy, "in");
        b.lhs_free(c, p == ports::out1 ? ports::out2 : ports::out1, "other");
        b.rhs_wire("in", "other");
        out.push_back(b.build());
    }
    return out;
}

namespace {

// `agent` (W or eps) at alpha's port 0: one agent on every other port.
RewriteRule erase_with(std::string_view agent, std::string name, std::string_view alpha) {
    RuleBuilder b(std::move(name));
    auto a = b.lhs_node(agent);
    auto n = b.lhs_node(alpha);
    b.lhs_link(a, 0, n, 0);
    auto ps = ports_of(alpha);
    for (std::uint32_t p = 1; p < ps.size(); ++p) {
        b.lhs_free(n, p, key("p", p));
        auto e = b.rhs_node(agent);
        b.rhs_free(e, 0, key("p", p));
    }
    b.anchor(1);
    return b.build();
}

// `agent` (C or delta) at alpha's port 0: two copies of alpha, one agent on
// every other port.
RewriteRule copy_with(std::string_view agent, std::string name, std::string_view alpha) {
    RuleBuilder b(std::move(name));
    auto a = b.lhs_node(agent);
    auto n = b.lhs_node(alpha);
    b.lhs_link(a, 0, n, 0);
    b.lhs_free(a, 1, "o1");
    b.lhs_free(a, 2, "o2");
    auto ps = ports_of(alpha);
    for (std::uint32_t p = 1; p < ps.size(); ++p) b.lhs_free(n, p, key("p", p));
    auto c1 = b.rhs_node(alpha);
    auto c2 = b.rhs_node(alpha);
    b.rhs_free(c1, 0, "o1");
    b.rhs_free(c2, 0, "o2");
    for (std::uint32_t p = 1; p < ps.size(); ++p) splitter(b, agent, key("p", p), c1, p, c2, p);
    b.anchor(1);
    return b.build();
}

}  // namespace

RewriteRule erase_global(std::string_view alpha) {
    if (alpha == names::imp_intro || alpha == names::scope)
        throw GraphError("erase_global: " + std::string(alpha) + " is handled by a meta-rule");
    return erase_with(names::weakening, "erase.global." + std::string(alpha), alpha);
}

RewriteRule copy_global(std::string_view alpha) {
    if (alpha == names::imp_intro || alpha == names::scope)
        throw GraphError("copy_global: " + std::string(alpha) + " is handled by a meta-rule");
    return copy_with(names::contraction, "copy.global." + std::string(alpha), alpha);
}

RewriteRule epsilon_rule(std::string_view alpha) {
    return erase_with(names::eraser, "eps." + std::string(alpha), alpha);
}

RewriteRule delta_rule(std::string_view alpha) {
    if (alpha == names::duplicator) {
        RuleBuilder b("delta.delta");
        auto d1 = b.lhs_node(names::duplicator);
        auto d2 = b.lhs_node(names::duplicator);
        b.lhs_link(d1, 0, d2, 0);
        b.lhs_free(d1, 1, "a1");
        b.lhs_free(d1, 2, "b1");
        b.lhs_free(d2, 1, "a2");
        b.lhs_free(d2, 2, "b2");
        b.rhs_wire("a1", "a2");
        b.rhs_wire("b1", "b2");
        return b.build();
    }
    return copy_with(names::duplicator, "delta." + std::string(alpha), alpha);
}

RewriteRule epsilon_imp_scope(std::size_t arity) {
    RuleBuilder b("eps.impI-s");
    auto e = b.lhs_node(names::eraser);
    ImpLhs l = imp_lhs(b, arity);
    b.lhs_link(e, 0, l.imp, ports::conclusion);
    for (std::string k : {"body", "binder"}) b.rhs_free(b.rhs_node(names::eraser), 0, k);
    for (std::size_t k = 0; k < arity; ++k) {
        b.rhs_free(b.rhs_node(names::eraser), 0, key("in", k));
        b.rhs_free(b.rhs_node(names::eraser), 0, key("out", k));
    }
    b.anchor(1);
    return b.build();
}

RewriteRule epsilon_weak_imp(std::size_t arity) {
    RuleBuilder b("eps.W-impI");
    auto w = b.lhs_node(names::weakening);
    ImpLhs l = imp_lhs(b, arity);
    b.lhs_link(w, 0, l.imp, ports::conclusion);
    for (std::string k : {"body", "binder"}) b.rhs_free(b.rhs_node(names::eraser), 0, k);
    for (std::size_t k = 0; k < arity; ++k) {
        b.rhs_free(b.rhs_node(names::eraser), 0, key("in", k));
        b.rhs_free(b.rhs_node(names::weakening), 0, key("out", k));
    }
    b.anchor(1);
    return b.build();
}

namespace {

RewriteRule duplicate_imp(std::string name, std::string_view agent, std::size_t arity) {
    RuleBuilder b(std::move(name));
    auto a = b.lhs_node(agent);
    ImpLhs l = imp_lhs(b, arity);
    b.lhs_link(a, 0, l.imp, ports::conclusion);
    b.lhs_free(a, 1, "o1");
    b.lhs_free(a, 2, "o2");
    std::optional<std::pair<std::size_t, std::size_t>> scopes;
    auto [i1, i2] = imp_shells(b, arity, &scopes);
    b.rhs_free(i1, ports::conclusion, "o1");
    b.rhs_free(i2, ports::conclusion, "o2");
    // Inside the shells the copy proceeds with delta; outside, `agent` fans
    // the bound wires.
    splitter(b, names::duplicator, "body", i1, ports::body, i2, ports::body);
    splitter(b, names::duplicator, "binder", i1, ports::binder, i2, ports::binder);
    for (std::size_t k = 0; k < arity; ++k) {
        auto [s1, s2] = *scopes;
        splitter(b, names::duplicator, key("in", k), s1, ports::scope_in(k), s2, ports::scope_in(k));
        splitter(b, agent, key("out", k), s1, ports::scope_out(k), s2, ports::scope_out(k));
    }
    b.anchor(1);
    return b.build();
}

}  // namespace

RewriteRule delta_imp_scope(std::size_t arity) { return duplicate_imp("delta.impI-s", names::duplicator, arity); }

RewriteRule delta_copy_imp(std::size_t arity) { return duplicate_imp("delta.C-impI", names::contraction, arity); }

}  // namespace pgr
