#include <algorithm>
#include <set>

#include "pgr/lambda.hpp"
#include "pgr/rules.hpp"

namespace pgr {

std::string_view to_string(Mode m) { return m == Mode::global ? "global" : "small-step"; }

Mode mode_from_string(std::string_view s) {
    if (s == "global") return Mode::global;
    if (s == "small-step" || s == "small_step" || s == "small") return Mode::small_step;
    throw Error("unknown mode '" + std::string(s) + "' (expected global or small-step)");
}

PortGraph CatalogueRule::apply(const PortGraph& host, const Morphism& m) const {
    if (meta) {
        verify_match(rule.lhs, host, m);
        return meta(host, m);
    }
    return apply_rule(host, rule, m);
}

namespace {

const std::vector<std::string_view> kPlain = {names::and_intro, names::and_elim1, names::and_elim2, names::imp_elim};

CatalogueRule fixed(RewriteRule r) {
    std::string name = r.name;
    return CatalogueRule{std::move(name), std::move(r), {}};
}

// lhs: agent at an implication (+ s_n); node_map[0] is the agent, [1] the impI.
RewriteRule anchor_pattern(std::string name, std::string_view agent, std::size_t arity) {
    RuleBuilder b(std::move(name));
    auto a = b.lhs_node(agent);
    auto imp = b.lhs_node(names::imp_intro, imp_intro_ports(arity > 0));
    b.lhs_link(a, 0, imp, ports::conclusion);
    for (std::uint32_t p = 1; p < standard_ports(agent).size(); ++p) b.lhs_free(a, p, "a" + std::to_string(p));
    b.lhs_free(imp, ports::body, "body");
    b.lhs_free(imp, ports::binder, "binder");
    if (arity > 0) {
        auto s = b.lhs_node(names::scope, scope_ports(arity));
        b.lhs_link(imp, ports::scope, s, ports::principal);
        for (std::size_t k = 0; k < arity; ++k) {
            b.lhs_free(s, ports::scope_in(k), "in" + std::to_string(k));
            b.lhs_free(s, ports::scope_out(k), "out" + std::to_string(k));
        }
    }
    // The meta-rule computes its own right-hand side.
    for (const auto& k : std::vector<std::string>{"body", "binder"}) b.black_hole(k);
    for (std::uint32_t p = 1; p < standard_ports(agent).size(); ++p) b.black_hole("a" + std::to_string(p));
    for (std::size_t k = 0; k < arity; ++k) {
        b.black_hole("in" + std::to_string(k));
        b.black_hole("out" + std::to_string(k));
    }
    return b.build();
}

CatalogueRule erase_meta(std::size_t arity) {
    return CatalogueRule{"erase.global.impI", anchor_pattern("erase.global.impI", names::weakening, arity),
                         [](const PortGraph& g, const Morphism& m) {
                             return erase_implication(g, m.node_map[0], m.node_map[1]);
                         }};
}

CatalogueRule copy_meta(std::size_t arity) {
    return CatalogueRule{"copy.global.impI", anchor_pattern("copy.global.impI", names::contraction, arity),
                         [](const PortGraph& g, const Morphism& m) {
                             return copy_implication(g, m.node_map[0], m.node_map[1]);
                         }};
}

bool matches_pattern(const std::string& name, const std::string& pat) {
    if (!pat.empty() && pat.back() == '*') return name.compare(0, pat.size() - 1, pat, 0, pat.size() - 1) == 0;
    return name == pat;
}

}  // namespace

RuleCatalogue::RuleCatalogue(const RuleCatalogue& other)
    : label_(other.label_), fixed_(other.fixed_), families_(other.families_), patterns_(other.patterns_) {}

void RuleCatalogue::add(CatalogueRule r) { fixed_.push_back(std::make_shared<const CatalogueRule>(std::move(r))); }

void RuleCatalogue::add_family(Family f) { families_.push_back(std::move(f)); }

bool RuleCatalogue::keep(const std::string& name) const {
    if (patterns_.empty()) return true;
    return std::any_of(patterns_.begin(), patterns_.end(), [&](const std::string& p) { return matches_pattern(name, p); });
}

RuleCatalogue RuleCatalogue::structural(Mode m) {
    RuleCatalogue c;
    c.label_ = std::string("structural/") + std::string(to_string(m));
    for (auto& r : cw_simplify()) c.add(fixed(std::move(r)));
    for (auto a : kPlain) c.add(fixed(erase_global(a)));
    for (auto a : kPlain) c.add(fixed(copy_global(a)));
    if (m == Mode::global) {
        c.add(erase_meta(0));
        c.add(copy_meta(0));
        c.add_family([](std::size_t n) { return std::vector<CatalogueRule>{erase_meta(n), copy_meta(n)}; });
        return c;
    }
    for (auto a : {names::contraction, names::weakening, names::and_intro, names::and_elim1, names::and_elim2,
                   names::imp_intro, names::imp_elim, names::eraser, names::duplicator})
        c.add(fixed(epsilon_rule(a)));
    for (auto a : {names::contraction, names::weakening, names::and_intro, names::and_elim1, names::and_elim2,
                   names::imp_intro, names::imp_elim, names::duplicator})
        c.add(fixed(delta_rule(a)));
    c.add(fixed(epsilon_weak_imp(0)));
    c.add(fixed(delta_copy_imp(0)));
    c.add_family([](std::size_t n) {
        return std::vector<CatalogueRule>{fixed(epsilon_imp_scope(n)), fixed(epsilon_weak_imp(n)),
                                          fixed(delta_imp_scope(n)), fixed(delta_copy_imp(n))};
    });
    return c;
}

RuleCatalogue RuleCatalogue::logic(Mode m) {
    RuleCatalogue c = structural(m);
    c.label_ = std::string("logic/") + std::string(to_string(m));
    c.add(fixed(beta_and(1)));
    c.add(fixed(beta_and(2)));
    c.add(fixed(beta_imp(0)));
    c.add_family([](std::size_t n) { return std::vector<CatalogueRule>{fixed(beta_imp(n))}; });
    return c;
}

RuleCatalogue RuleCatalogue::epsilon() {
    RuleCatalogue c = structural(Mode::small_step).filtered({"eps.*"});
    c.label_ = "epsilon";
    return c;
}

RuleCatalogue RuleCatalogue::delta() {
    RuleCatalogue c = structural(Mode::small_step).filtered({"delta.*"});
    c.label_ = "delta";
    return c;
}

RuleCatalogue RuleCatalogue::lambda() {
    RuleCatalogue c;
    c.label_ = "lambda";
    c.add(fixed(beta_rule()));
    return c;
}

RuleCatalogue RuleCatalogue::filtered(const std::vector<std::string>& patterns) const {
    RuleCatalogue c(*this);
    std::vector<std::string> merged = patterns;
    if (!patterns_.empty()) {
        // Intersect by keeping only new patterns that the old filter admits.
        merged.clear();
        for (const auto& p : patterns)
            for (const auto& q : patterns_)
                if (matches_pattern(p, q) || matches_pattern(q, p)) merged.push_back(p.size() >= q.size() ? p : q);
        if (merged.empty()) merged.push_back("\x01");  // matches nothing
    }
    c.patterns_ = merged;
    std::string base = label_.substr(0, label_.find('|'));
    c.label_ = base + "|";
    for (std::size_t i = 0; i < patterns.size(); ++i) c.label_ += (i ? "," : "") + patterns[i];
    return c;
}

std::vector<std::shared_ptr<const CatalogueRule>> RuleCatalogue::rules_for(const PortGraph& g) const {
    std::vector<std::shared_ptr<const CatalogueRule>> out;
    for (const auto& r : fixed_)
        if (keep(r->name)) out.push_back(r);
    if (families_.empty()) return out;
    std::set<std::size_t> arities;
    for (const auto& [id, n] : g.nodes())
        if (n.name == names::scope && n.scope_arity() > 0) arities.insert(n.scope_arity());
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t n : arities) {
        auto it = per_arity_.find(n);
        if (it == per_arity_.end()) {
            std::vector<std::shared_ptr<const CatalogueRule>> made;
            for (const auto& f : families_)
                for (auto& r : f(n)) made.push_back(std::make_shared<const CatalogueRule>(std::move(r)));
            it = per_arity_.emplace(n, std::move(made)).first;
        }
        for (const auto& r : it->second)
            if (keep(r->name)) out.push_back(r);
    }
    return out;
}

std::vector<std::string> RuleCatalogue::names() const {
    std::set<std::string> out;
    for (const auto& r : fixed_)
        if (keep(r->name)) out.insert(r->name);
    for (const auto& f : families_)
        for (const auto& r : f(1))
            if (keep(r.name)) out.insert(r.name);
    return {out.begin(), out.end()};
}

}  // namespace pgr

namespace pgr {

RuleCatalogue RuleCatalogue::from_label(std::string_view label) {
    auto bar = label.find('|');
    if (bar != std::string_view::npos) {
        std::vector<std::string> patterns;
        std::string rest(label.substr(bar + 1));
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            if (comma == std::string::npos) comma = rest.size();
            if (comma > start) patterns.push_back(rest.substr(start, comma - start));
            start = comma + 1;
        }
        return from_label(label.substr(0, bar)).filtered(patterns);
    }
    if (label == "lambda") return lambda();
    if (label == "epsilon") return epsilon();
    if (label == "delta") return delta();
    auto slash = label.find('/');
    if (slash != std::string_view::npos) {
        Mode m = mode_from_string(label.substr(slash + 1));
        if (label.substr(0, slash) == "logic") return logic(m);
        if (label.substr(0, slash) == "structural") return structural(m);
    }
    throw Error("unknown rule catalogue '" + std::string(label) + "'");
}

}  // namespace pgr
