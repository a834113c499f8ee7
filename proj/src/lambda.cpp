#include "pgr/lambda.hpp"

#include <algorithm>
#include <map>

namespace pgr {

TermPtr Term::var(std::string name) {
    if (name.empty()) throw LinearityError("variable names must be nonempty");
    return TermPtr(new Term(Kind::var, std::move(name), nullptr, nullptr));
}

TermPtr Term::abs(std::string name, TermPtr body) {
    return TermPtr(new Term(Kind::abs, std::move(name), std::move(body), nullptr));
}

TermPtr Term::app(TermPtr fun, TermPtr arg) { return TermPtr(new Term(Kind::app, {}, std::move(fun), std::move(arg))); }

std::string Term::str() const {
    switch (kind_) {
        case Kind::var: return name_;
        case Kind::abs: {
            std::string out = "\\" + name_;
            const Term* b = a_.get();
            while (b->kind() == Kind::abs) {
                out += " " + b->name();
                b = b->body().get();
            }
            return out + ". " + b->str();
        }
        case Kind::app: {
            std::string f = a_->kind() == Kind::abs ? "(" + a_->str() + ")" : a_->str();
            std::string x = b_->kind() == Kind::var ? b_->str() : "(" + b_->str() + ")";
            return f + " " + x;
        }
    }
    return {};
}

std::size_t Term::size() const {
    switch (kind_) {
        case Kind::var: return 1;
        case Kind::abs: return 1 + a_->size();
        case Kind::app: return 1 + a_->size() + b_->size();
    }
    return 0;
}

namespace {

bool alpha_eq(const Term& a, const Term& b, std::vector<std::pair<std::string, std::string>>& env) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::var: {
            for (auto it = env.rbegin(); it != env.rend(); ++it) {
                if (it->first == a.name() || it->second == b.name()) return it->first == a.name() && it->second == b.name();
            }
            return a.name() == b.name();
        }
        case Term::Kind::abs: {
            env.emplace_back(a.name(), b.name());
            bool r = alpha_eq(*a.body(), *b.body(), env);
            env.pop_back();
            return r;
        }
        case Term::Kind::app: return alpha_eq(*a.fun(), *b.fun(), env) && alpha_eq(*a.arg(), *b.arg(), env);
    }
    return false;
}

void free_vars(const Term& t, std::vector<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::var: out.push_back(t.name()); return;
        case Term::Kind::abs: {
            std::vector<std::string> inner;
            free_vars(*t.body(), inner);
            auto n = std::count(inner.begin(), inner.end(), t.name());
            if (n != 1)
                throw LinearityError("variable " + t.name() + " is bound but used " + std::to_string(n) + " times");
            inner.erase(std::find(inner.begin(), inner.end(), t.name()));
            out.insert(out.end(), inner.begin(), inner.end());
            return;
        }
        case Term::Kind::app: {
            std::vector<std::string> f, a;
            free_vars(*t.fun(), f);
            free_vars(*t.arg(), a);
            for (const auto& x : a)
                if (std::find(f.begin(), f.end(), x) != f.end())
                    throw LinearityError("variable " + x + " occurs free on both sides of an application");
            out.insert(out.end(), f.begin(), f.end());
            out.insert(out.end(), a.begin(), a.end());
            return;
        }
    }
}

}  // namespace

bool alpha_equivalent(const TermPtr& a, const TermPtr& b) {
    std::vector<std::pair<std::string, std::string>> env;
    return alpha_eq(*a, *b, env);
}

std::vector<std::string> check_linear(const TermPtr& t) {
    if (!t) throw LinearityError("empty term");
    std::vector<std::string> fv;
    free_vars(*t, fv);
    for (std::size_t i = 0; i < fv.size(); ++i)
        if (std::find(fv.begin() + static_cast<std::ptrdiff_t>(i) + 1, fv.end(), fv[i]) != fv.end())
            throw LinearityError("free variable " + fv[i] + " occurs more than once");
    return fv;
}

namespace {

struct TermEnds {
    std::vector<std::pair<std::string, PortRef>> vars;
    PortRef root;
};

TermEnds build_term(GraphEditor& ed, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::var: {
            NodeId n = ed.add_node(std::string(names::axiom), standard_ports(names::axiom));
            return {{{t.name(), PortRef{n, 0}}}, PortRef{n, 1}};
        }
        case Term::Kind::abs: {
            TermEnds e = build_term(ed, *t.body());
            NodeId n = ed.add_node(std::string(names::lambda), standard_ports(names::lambda));
            auto it = std::find_if(e.vars.begin(), e.vars.end(), [&](const auto& v) { return v.first == t.name(); });
            ed.link({n, ports::body}, e.root);
            ed.link({n, ports::binder}, it->second);
            e.vars.erase(it);
            e.root = {n, ports::conclusion};
            return e;
        }
        case Term::Kind::app: {
            TermEnds f = build_term(ed, *t.fun());
            TermEnds a = build_term(ed, *t.arg());
            NodeId n = ed.add_node(std::string(names::apply), standard_ports(names::apply));
            ed.link({n, ports::function}, f.root);
            ed.link({n, ports::argument}, a.root);
            f.vars.insert(f.vars.end(), a.vars.begin(), a.vars.end());
            f.root = {n, ports::conclusion};
            return f;
        }
    }
    throw LinearityError("unknown term");
}

}  // namespace

PortGraph translate_term(const TermPtr& t) {
    check_linear(t);
    GraphEditor ed;
    TermEnds e = build_term(ed, *t);
    for (const auto& [x, p] : e.vars) ed.link(PortRef::slot(ed.add_slot(SlotKind::hypothesis, x)), p);
    ed.link(PortRef::slot(ed.add_slot(SlotKind::conclusion)), e.root);
    for (NodeId id : ed.view().ids_named(names::axiom)) {
        const Node& n = ed.view().node(id);
        PortRef a = n.peers[0], b = n.peers[1];
        ed.remove_node(id);
        ed.link(a, b);
    }
    return compact_ids(ed.finish());
}

RewriteRule beta_rule() {
    RuleBuilder b("beta");
    auto app = b.lhs_node(names::apply);
    auto lam = b.lhs_node(names::lambda);
    b.lhs_link(app, ports::function, lam, ports::conclusion);
    b.lhs_free(app, ports::conclusion, "root");
    b.lhs_free(app, ports::argument, "arg");
    b.lhs_free(lam, ports::body, "body");
    b.lhs_free(lam, ports::binder, "binder");
    b.rhs_wire("binder", "arg");
    b.rhs_wire("body", "root");
    return b.build();
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u) {
    switch (t->kind()) {
        case Term::Kind::var: return t->name() == x ? u : t;
        case Term::Kind::abs: {
            if (t->name() == x) return t;
            std::vector<std::string> fu;
            free_vars(*u, fu);
            if (std::find(fu.begin(), fu.end(), t->name()) == fu.end())
                return Term::abs(t->name(), substitute(t->body(), x, u));
            // Rename the binder away from the free variables of u.
            std::vector<std::string> fb;
            free_vars(*t->body(), fb);
            std::string y = t->name();
            while (std::find(fu.begin(), fu.end(), y) != fu.end() || std::find(fb.begin(), fb.end(), y) != fb.end() || y == x)
                y += "'";
            return Term::abs(y, substitute(substitute(t->body(), t->name(), Term::var(y)), x, u));
        }
        case Term::Kind::app: return Term::app(substitute(t->fun(), x, u), substitute(t->arg(), x, u));
    }
    return t;
}

std::size_t count_beta_redexes(const TermPtr& t) {
    switch (t->kind()) {
        case Term::Kind::var: return 0;
        case Term::Kind::abs: return count_beta_redexes(t->body());
        case Term::Kind::app:
            return (t->fun()->kind() == Term::Kind::abs ? 1 : 0) + count_beta_redexes(t->fun()) + count_beta_redexes(t->arg());
    }
    return 0;
}

std::optional<TermPtr> beta_step(const TermPtr& t) {
    switch (t->kind()) {
        case Term::Kind::var: return std::nullopt;
        case Term::Kind::abs: {
            auto b = beta_step(t->body());
            if (!b) return std::nullopt;
            return Term::abs(t->name(), *b);
        }
        case Term::Kind::app: {
            if (t->fun()->kind() == Term::Kind::abs) return substitute(t->fun()->body(), t->fun()->name(), t->arg());
            if (auto f = beta_step(t->fun())) return Term::app(*f, t->arg());
            if (auto a = beta_step(t->arg())) return Term::app(t->fun(), *a);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

TermPtr normalise_term(const TermPtr& t, std::size_t* steps) {
    TermPtr cur = t;
    std::size_t n = 0;
    while (auto next = beta_step(cur)) {
        cur = *next;
        ++n;
    }
    if (steps) *steps = n;
    return cur;
}

}  // namespace pgr
