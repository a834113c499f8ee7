#include <map>

#include "pgr/lambda.hpp"

namespace pgr {

namespace {

// Simple types over union-find; an entry with no arrow is a type variable.
class Types {
public:
    int fresh() {
        parent_.push_back(static_cast<int>(parent_.size()));
        arrow_.emplace_back(-1, -1);
        return parent_.back();
    }
    int arrow(int a, int b) {
        int t = fresh();
        arrow_[t] = {a, b};
        return t;
    }
    int find(int t) {
        while (parent_[t] != t) t = parent_[t] = parent_[parent_[t]];
        return t;
    }
    void unify(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        bool va = arrow_[a].first < 0, vb = arrow_[b].first < 0;
        if (va) {
            if (occurs(a, b)) throw LinearityError("term is not simply typable");
            parent_[a] = b;
        } else if (vb) {
            if (occurs(b, a)) throw LinearityError("term is not simply typable");
            parent_[b] = a;
        } else {
            auto [al, ar] = arrow_[a];
            auto [bl, br] = arrow_[b];
            parent_[a] = b;
            unify(al, bl);
            unify(ar, br);
        }
    }
    FormulaPtr formula(int t) {
        t = find(t);
        if (arrow_[t].first < 0) {
            auto it = atoms_.find(t);
            if (it != atoms_.end()) return it->second;
            std::size_t k = atoms_.size();
            std::string name(1, static_cast<char>('A' + k % 26));
            if (k >= 26) name += std::to_string(k / 26);
            return atoms_[t] = Formula::atom(name);
        }
        auto [l, r] = arrow_[t];
        return Formula::impl(formula(l), formula(r));
    }

private:
    bool occurs(int v, int t) {
        t = find(t);
        if (t == v) return true;
        if (arrow_[t].first < 0) return false;
        return occurs(v, arrow_[t].first) || occurs(v, arrow_[t].second);
    }
    std::vector<int> parent_;
    std::vector<std::pair<int, int>> arrow_;
    std::map<int, FormulaPtr> atoms_;
};

struct Typed {
    const Term* term;
    int type;
    std::vector<Typed> kids;
};

Typed infer(const Term& t, std::map<std::string, int>& env, Types& ty) {
    switch (t.kind()) {
        case Term::Kind::var: {
            auto it = env.find(t.name());
            if (it == env.end()) it = env.emplace(t.name(), ty.fresh()).first;
            return {&t, it->second, {}};
        }
        case Term::Kind::abs: {
            int a = ty.fresh();
            auto saved = env.find(t.name()) == env.end() ? std::optional<int>() : std::optional<int>(env[t.name()]);
            env[t.name()] = a;
            Typed body = infer(*t.body(), env, ty);
            if (saved) env[t.name()] = *saved;
            else env.erase(t.name());
            int self = ty.arrow(a, body.type);
            return {&t, self, {std::move(body)}};
        }
        case Term::Kind::app: {
            Typed f = infer(*t.fun(), env, ty);
            Typed a = infer(*t.arg(), env, ty);
            int r = ty.fresh();
            ty.unify(f.type, ty.arrow(a.type, r));
            return {&t, r, {std::move(f), std::move(a)}};
        }
    }
    throw LinearityError("unknown term");
}

// Proof of (free variables in occurrence order) |- type.
ProofPtr build(const Typed& n, Types& ty, std::vector<std::string>& ctx) {
    const Term& t = *n.term;
    switch (t.kind()) {
        case Term::Kind::var:
            ctx.push_back(t.name());
            return Proof::ax(ty.formula(n.type));
        case Term::Kind::abs: {
            std::vector<std::string> inner;
            ProofPtr p = build(n.kids[0], ty, inner);
            std::size_t j = 0;
            while (inner[j] != t.name()) ++j;
            for (; j + 1 < inner.size(); ++j) {
                p = Proof::ex(j, p);
                std::swap(inner[j], inner[j + 1]);
            }
            inner.pop_back();
            ctx.insert(ctx.end(), inner.begin(), inner.end());
            return Proof::imp_intro(p);
        }
        case Term::Kind::app: {
            ProofPtr f = build(n.kids[0], ty, ctx);
            ProofPtr a = build(n.kids[1], ty, ctx);
            return Proof::imp_elim(f, a);
        }
    }
    throw LinearityError("unknown term");
}

}  // namespace

ProofPtr term_to_proof(const TermPtr& t) {
    check_linear(t);
    Types ty;
    std::map<std::string, int> env;
    Typed root = infer(*t, env, ty);
    std::vector<std::string> ctx;
    return build(root, ty, ctx);
}

}  // namespace pgr
