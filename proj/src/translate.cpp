#include "pgr/logic.hpp"

namespace pgr {

namespace {

// Open ends of a partially built graph: node ports still waiting for a peer.
struct Ends {
    std::vector<PortRef> hyps;
    PortRef concl;
    Sequent seq;
};

class Translator {
public:
    explicit Translator(const TranslateOptions& o) : opts_(o) {}

    PortGraph run(const Proof& p) {
        Ends e = go(p, std::nullopt);
        for (std::size_t i = 0; i < e.hyps.size(); ++i) {
            std::size_t s = ed_.add_slot(SlotKind::hypothesis, e.seq.hypotheses[i]->str());
            ed_.link(PortRef::slot(s), e.hyps[i]);
        }
        std::size_t c = ed_.add_slot(SlotKind::conclusion, e.seq.conclusion->str());
        ed_.link(PortRef::slot(c), e.concl);
        if (!opts_.materialise_axioms) {
            for (NodeId id : ed_.view().ids_named(names::axiom)) {
                const Node& n = ed_.view().node(id);
                PortRef a = n.peers[0], b = n.peers[1];
                ed_.remove_node(id);
                ed_.link(a, b);
            }
        }
        return compact_ids(ed_.finish());
    }

private:
    NodeId make(std::string_view name, std::vector<PortSpec> ports, std::optional<NodeId> scope,
                std::vector<std::string> labels) {
        NodeId id = ed_.add_node(std::string(name), std::move(ports), scope);
        for (std::uint32_t i = 0; i < labels.size(); ++i) ed_.set_label({id, i}, std::move(labels[i]));
        return id;
    }

    Ends go(const Proof& p, std::optional<NodeId> scope) {
        switch (p.rule()) {
            case ProofRule::ax: {
                std::string a = p.formula()->str();
                NodeId n = make(names::axiom, standard_ports(names::axiom), scope, {a, a});
                return {{PortRef{n, 0}}, PortRef{n, 1}, {{p.formula()}, p.formula()}};
            }
            case ProofRule::ex: {
                Ends e = go(*p.premises()[0], scope);
                std::size_t i = p.index();
                if (i + 1 >= e.hyps.size()) throw ProofError("ex position out of range");
                std::swap(e.hyps[i], e.hyps[i + 1]);
                std::swap(e.seq.hypotheses[i], e.seq.hypotheses[i + 1]);
                return e;
            }
            case ProofRule::weaken: {
                Ends e = go(*p.premises()[0], scope);
                NodeId w = make(names::weakening, standard_ports(names::weakening), scope, {p.formula()->str()});
                e.hyps.push_back({w, ports::principal});
                e.seq.hypotheses.push_back(p.formula());
                return e;
            }
            case ProofRule::contract: {
                Ends e = go(*p.premises()[0], scope);
                std::size_t i = p.index();
                if (i + 1 >= e.hyps.size() || !same_formula(e.seq.hypotheses[i], e.seq.hypotheses[i + 1]))
                    throw ProofError("ill-formed contraction");
                std::string a = e.seq.hypotheses[i]->str();
                NodeId c = make(names::contraction, standard_ports(names::contraction), scope, {a, a, a});
                ed_.link({c, ports::out1}, e.hyps[i]);
                ed_.link({c, ports::out2}, e.hyps[i + 1]);
                e.hyps[i] = {c, ports::copy};
                e.hyps.erase(e.hyps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                e.seq.hypotheses.erase(e.seq.hypotheses.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                return e;
            }
            case ProofRule::and_intro: {
                Ends a = go(*p.premises()[0], scope);
                Ends b = go(*p.premises()[1], scope);
                FormulaPtr f = Formula::conj(a.seq.conclusion, b.seq.conclusion);
                NodeId n = make(names::and_intro, standard_ports(names::and_intro), scope,
                                {f->str(), a.seq.conclusion->str(), b.seq.conclusion->str()});
                ed_.link({n, ports::left}, a.concl);
                ed_.link({n, ports::right}, b.concl);
                a.hyps.insert(a.hyps.end(), b.hyps.begin(), b.hyps.end());
                a.seq.hypotheses.insert(a.seq.hypotheses.end(), b.seq.hypotheses.begin(), b.seq.hypotheses.end());
                a.concl = {n, ports::conclusion};
                a.seq.conclusion = f;
                return a;
            }
            case ProofRule::and_elim1:
            case ProofRule::and_elim2: {
                Ends e = go(*p.premises()[0], scope);
                const FormulaPtr& f = e.seq.conclusion;
                if (f->kind() != Formula::Kind::conj) throw ProofError("andE over a non-conjunction");
                bool first = p.rule() == ProofRule::and_elim1;
                FormulaPtr out = first ? f->left() : f->right();
                NodeId n = make(first ? names::and_elim1 : names::and_elim2, standard_ports(first ? names::and_elim1 : names::and_elim2),
                                scope, {out->str(), f->str()});
                ed_.link({n, ports::premise}, e.concl);
                e.concl = {n, ports::conclusion};
                e.seq.conclusion = out;
                return e;
            }
            case ProofRule::imp_intro: {
                Sequent inner = check_proof(p.premises()[0]);
                if (inner.hypotheses.empty()) throw ProofError("impI without hypothesis");
                std::size_t n = inner.hypotheses.size() - 1;
                FormulaPtr f = Formula::impl(inner.hypotheses.back(), inner.conclusion);
                NodeId imp = make(names::imp_intro, imp_intro_ports(n > 0), scope,
                                  {f->str(), inner.conclusion->str(), inner.hypotheses.back()->str()});
                std::optional<NodeId> s;
                if (n > 0) {
                    std::vector<std::string> labels{""};
                    for (std::size_t k = 0; k < n; ++k) {
                        labels.push_back(inner.hypotheses[k]->str());
                        labels.push_back(inner.hypotheses[k]->str());
                    }
                    s = make(names::scope, scope_ports(n), scope, labels);
                    ed_.link({imp, ports::scope}, {*s, ports::principal});
                }
                Ends e = go(*p.premises()[0], s ? s : scope);
                ed_.link({imp, ports::body}, e.concl);
                ed_.link({imp, ports::binder}, e.hyps.back());
                e.hyps.pop_back();
                e.seq.hypotheses.pop_back();
                for (std::size_t k = 0; k < n; ++k) {
                    ed_.link({*s, ports::scope_in(k)}, e.hyps[k]);
                    e.hyps[k] = {*s, ports::scope_out(k)};
                }
                e.concl = {imp, ports::conclusion};
                e.seq.conclusion = f;
                return e;
            }
            case ProofRule::imp_elim: {
                Ends a = go(*p.premises()[0], scope);
                Ends b = go(*p.premises()[1], scope);
                const FormulaPtr& f = a.seq.conclusion;
                if (f->kind() != Formula::Kind::impl || !same_formula(f->left(), b.seq.conclusion))
                    throw ProofError("ill-formed impE");
                NodeId n = make(names::imp_elim, standard_ports(names::imp_elim), scope,
                                {f->right()->str(), f->str(), b.seq.conclusion->str()});
                ed_.link({n, ports::function}, a.concl);
                ed_.link({n, ports::argument}, b.concl);
                a.hyps.insert(a.hyps.end(), b.hyps.begin(), b.hyps.end());
                a.seq.hypotheses.insert(a.seq.hypotheses.end(), b.seq.hypotheses.begin(), b.seq.hypotheses.end());
                a.concl = {n, ports::conclusion};
                a.seq.conclusion = f->right();
                return a;
            }
        }
        throw ProofError("unknown rule");
    }

    const TranslateOptions& opts_;
    GraphEditor ed_;
};

}  // namespace

PortGraph translate(const ProofPtr& p, const TranslateOptions& opts) {
    check_proof(p);
    return Translator(opts).run(*p);
}

ProofStats proof_size_stats(const ProofPtr& p) {
    ProofStats st;
    std::vector<const Proof*> stack{p.get()};
    while (!stack.empty()) {
        const Proof* q = stack.back();
        stack.pop_back();
        ++st.rules[std::string(rule_name(q->rule()))];
        for (const auto& r : q->premises()) stack.push_back(r.get());
    }
    st.nodes = translate(p).node_count();
    return st;
}

}  // namespace pgr
