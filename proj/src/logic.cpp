#include "pgr/logic.hpp"

#include <algorithm>

namespace pgr {

FormulaPtr Formula::atom(std::string name) {
    if (name.empty()) throw ProofError("atom names must be nonempty");
    return FormulaPtr(new Formula(Kind::atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
    return FormulaPtr(new Formula(Kind::conj, {}, std::move(a), std::move(b)));
}

FormulaPtr Formula::impl(FormulaPtr a, FormulaPtr b) {
    return FormulaPtr(new Formula(Kind::impl, {}, std::move(a), std::move(b)));
}

std::string Formula::str() const {
    switch (kind_) {
        case Kind::atom: return name_;
        case Kind::conj: {
            // & is left-associative.
            std::string l = left_->kind() == Kind::impl ? "(" + left_->str() + ")" : left_->str();
            std::string r = right_->kind() == Kind::atom ? right_->str() : "(" + right_->str() + ")";
            return l + " & " + r;
        }
        case Kind::impl: {
            std::string l = left_->kind() == Kind::impl ? "(" + left_->str() + ")" : left_->str();
            return l + " -> " + right_->str();
        }
    }
    return {};
}

bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind() != b->kind()) return false;
    if (a->kind() == Formula::Kind::atom) return a->name() == b->name();
    return same_formula(a->left(), b->left()) && same_formula(a->right(), b->right());
}

std::string Sequent::str() const {
    std::string out;
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
        if (i) out += ", ";
        out += hypotheses[i]->str();
    }
    if (!out.empty()) out += " ";
    return out + "|- " + conclusion->str();
}

bool same_sequent(const Sequent& a, const Sequent& b) {
    if (a.hypotheses.size() != b.hypotheses.size() || !same_formula(a.conclusion, b.conclusion)) return false;
    for (std::size_t i = 0; i < a.hypotheses.size(); ++i)
        if (!same_formula(a.hypotheses[i], b.hypotheses[i])) return false;
    return true;
}

std::string_view rule_name(ProofRule r) {
    switch (r) {
        case ProofRule::ax: return "ax";
        case ProofRule::ex: return "ex";
        case ProofRule::weaken: return "w";
        case ProofRule::contract: return "c";
        case ProofRule::and_intro: return "andI";
        case ProofRule::and_elim1: return "andE1";
        case ProofRule::and_elim2: return "andE2";
        case ProofRule::imp_intro: return "impI";
        case ProofRule::imp_elim: return "impE";
    }
    return "?";
}

ProofPtr Proof::ax(FormulaPtr a) { return ProofPtr(new Proof(ProofRule::ax, {}, std::move(a), 0)); }
ProofPtr Proof::ex(std::size_t i, ProofPtr p) { return ProofPtr(new Proof(ProofRule::ex, {std::move(p)}, nullptr, i)); }
ProofPtr Proof::weaken(FormulaPtr a, ProofPtr p) {
    return ProofPtr(new Proof(ProofRule::weaken, {std::move(p)}, std::move(a), 0));
}
ProofPtr Proof::contract(std::size_t i, ProofPtr p) {
    return ProofPtr(new Proof(ProofRule::contract, {std::move(p)}, nullptr, i));
}
ProofPtr Proof::and_intro(ProofPtr p, ProofPtr q) {
    return ProofPtr(new Proof(ProofRule::and_intro, {std::move(p), std::move(q)}, nullptr, 0));
}
ProofPtr Proof::and_elim1(ProofPtr p) { return ProofPtr(new Proof(ProofRule::and_elim1, {std::move(p)}, nullptr, 0)); }
ProofPtr Proof::and_elim2(ProofPtr p) { return ProofPtr(new Proof(ProofRule::and_elim2, {std::move(p)}, nullptr, 0)); }
ProofPtr Proof::imp_intro(ProofPtr p) { return ProofPtr(new Proof(ProofRule::imp_intro, {std::move(p)}, nullptr, 0)); }
ProofPtr Proof::imp_elim(ProofPtr p, ProofPtr q) {
    return ProofPtr(new Proof(ProofRule::imp_elim, {std::move(p), std::move(q)}, nullptr, 0));
}

std::string Proof::str() const {
    std::string name(rule_name(rule_));
    switch (rule_) {
        case ProofRule::ax: return name + "(" + formula_->str() + ")";
        case ProofRule::ex:
        case ProofRule::contract: return name + "(" + std::to_string(index_) + ", " + premises_[0]->str() + ")";
        case ProofRule::weaken: return name + "(" + formula_->str() + ", " + premises_[0]->str() + ")";
        default: break;
    }
    std::string out = name + "(";
    for (std::size_t i = 0; i < premises_.size(); ++i) {
        if (i) out += ", ";
        out += premises_[i]->str();
    }
    return out + ")";
}

namespace {

[[noreturn]] void reject(const Proof& p, const std::string& why) {
    std::string text = p.str();
    if (text.size() > 120) text = text.substr(0, 117) + "...";
    throw ProofError("rule " + std::string(rule_name(p.rule())) + " is ill-formed at " + text + ": " + why);
}

Sequent check(const Proof& p) {
    auto premise = [&](std::size_t k) -> Sequent {
        if (p.premises().size() <= k || !p.premises()[k]) reject(p, "missing premise");
        return check(*p.premises()[k]);
    };
    std::size_t expected = 1;
    if (p.rule() == ProofRule::ax) expected = 0;
    if (p.rule() == ProofRule::and_intro || p.rule() == ProofRule::imp_elim) expected = 2;
    if (p.premises().size() != expected) reject(p, "wrong number of premises");

    switch (p.rule()) {
        case ProofRule::ax:
            if (!p.formula()) reject(p, "missing formula");
            return {{p.formula()}, p.formula()};
        case ProofRule::ex: {
            Sequent s = premise(0);
            if (p.index() + 1 >= s.hypotheses.size()) reject(p, "position out of range in " + s.str());
            std::swap(s.hypotheses[p.index()], s.hypotheses[p.index() + 1]);
            return s;
        }
        case ProofRule::weaken: {
            if (!p.formula()) reject(p, "missing formula");
            Sequent s = premise(0);
            s.hypotheses.push_back(p.formula());
            return s;
        }
        case ProofRule::contract: {
            Sequent s = premise(0);
            std::size_t i = p.index();
            if (i + 1 >= s.hypotheses.size()) reject(p, "position out of range in " + s.str());
            if (!same_formula(s.hypotheses[i], s.hypotheses[i + 1]))
                reject(p, "hypotheses " + std::to_string(i) + " and " + std::to_string(i + 1) + " differ in " + s.str());
            s.hypotheses.erase(s.hypotheses.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            return s;
        }
        case ProofRule::and_intro: {
            Sequent a = premise(0), b = premise(1);
            a.hypotheses.insert(a.hypotheses.end(), b.hypotheses.begin(), b.hypotheses.end());
            a.conclusion = Formula::conj(a.conclusion, b.conclusion);
            return a;
        }
        case ProofRule::and_elim1:
        case ProofRule::and_elim2: {
            Sequent s = premise(0);
            if (s.conclusion->kind() != Formula::Kind::conj) reject(p, "conclusion " + s.conclusion->str() + " is not a conjunction");
            s.conclusion = p.rule() == ProofRule::and_elim1 ? s.conclusion->left() : s.conclusion->right();
            return s;
        }
        case ProofRule::imp_intro: {
            Sequent s = premise(0);
            if (s.hypotheses.empty()) reject(p, "no hypothesis to discharge");
            FormulaPtr a = s.hypotheses.back();
            s.hypotheses.pop_back();
            s.conclusion = Formula::impl(a, s.conclusion);
            return s;
        }
        case ProofRule::imp_elim: {
            Sequent f = premise(0), a = premise(1);
            if (f.conclusion->kind() != Formula::Kind::impl) reject(p, "conclusion " + f.conclusion->str() + " is not an implication");
            if (!same_formula(f.conclusion->left(), a.conclusion))
                reject(p, "argument proves " + a.conclusion->str() + " but " + f.conclusion->left()->str() + " is required");
            f.hypotheses.insert(f.hypotheses.end(), a.hypotheses.begin(), a.hypotheses.end());
            f.conclusion = f.conclusion->right();
            return f;
        }
    }
    reject(p, "unknown rule");
}

}  // namespace

Sequent check_proof(const ProofPtr& p) {
    if (!p) throw ProofError("empty proof");
    return check(*p);
}

std::size_t proof_depth(const ProofPtr& p) {
    std::size_t d = 0;
    for (const auto& q : p->premises()) d = std::max(d, proof_depth(q));
    return d + 1;
}

}  // namespace pgr
