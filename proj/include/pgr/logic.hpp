#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgr/graph.hpp"

namespace pgr {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    enum class Kind { atom, conj, impl };

    static FormulaPtr atom(std::string name);
    static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr impl(FormulaPtr a, FormulaPtr b);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const FormulaPtr& left() const { return left_; }
    const FormulaPtr& right() const { return right_; }

    // `A & B`, `A -> B`; & binds tighter, -> associates to the right.
    std::string str() const;

private:
    Formula(Kind k, std::string n, FormulaPtr l, FormulaPtr r)
        : kind_(k), name_(std::move(n)), left_(std::move(l)), right_(std::move(r)) {}
    Kind kind_;
    std::string name_;
    FormulaPtr left_, right_;
};

bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

struct Sequent {
    std::vector<FormulaPtr> hypotheses;
    FormulaPtr conclusion;

    std::string str() const;  // `A, B |- C`
};

bool same_sequent(const Sequent& a, const Sequent& b);

class Proof;
using ProofPtr = std::shared_ptr<const Proof>;

enum class ProofRule { ax, ex, weaken, contract, and_intro, and_elim1, and_elim2, imp_intro, imp_elim };

std::string_view rule_name(ProofRule r);

class Proof {
public:
    static ProofPtr ax(FormulaPtr a);
    static ProofPtr ex(std::size_t i, ProofPtr p);        // swaps hypotheses i, i+1
    static ProofPtr weaken(FormulaPtr a, ProofPtr p);     // appends hypothesis a
    static ProofPtr contract(std::size_t i, ProofPtr p);  // merges hypotheses i, i+1
    static ProofPtr and_intro(ProofPtr p, ProofPtr q);
    static ProofPtr and_elim1(ProofPtr p);
    static ProofPtr and_elim2(ProofPtr p);
    static ProofPtr imp_intro(ProofPtr p);  // discharges the last hypothesis
    static ProofPtr imp_elim(ProofPtr p, ProofPtr q);

    ProofRule rule() const { return rule_; }
    const std::vector<ProofPtr>& premises() const { return premises_; }
    const FormulaPtr& formula() const { return formula_; }
    std::size_t index() const { return index_; }

    // Concrete syntax, e.g. `c(0, andI(andE2(ax(A & B)), andE1(ax(A & B))))`.
    std::string str() const;

private:
    Proof(ProofRule r, std::vector<ProofPtr> ps, FormulaPtr f, std::size_t i)
        : rule_(r), premises_(std::move(ps)), formula_(std::move(f)), index_(i) {}
    ProofRule rule_;
    std::vector<ProofPtr> premises_;
    FormulaPtr formula_;
    std::size_t index_ = 0;
};

// End-sequent of a proof; throws ProofError naming the offending subtree.
Sequent check_proof(const ProofPtr& p);

struct TranslateOptions {
    bool materialise_axioms = false;  // keep Ax nodes (display only)
};

// Gr(p): one hypothesis slot per hypothesis in order, then the conclusion.
PortGraph translate(const ProofPtr& p, const TranslateOptions& opts = {});

struct ProofStats {
    std::map<std::string, std::size_t> rules;
    std::size_t nodes = 0;
};
ProofStats proof_size_stats(const ProofPtr& p);

std::size_t proof_depth(const ProofPtr& p);

}  // namespace pgr
