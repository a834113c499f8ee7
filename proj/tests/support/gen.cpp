#include "gen.hpp"

#include <algorithm>

namespace pgr::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Moves hypothesis j to the end with exchanges.
ProofPtr move_last(ProofPtr p, std::size_t j, std::size_t n) {
    for (; j + 1 < n; ++j) p = Proof::ex(j, p);
    return p;
}

class ProofGen {
public:
    ProofGen(Rng& rng, const ProofGenOptions& o) : rng_(rng), opts_(o) {}

    FormulaPtr small() { return random_formula(rng_, pick(rng_, 2), opts_.atoms); }

    ProofPtr prove(const FormulaPtr& goal, std::size_t budget) {
        if (budget <= 1 || coin(rng_, 0.12)) return Proof::ax(goal);
        std::size_t b = budget - 1;
        switch (pick(rng_, 9)) {
            case 0:
            case 1:
                if (goal->kind() == Formula::Kind::conj) return Proof::and_intro(prove(goal->left(), b), prove(goal->right(), b));
                if (goal->kind() == Formula::Kind::impl) return intro_imp(goal, b);
                return prove(goal, budget);
            case 2: return Proof::and_elim1(prove(Formula::conj(goal, small()), b));
            case 3: return Proof::and_elim2(prove(Formula::conj(small(), goal), b));
            case 4: {
                FormulaPtr x = small();
                return Proof::imp_elim(prove(Formula::impl(x, goal), b), prove(x, b));
            }
            case 5: return Proof::weaken(small(), prove(goal, b));
            case 6: {
                ProofPtr p = prove(goal, b);
                auto hs = check_proof(p).hypotheses;
                for (std::size_t i = 0; i + 1 < hs.size(); ++i)
                    if (same_formula(hs[i], hs[i + 1])) return Proof::contract(i, p);
                if (!hs.empty() && budget >= 3) return Proof::contract(hs.size() - 1, Proof::weaken(hs.back(), p));
                return p;
            }
            case 7: {
                ProofPtr p = prove(goal, b);
                auto n = check_proof(p).hypotheses.size();
                return n >= 2 ? Proof::ex(pick(rng_, n - 1), p) : p;
            }
            default:
                if (goal->kind() == Formula::Kind::impl) return intro_imp(goal, b);
                if (goal->kind() == Formula::Kind::conj) return Proof::and_intro(prove(goal->left(), b), prove(goal->right(), b));
                return Proof::ax(goal);
        }
    }

    // Proof of `hyp` ... |- goal whose last hypothesis is `hyp`.
    ProofPtr with_last(const FormulaPtr& hyp, const FormulaPtr& goal, std::size_t budget) {
        ProofPtr p = prove(goal, budget);
        auto hs = check_proof(p).hypotheses;
        std::vector<std::size_t> hits;
        for (std::size_t j = 0; j < hs.size(); ++j)
            if (same_formula(hs[j], hyp)) hits.push_back(j);
        if (hits.empty() || coin(rng_, 0.2)) return Proof::weaken(hyp, p);
        return move_last(p, hits[pick(rng_, hits.size())], hs.size());
    }

    ProofPtr intro_imp(const FormulaPtr& goal, std::size_t b) {
        return Proof::imp_intro(with_last(goal->left(), goal->right(), b));
    }

private:
    Rng& rng_;
    const ProofGenOptions& opts_;
};

}  // namespace

FormulaPtr random_formula(Rng& rng, std::size_t connectives, std::size_t atoms) {
    if (connectives == 0) return Formula::atom(std::string(1, static_cast<char>('A' + pick(rng, atoms))));
    std::size_t left = pick(rng, connectives);
    FormulaPtr l = random_formula(rng, left, atoms);
    FormulaPtr r = random_formula(rng, connectives - 1 - left, atoms);
    return coin(rng, 0.5) ? Formula::conj(l, r) : Formula::impl(l, r);
}

ProofPtr random_proof(Rng& rng, const ProofGenOptions& opts) {
    ProofGen g(rng, opts);
    for (;;) {
        FormulaPtr goal = random_formula(rng, pick(rng, 3), opts.atoms);
        ProofPtr p = g.prove(goal, opts.max_depth);
        if (proof_depth(p) <= opts.max_depth) return p;
    }
}

ProofPtr random_detour(Rng& rng, DetourKind kind, const ProofGenOptions& opts) {
    ProofGen g(rng, opts);
    std::size_t inner = opts.max_depth >= 3 ? opts.max_depth - 2 : 1;
    for (;;) {
        FormulaPtr a = random_formula(rng, pick(rng, 2), opts.atoms);
        FormulaPtr b = random_formula(rng, pick(rng, 2), opts.atoms);
        ProofPtr p;
        if (kind == DetourKind::imp) {
            p = Proof::imp_elim(Proof::imp_intro(g.with_last(a, b, inner)), g.prove(a, opts.max_depth - 1));
        } else {
            ProofPtr pair = Proof::and_intro(g.prove(a, inner), g.prove(b, inner));
            p = kind == DetourKind::and1 ? Proof::and_elim1(pair) : Proof::and_elim2(pair);
        }
        if (proof_depth(p) <= opts.max_depth) return p;
    }
}

namespace {

class TermGen {
public:
    explicit TermGen(Rng& rng) : rng_(rng) {}

    TermPtr make(std::vector<std::string> vars, std::size_t budget) {
        if (vars.size() == 1 && (budget <= 1 || coin(rng_, 0.3))) return Term::var(vars[0]);
        if (vars.empty() && budget <= 2) return identity();
        if (budget <= 2 && vars.size() >= 2) return split(std::move(vars), budget);
        if (coin(rng_, 0.45) || vars.empty()) {
            std::string x = fresh();
            vars.push_back(x);
            std::shuffle(vars.begin(), vars.end(), rng_);
            return Term::abs(x, make(std::move(vars), budget - 1));
        }
        return split(std::move(vars), budget);
    }

private:
    TermPtr identity() {
        std::string x = fresh();
        return Term::abs(x, Term::var(x));
    }

    TermPtr split(std::vector<std::string> vars, std::size_t budget) {
        std::shuffle(vars.begin(), vars.end(), rng_);
        std::size_t cut = vars.empty() ? 0 : pick(rng_, vars.size() + 1);
        std::vector<std::string> f(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<std::string> a(vars.begin() + static_cast<std::ptrdiff_t>(cut), vars.end());
        std::size_t rest = budget > 2 ? budget - 1 : 1;
        std::size_t fb = std::max<std::size_t>(1, rest / 2);
        TermPtr fun;
        if (coin(rng_, 0.5)) {
            // Bias towards redexes: the function is an abstraction.
            std::string x = fresh();
            f.push_back(x);
            fun = Term::abs(x, make(std::move(f), fb));
        } else {
            fun = make(std::move(f), fb);
        }
        return Term::app(fun, make(std::move(a), std::max<std::size_t>(1, rest - fb)));
    }

    std::string fresh() { return "x" + std::to_string(counter_++); }

    Rng& rng_;
    std::size_t counter_ = 0;
};

}  // namespace

TermPtr random_linear_term(Rng& rng, std::size_t max_size) {
    for (;;) {
        TermGen g(rng);
        std::vector<std::string> free;
        std::size_t nfree = pick(rng, 3);
        for (std::size_t i = 0; i < nfree; ++i) free.push_back(std::string(1, static_cast<char>('u' + i)));
        TermPtr t = g.make(free, 2 + pick(rng, max_size > 2 ? max_size - 2 : 1));
        if (t->size() <= max_size) return t;
    }
}

}  // namespace pgr::testing
