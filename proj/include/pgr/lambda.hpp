#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgr/graph.hpp"
#include "pgr/logic.hpp"
#include "pgr/rewrite.hpp"

namespace pgr {

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    enum class Kind { var, abs, app };

    static TermPtr var(std::string name);
    static TermPtr abs(std::string name, TermPtr body);
    static TermPtr app(TermPtr fun, TermPtr arg);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }  // var name or binder
    const TermPtr& body() const { return a_; }          // abs
    const TermPtr& fun() const { return a_; }           // app
    const TermPtr& arg() const { return b_; }           // app

    // `\x y. y x` style with minimal parentheses.
    std::string str() const;
    std::size_t size() const;  // constructor count

private:
    Term(Kind k, std::string n, TermPtr a, TermPtr b)
        : kind_(k), name_(std::move(n)), a_(std::move(a)), b_(std::move(b)) {}
    Kind kind_;
    std::string name_;
    TermPtr a_, b_;
};

bool alpha_equivalent(const TermPtr& a, const TermPtr& b);

// Free variables in left-to-right occurrence order; throws LinearityError
// naming the variable when some binder is used other than once or a free
// variable is shared between the two sides of an application.
std::vector<std::string> check_linear(const TermPtr& t);

// Interface: one slot per free variable (occurrence order), then the root.
PortGraph translate_term(const TermPtr& t);

// app.fun wired to lam.root: both deleted, binder wire joined to the
// argument wire, body wire joined to the root wire.
RewriteRule beta_rule();

// Capture-free substitution t[x := u] for linear terms.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u);
std::size_t count_beta_redexes(const TermPtr& t);
// One leftmost-outermost beta step, or nullopt in normal form.
std::optional<TermPtr> beta_step(const TermPtr& t);
TermPtr normalise_term(const TermPtr& t, std::size_t* steps = nullptr);

enum class RenameDirection { to_lambda, to_logic };

// impI <-> lam and impE <-> app. s nodes are dropped going to lambda and
// synthesised from the binding structure going to logic. Throws GraphError
// listing the nodes outside the linear fragment.
PortGraph curry_howard_rename(const PortGraph& g, RenameDirection dir);

// A proof whose translation renames to translate_term(t): types are
// inferred with one atom per unconstrained type variable; free variables
// become hypotheses in occurrence order.
ProofPtr term_to_proof(const TermPtr& t);

}  // namespace pgr
