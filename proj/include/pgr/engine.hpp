#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pgr/rules.hpp"
#include "pgr/serialize.hpp"

namespace pgr {

struct Redex {
    std::string id;                // rule name + ':' + sorted footprint ids
    std::string rule;
    std::vector<NodeId> footprint; // sorted
    Morphism match;
    std::shared_ptr<const CatalogueRule> impl;
};

std::string redex_id(const std::string& rule, const std::vector<NodeId>& footprint);

// Every redex of the catalogue in `g`, ordered by footprint then rule name.
// Symmetric matches of the same nodes are reported once.
std::vector<Redex> list_redexes(const PortGraph& g, const RuleCatalogue& cat);

PortGraph fire(const PortGraph& g, const Redex& r);

enum class StrategyKind {
    lowest_id,   // smallest footprint first
    innermost,   // farthest from the root slot first
    outermost,   // closest to the root slot first
};
std::string_view to_string(StrategyKind k);
StrategyKind strategy_from_string(std::string_view s);

struct Strategy {
    StrategyKind kind = StrategyKind::lowest_id;
    std::vector<std::string> rule_filter;  // empty: every rule of the catalogue
    std::size_t step_limit = 10000;
};

// Index into `redexes` of the strategy's choice; redexes must be nonempty.
std::size_t choose(const PortGraph& g, const std::vector<Redex>& redexes, StrategyKind kind);

struct TraceStep {
    std::string rule;
    std::vector<NodeId> footprint;
    std::string hash;  // content hash of the graph after the step
};

enum class Outcome { normal_form, step_limit, stopped };

struct Trace {
    PortGraph initial;
    std::vector<TraceStep> steps;
    PortGraph final_graph;
    Outcome outcome = Outcome::normal_form;
    std::string catalogue;  // label of the catalogue used

    std::size_t size() const { return steps.size(); }
};

Trace normalise(const PortGraph& g, const RuleCatalogue& cat, const Strategy& strategy = {});

// Re-fires every step by rule name and footprint, checking each hash.
// Throws RedexError at the first step that cannot be reproduced.
PortGraph replay(const Trace& t, const RuleCatalogue& cat);

// Document: catalogue label, initial graph, steps, final hash, outcome.
Json trace_to_json(const Trace& t);
// Rebuilds the final graph by replay; throws RedexError when the steps or
// the final hash do not reproduce.
Trace trace_from_json(const Json& doc);

// An interactively steered reduction with undo.
class Session {
public:
    Session(PortGraph g, RuleCatalogue cat, std::size_t step_limit = 10000);

    const PortGraph& current() const { return history_.back(); }
    const std::vector<Redex>& redexes() const { return redexes_; }
    const RuleCatalogue& catalogue() const { return cat_; }
    std::size_t steps() const { return trace_.size(); }

    // Throws RedexError for an unknown or stale id, leaving the session unchanged.
    void step(const std::string& redex_id);
    // Fires the strategy's choice; false in normal form.
    bool step_auto(StrategyKind kind = StrategyKind::lowest_id);
    // Throws Error when there is nothing to undo.
    void undo();
    Trace trace() const;

private:
    void refresh();

    RuleCatalogue cat_;
    std::size_t step_limit_;
    std::vector<PortGraph> history_;
    std::vector<TraceStep> trace_;
    std::vector<Redex> redexes_;
};

}  // namespace pgr
