#include "pgr/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace pgr {

std::string redex_id(const std::string& rule, const std::vector<NodeId>& footprint) {
    std::string id = rule + ":";
    for (std::size_t i = 0; i < footprint.size(); ++i) {
        if (i) id += ",";
        id += std::to_string(footprint[i]);
    }
    return id;
}

namespace {

// Undirected distance of every node from the last interface slot.
std::map<NodeId, std::size_t> root_distance(const PortGraph& g) {
    std::map<NodeId, std::size_t> dist;
    if (g.interface().empty()) return dist;
    std::deque<std::pair<PortRef, std::size_t>> queue{{g.interface().back().peer, 1}};
    std::set<std::size_t> seen_slots{g.interface().size() - 1};
    while (!queue.empty()) {
        auto [p, d] = queue.front();
        queue.pop_front();
        if (p.is_slot()) {
            if (seen_slots.insert(p.port).second) queue.emplace_back(g.interface()[p.port].peer, d + 1);
            continue;
        }
        if (!dist.emplace(p.node, d).second) continue;
        for (PortRef q : g.node(p.node).peers) queue.emplace_back(q, d + 1);
    }
    return dist;
}

}  // namespace

std::vector<Redex> list_redexes(const PortGraph& g, const RuleCatalogue& cat) {
    std::vector<Redex> out;
    std::set<std::string> seen;
    for (const auto& rule : cat.rules_for(g)) {
        for (auto& m : find_matches(rule->rule.lhs, g)) {
            std::vector<NodeId> fp = m.node_map;
            std::sort(fp.begin(), fp.end());
            std::string id = redex_id(rule->name, fp);
            if (!seen.insert(id).second) continue;
            out.push_back(Redex{std::move(id), rule->name, std::move(fp), std::move(m), rule});
        }
    }
    std::sort(out.begin(), out.end(), [](const Redex& a, const Redex& b) {
        return std::tie(a.footprint, a.rule) < std::tie(b.footprint, b.rule);
    });
    return out;
}

PortGraph fire(const PortGraph& g, const Redex& r) { return r.impl->apply(g, r.match); }

std::string_view to_string(StrategyKind k) {
    switch (k) {
        case StrategyKind::lowest_id: return "lowest-id";
        case StrategyKind::innermost: return "innermost";
        case StrategyKind::outermost: return "outermost";
    }
    return "?";
}

StrategyKind strategy_from_string(std::string_view s) {
    if (s == "lowest-id" || s == "lowest_id" || s == "default") return StrategyKind::lowest_id;
    if (s == "innermost" || s == "leftmost-innermost") return StrategyKind::innermost;
    if (s == "outermost" || s == "leftmost-outermost") return StrategyKind::outermost;
    throw Error("unknown strategy '" + std::string(s) + "' (expected lowest-id, innermost or outermost)");
}

std::size_t choose(const PortGraph& g, const std::vector<Redex>& redexes, StrategyKind kind) {
    if (redexes.empty()) throw RedexError("no redex to choose from");
    if (kind == StrategyKind::lowest_id) return 0;
    auto dist = root_distance(g);
    constexpr std::size_t far = std::numeric_limits<std::size_t>::max();
    auto depth = [&](const Redex& r) {
        std::size_t d = far;
        for (NodeId id : r.footprint) {
            auto it = dist.find(id);
            if (it != dist.end()) d = std::min(d, it->second);
        }
        return d;
    };
    std::size_t best = 0;
    std::size_t best_depth = depth(redexes[0]);
    for (std::size_t i = 1; i < redexes.size(); ++i) {
        std::size_t d = depth(redexes[i]);
        // Unreachable redexes count as innermost and are fired last by outermost.
        bool better = kind == StrategyKind::innermost ? (d != far && (best_depth == far || d > best_depth))
                                                      : d < best_depth;
        if (better) {
            best = i;
            best_depth = d;
        }
    }
    return best;
}

Trace normalise(const PortGraph& g, const RuleCatalogue& cat, const Strategy& strategy) {
    if (strategy.step_limit == 0) throw Error("step limit must be positive");
    RuleCatalogue use = strategy.rule_filter.empty() ? cat : cat.filtered(strategy.rule_filter);
    Trace t;
    t.initial = g;
    t.catalogue = std::string(use.label());
    PortGraph cur = g;
    for (;;) {
        auto rs = list_redexes(cur, use);
        if (rs.empty()) {
            t.outcome = Outcome::normal_form;
            break;
        }
        if (t.steps.size() >= strategy.step_limit) {
            t.outcome = Outcome::step_limit;
            break;
        }
        const Redex& r = rs[choose(cur, rs, strategy.kind)];
        cur = fire(cur, r);
        t.steps.push_back({r.rule, r.footprint, content_hash(cur)});
    }
    t.final_graph = std::move(cur);
    return t;
}

PortGraph replay(const Trace& t, const RuleCatalogue& cat) {
    PortGraph cur = t.initial;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TraceStep& s = t.steps[i];
        std::string want = redex_id(s.rule, s.footprint);
        auto rs = list_redexes(cur, cat);
        auto it = std::find_if(rs.begin(), rs.end(), [&](const Redex& r) { return r.id == want; });
        if (it == rs.end()) throw RedexError("step " + std::to_string(i + 1) + ": redex " + want + " is not available");
        cur = fire(cur, *it);
        if (!s.hash.empty() && content_hash(cur) != s.hash)
            throw RedexError("step " + std::to_string(i + 1) + ": graph hash differs from the recorded one");
    }
    return cur;
}

namespace {

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::normal_form: return "normal-form";
        case Outcome::step_limit: return "step-limit";
        case Outcome::stopped: return "stopped";
    }
    return "?";
}

}  // namespace

Json trace_to_json(const Trace& t) {
    Json doc;
    doc["catalogue"] = t.catalogue;
    doc["initial"] = graph_to_json(t.initial);
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json j;
        j["rule"] = s.rule;
        j["footprint"] = s.footprint;
        j["hash"] = s.hash;
        steps.push_back(j);
    }
    doc["steps"] = steps;
    doc["final_hash"] = content_hash(t.final_graph);
    doc["outcome"] = std::string(outcome_name(t.outcome));
    return doc;
}

Trace trace_from_json(const Json& doc) {
    Trace t;
    try {
        t.catalogue = doc.at("catalogue").get<std::string>();
        t.initial = graph_from_json(doc.at("initial"));
        for (const auto& j : doc.at("steps"))
            t.steps.push_back({j.at("rule").get<std::string>(), j.at("footprint").get<std::vector<NodeId>>(),
                               j.value("hash", std::string())});
        std::string o = doc.value("outcome", std::string("normal-form"));
        t.outcome = o == "step-limit" ? Outcome::step_limit : o == "stopped" ? Outcome::stopped : Outcome::normal_form;
    } catch (const Json::exception& e) {
        throw GraphError(std::string("malformed trace document: ") + e.what());
    }
    t.final_graph = replay(t, RuleCatalogue::from_label(t.catalogue));
    if (doc.contains("final_hash") && content_hash(t.final_graph) != doc["final_hash"].get<std::string>())
        throw RedexError("final graph hash differs from the recorded one");
    return t;
}

Session::Session(PortGraph g, RuleCatalogue cat, std::size_t step_limit)
    : cat_(std::move(cat)), step_limit_(step_limit) {
    if (step_limit_ == 0) throw Error("step limit must be positive");
    history_.push_back(std::move(g));
    refresh();
}

void Session::refresh() { redexes_ = list_redexes(current(), cat_); }

void Session::step(const std::string& redex_id) {
    auto it = std::find_if(redexes_.begin(), redexes_.end(), [&](const Redex& r) { return r.id == redex_id; });
    if (it == redexes_.end()) throw RedexError("no redex with id '" + redex_id + "' in the current graph");
    if (trace_.size() >= step_limit_) throw Error("step limit of " + std::to_string(step_limit_) + " reached");
    PortGraph next = fire(current(), *it);
    trace_.push_back({it->rule, it->footprint, content_hash(next)});
    history_.push_back(std::move(next));
    refresh();
}

bool Session::step_auto(StrategyKind kind) {
    if (redexes_.empty()) return false;
    step(redexes_[choose(current(), redexes_, kind)].id);
    return true;
}

void Session::undo() {
    if (history_.size() < 2) throw Error("nothing to undo");
    history_.pop_back();
    trace_.pop_back();
    refresh();
}

Trace Session::trace() const {
    Trace t;
    t.initial = history_.front();
    t.steps = trace_;
    t.final_graph = current();
    t.outcome = redexes_.empty() ? Outcome::normal_form : Outcome::stopped;
    t.catalogue = std::string(cat_.label());
    return t;
}

}  // namespace pgr
