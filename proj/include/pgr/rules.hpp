#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pgr/rewrite.hpp"

namespace pgr {

enum class Mode { global, small_step };
std::string_view to_string(Mode m);
Mode mode_from_string(std::string_view s);

// One entry of the catalogue. Fixed-pattern rules rewrite with apply_rule;
// meta-rules (global erase/copy of an implication) only use the lhs to find
// their anchor nodes and rewrite with a custom function.
struct CatalogueRule {
    std::string name;
    RewriteRule rule;
    std::function<PortGraph(const PortGraph&, const Morphism&)> meta;

    bool is_meta() const { return static_cast<bool>(meta); }
    PortGraph apply(const PortGraph& host, const Morphism& m) const;
};

// Fixed rules.
RewriteRule beta_and(int which);              // 1 or 2
RewriteRule beta_imp(std::size_t arity);      // 0: closed implication
std::vector<RewriteRule> cw_simplify();       // both output ports
RewriteRule erase_global(std::string_view alpha);  // alpha != impI, s
RewriteRule copy_global(std::string_view alpha);
RewriteRule epsilon_rule(std::string_view alpha);  // eps meets alpha's port 0
RewriteRule epsilon_imp_scope(std::size_t arity);  // eps at impI + s_n
RewriteRule epsilon_weak_imp(std::size_t arity);   // W at impI (+ s_n), small step
RewriteRule delta_rule(std::string_view alpha);
RewriteRule delta_imp_scope(std::size_t arity);    // delta at impI + s_n
RewriteRule delta_copy_imp(std::size_t arity);     // C at impI (+ s_n), small step

// Meta-rules on the scope extent of an implication.
PortGraph erase_implication(const PortGraph& host, NodeId eraser, NodeId imp);
PortGraph copy_implication(const PortGraph& host, NodeId copier, NodeId imp);

// Nodes of the sub-derivation enclosed by an implication: everything
// reachable from its body, binder and scope inputs without crossing the
// implication or its s node. Throws IntegrityError when the region leaks.
std::vector<NodeId> scope_extent(const PortGraph& g, NodeId imp);

// An eps (or delta) on every interface port. With delta, slot i becomes the
// slots 2i (delta's a side) and 2i+1 (b side), keeping kind and label; with
// eps the interface becomes empty.
PortGraph attach_to_interface(const PortGraph& g, std::string_view agent);

class RuleCatalogue {
public:
    // beta + cw + structural rules of the mode.
    static RuleCatalogue logic(Mode m);
    // Structural rules of the mode only (no beta).
    static RuleCatalogue structural(Mode m);
    static RuleCatalogue epsilon();
    static RuleCatalogue delta();
    static RuleCatalogue lambda();

    // Inverse of label() for the catalogues built by the factories above.
    static RuleCatalogue from_label(std::string_view label);

    // Keeps rules whose name matches one of the patterns; a trailing `*`
    // matches any suffix.
    RuleCatalogue filtered(const std::vector<std::string>& patterns) const;

    // Rules that can fire on `g`: the fixed rules plus the s-arity
    // instances for every arity of s node present.
    std::vector<std::shared_ptr<const CatalogueRule>> rules_for(const PortGraph& g) const;

    // Distinct rule names, sorted.
    std::vector<std::string> names() const;
    std::string_view label() const { return label_; }

    RuleCatalogue(const RuleCatalogue& other);
    RuleCatalogue& operator=(const RuleCatalogue&) = delete;

private:
    using Family = std::function<std::vector<CatalogueRule>(std::size_t)>;
    RuleCatalogue() = default;
    void add(CatalogueRule r);
    void add_family(Family f);
    bool keep(const std::string& name) const;

    std::string label_;
    std::vector<std::shared_ptr<const CatalogueRule>> fixed_;
    std::vector<Family> families_;
    std::vector<std::string> patterns_;  // empty: keep all
    mutable std::mutex mu_;
    mutable std::map<std::size_t, std::vector<std::shared_ptr<const CatalogueRule>>> per_arity_;
};

}  // namespace pgr
