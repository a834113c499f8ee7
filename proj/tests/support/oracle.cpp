#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pgr::testing {

std::vector<Morphism> brute_force_matches(const PortGraph& lhs, const PortGraph& host) {
    std::vector<NodeId> lids, hids;
    for (const auto& [id, n] : lhs.nodes()) lids.push_back(id);
    for (const auto& [id, n] : host.nodes()) hids.push_back(id);
    std::vector<Morphism> out;
    if (lids.empty() || lids.size() > hids.size()) return out;

    std::vector<NodeId> assign(lids.size());
    std::vector<bool> used(hids.size(), false);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == lids.size()) {
            std::map<NodeId, NodeId> f;
            for (std::size_t k = 0; k < lids.size(); ++k) f[lids[k]] = assign[k];
            for (std::size_t k = 0; k < lids.size(); ++k) {
                const Node& ln = lhs.node(lids[k]);
                const Node& hn = host.node(assign[k]);
                if (ln.name != hn.name || ln.ports != hn.ports) return;
                for (std::uint32_t p = 0; p < ln.ports.size(); ++p) {
                    PortRef q = ln.peers[p];
                    if (q.is_slot()) continue;
                    if (hn.peers[p] != PortRef{f[q.node], q.port}) return;
                }
            }
            out.push_back(Morphism{assign});
            return;
        }
        for (std::size_t h = 0; h < hids.size(); ++h) {
            if (used[h]) continue;
            used[h] = true;
            assign[i] = hids[h];
            go(i + 1);
            used[h] = false;
        }
    };
    go(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::size_t ctx_size(const ProofPtr& p) { return check_proof(p).hypotheses.size(); }

// Exchanges turning hypothesis order `cur` into `target` (both tag lists).
ProofPtr reorder(ProofPtr p, std::vector<int> cur, const std::vector<int>& target) {
    for (std::size_t i = 0; i < target.size(); ++i) {
        std::size_t j = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), target[i]) - cur.begin());
        while (j > i) {
            p = Proof::ex(j - 1, p);
            std::swap(cur[j - 1], cur[j]);
            --j;
        }
    }
    return p;
}

std::vector<int> iota(int from, std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), from);
    return v;
}

ProofPtr weaken_all(ProofPtr p, const std::vector<FormulaPtr>& fs) {
    for (const auto& f : fs) p = Proof::weaken(f, p);
    return p;
}

}  // namespace

ProofPtr substitute_hypothesis(const ProofPtr& p, std::size_t pos, const ProofPtr& q) {
    const auto& ps = p->premises();
    const std::size_t d = ctx_size(q);
    switch (p->rule()) {
        case ProofRule::ax: return q;
        case ProofRule::ex: {
            std::size_t n = ctx_size(ps[0]);
            std::size_t i = p->index();
            std::size_t from = pos == i ? i + 1 : pos == i + 1 ? i : pos;
            ProofPtr r = substitute_hypothesis(ps[0], from, q);
            auto splice = [&](std::vector<int> order) {
                std::vector<int> out;
                for (int t : order) {
                    if (t == static_cast<int>(from)) {
                        auto ds = iota(static_cast<int>(n), d);
                        out.insert(out.end(), ds.begin(), ds.end());
                    } else {
                        out.push_back(t);
                    }
                }
                return out;
            };
            std::vector<int> base = iota(0, n);
            std::vector<int> swapped = base;
            std::swap(swapped[i], swapped[i + 1]);
            return reorder(r, splice(base), splice(swapped));
        }
        case ProofRule::weaken: {
            std::size_t n = ctx_size(ps[0]);
            if (pos == n) return weaken_all(ps[0], check_proof(q).hypotheses);
            return Proof::weaken(p->formula(), substitute_hypothesis(ps[0], pos, q));
        }
        case ProofRule::contract: {
            std::size_t i = p->index();
            if (pos < i) return Proof::contract(i + d - 1, substitute_hypothesis(ps[0], pos, q));
            if (pos > i) return Proof::contract(i, substitute_hypothesis(ps[0], pos + 1, q));
            std::size_t n = ctx_size(ps[0]);
            ProofPtr r = substitute_hypothesis(substitute_hypothesis(ps[0], i + 1, q), i, q);
            // Interleave the two copies of Delta, then contract pairwise.
            std::vector<int> cur = iota(0, i), target = iota(0, i);
            for (std::size_t k = 0; k < d; ++k) cur.push_back(static_cast<int>(n + k));
            for (std::size_t k = 0; k < d; ++k) cur.push_back(static_cast<int>(n + d + k));
            for (std::size_t k = 0; k < d; ++k) {
                target.push_back(static_cast<int>(n + k));
                target.push_back(static_cast<int>(n + d + k));
            }
            for (std::size_t k = i + 2; k < n; ++k) {
                cur.push_back(static_cast<int>(k));
                target.push_back(static_cast<int>(k));
            }
            r = reorder(r, cur, target);
            for (std::size_t k = 0; k < d; ++k) r = Proof::contract(i + k, r);
            return r;
        }
        case ProofRule::and_intro:
        case ProofRule::imp_elim: {
            std::size_t n0 = ctx_size(ps[0]);
            ProofPtr a = ps[0], b = ps[1];
            if (pos < n0) a = substitute_hypothesis(a, pos, q);
            else b = substitute_hypothesis(b, pos - n0, q);
            return p->rule() == ProofRule::and_intro ? Proof::and_intro(a, b) : Proof::imp_elim(a, b);
        }
        case ProofRule::and_elim1: return Proof::and_elim1(substitute_hypothesis(ps[0], pos, q));
        case ProofRule::and_elim2: return Proof::and_elim2(substitute_hypothesis(ps[0], pos, q));
        case ProofRule::imp_intro: return Proof::imp_intro(substitute_hypothesis(ps[0], pos, q));
    }
    throw ProofError("unknown rule");
}

ProofPtr normalise_root(const ProofPtr& p) {
    const auto& ps = p->premises();
    if ((p->rule() == ProofRule::and_elim1 || p->rule() == ProofRule::and_elim2) &&
        ps[0]->rule() == ProofRule::and_intro) {
        ProofPtr left = ps[0]->premises()[0], right = ps[0]->premises()[1];
        auto gamma = check_proof(left).hypotheses;
        auto delta = check_proof(right).hypotheses;
        if (p->rule() == ProofRule::and_elim1) return weaken_all(left, delta);
        ProofPtr r = weaken_all(right, gamma);
        std::vector<int> cur = iota(static_cast<int>(gamma.size()), delta.size());
        auto g = iota(0, gamma.size());
        cur.insert(cur.end(), g.begin(), g.end());
        std::vector<int> target = iota(0, gamma.size() + delta.size());
        return reorder(r, cur, target);
    }
    if (p->rule() == ProofRule::imp_elim && ps[0]->rule() == ProofRule::imp_intro) {
        ProofPtr body = ps[0]->premises()[0];
        return substitute_hypothesis(body, ctx_size(body) - 1, ps[1]);
    }
    throw ProofError("no detour at the root of " + p->str());
}

}  // namespace pgr::testing
